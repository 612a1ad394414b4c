# Services package for the exact computations
