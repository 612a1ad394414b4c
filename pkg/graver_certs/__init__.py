"""
Graver bases and Graver-complexity lower-bound certificates for K_{t,r}.
"""

__all__ = ["__version__"]

__version__ = "0.1.0"
