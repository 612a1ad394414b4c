from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import Callable, Optional, Sequence

from graver_certs.config import get_settings
from graver_certs.core.enums import ExampleName, ExitCode
from graver_certs.services.bipartite import BipartiteShape, enumerate_circuit_walks, walk_to_matrix
from graver_certs.services.certificates import (
    certificate_from_family,
    check_certificate,
    parse_certificate,
    serialize_certificate,
)
from graver_certs.services.construction import (
    build_certificate,
    example_4_4,
    seed_3x4,
    theorem_bound,
)
from graver_certs.services.graver import (
    GraverLimits,
    ResourceLimitError,
    graver_basis,
    graver_basis_oracle,
    graver_complexity,
)
from graver_certs.services.linalg import parse_matrix_text

LOGGER = logging.getLogger(__name__)

STDIO = "-"

_EXAMPLES = {
    ExampleName.SEED_3X4: seed_3x4,
    ExampleName.EXAMPLE_4X4: example_4_4,
}


def _read_text(path: str) -> str:
    if path == STDIO:
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write_text(path: str, text: str) -> None:
    if path == STDIO:
        sys.stdout.write(text)
        return
    Path(path).write_text(text, encoding="utf-8")
    LOGGER.info("wrote %s", path)


def _format_vector(vector: Sequence[int]) -> str:
    return " ".join(str(value) for value in vector)


def _cmd_bound(args: argparse.Namespace) -> int:
    print(theorem_bound(args.t, args.r))
    return ExitCode.OK


def _cmd_certificate(args: argparse.Namespace) -> int:
    family = build_certificate(args.t, args.r)
    _write_text(args.out, serialize_certificate(certificate_from_family(family)))
    return ExitCode.OK


def _cmd_example(args: argparse.Namespace) -> int:
    family = _EXAMPLES[ExampleName(args.name)]()
    _write_text(args.out, serialize_certificate(certificate_from_family(family)))
    return ExitCode.OK


def _cmd_verify(args: argparse.Namespace) -> int:
    report = check_certificate(parse_certificate(_read_text(args.path)))
    sys.stdout.write(report.render())
    return ExitCode.OK if report.valid else ExitCode.INVALID


def _cmd_graver(args: argparse.Namespace) -> int:
    matrix = parse_matrix_text(_read_text(args.matrix))
    limits = GraverLimits.from_settings()
    if args.oracle is not None:
        basis = graver_basis_oracle(matrix, args.oracle, limits)
    else:
        basis = graver_basis(matrix, limits)
    for element in basis.sorted_elements():
        print(_format_vector(element))
    return ExitCode.OK


def _cmd_complexity(args: argparse.Namespace) -> int:
    matrix = parse_matrix_text(_read_text(args.matrix))
    limits = GraverLimits.from_settings()
    if args.max_elems is not None:
        limits = replace(limits, max_elements=args.max_elems)
    print(graver_complexity(matrix, limits))
    return ExitCode.OK


def _cmd_circuits(args: argparse.Namespace) -> int:
    shape = BipartiteShape(args.t, args.r)
    walks = enumerate_circuit_walks(shape, GraverLimits.from_settings())
    print(f"# {len(walks)} signed circuits of K_{shape}")
    for walk in walks:
        rows = walk_to_matrix(walk).rows()
        print(f"{walk}\t" + " / ".join(_format_vector(row) for row in rows))
    return ExitCode.OK


def _positive_int(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graver_certs",
        description="Graver bases and certified lower bounds on the Graver complexity of K_{t,r}.",
    )
    parser.add_argument("--verbose", action="store_true", help="Log debug output to stderr.")
    commands = parser.add_subparsers(dest="command", required=True)

    bound = commands.add_parser("bound", help="Print the proven lower bound for (t, r).")
    bound.add_argument("--t", type=int, required=True)
    bound.add_argument("--r", type=int, required=True)
    bound.set_defaults(handler=_cmd_bound)

    certificate = commands.add_parser("certificate", help="Construct a certificate for (t, r).")
    certificate.add_argument("--t", type=int, required=True)
    certificate.add_argument("--r", type=int, required=True)
    certificate.add_argument("--out", default=STDIO, help="Output path ('-' for stdout).")
    certificate.set_defaults(handler=_cmd_certificate)

    verify = commands.add_parser("verify", help="Check a certificate file ('-' for stdin).")
    verify.add_argument("path")
    verify.set_defaults(handler=_cmd_verify)

    graver = commands.add_parser("graver", help="Print the Graver basis of a matrix file.")
    graver.add_argument("--matrix", required=True)
    graver.add_argument(
        "--oracle",
        type=_positive_int,
        metavar="B",
        help="Use box enumeration over [-B, B] instead of completion.",
    )
    graver.set_defaults(handler=_cmd_graver)

    complexity = commands.add_parser("complexity", help="Print the Graver complexity g(A).")
    complexity.add_argument("--matrix", required=True)
    complexity.add_argument("--max-elems", type=_positive_int, dest="max_elems")
    complexity.set_defaults(handler=_cmd_complexity)

    circuits = commands.add_parser("circuits", help="List the signed circuits of K_{t,r}.")
    circuits.add_argument("--t", type=int, required=True)
    circuits.add_argument("--r", type=int, required=True)
    circuits.set_defaults(handler=_cmd_circuits)

    example = commands.add_parser("example", help="Emit a built-in certificate.")
    example.add_argument("--name", required=True, choices=[name.value for name in ExampleName])
    example.add_argument("--out", default=STDIO, help="Output path ('-' for stdout).")
    example.set_defaults(handler=_cmd_example)
    return parser


def _configure_logging(verbose: bool) -> None:
    settings = get_settings()
    logging.basicConfig(
        level=logging.DEBUG if verbose else settings.log_level,
        format=settings.log_format,
        stream=sys.stderr,
        force=True,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help.
        return exc.code if isinstance(exc.code, int) else int(ExitCode.USAGE)
    _configure_logging(args.verbose)

    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return int(handler(args))
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return int(ExitCode.RESOURCE_LIMIT)
    except (OSError, ValueError) as exc:
        # Parse, circuit and construction errors are all ValueErrors.
        LOGGER.debug("usage error", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return int(ExitCode.USAGE)


if __name__ == "__main__":
    raise SystemExit(main())
