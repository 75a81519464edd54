"""Command-line front end.

Matrices travel as JSON documents whose entries are scalar strings in the
same grammar the library parses, so exactness survives serialization; the
pretty format is for eyes only and JSON is authoritative.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from .decomp import (
    Block,
    Decomposition,
    block_diagonalize,
    blockwise_trigonalize,
    jordan_decomposition,
    trigonalize,
)
from .errors import (
    DimensionMismatch,
    IncompleteSpectrum,
    InvalidProvidedEigenvalue,
    InvalidStructure,
    NotAnEigenvalue,
    ParseError,
    SingularMatrix,
    SpectrumNotRepresentable,
    UsageError,
    ZeroVector,
)
from .matrices import ExactMatrix
from .scalars import GaussianRational, format_scalar, parse_scalar
from .spectral import Spectrum, SpectrumEntry, spectrum
from .verify import check_decomposition, generate_case, parse_structure

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_REPRESENTABLE = 2
EXIT_CHECK_FAILED = 3

_DECOMPOSERS = {
    "schur": trigonalize,
    "blockdiag": block_diagonalize,
    "blocktri": blockwise_trigonalize,
    "jordan": jordan_decomposition,
}

_USAGE_ERRORS = (
    ParseError,
    UsageError,
    InvalidProvidedEigenvalue,
    IncompleteSpectrum,
    InvalidStructure,
    NotAnEigenvalue,
    DimensionMismatch,
    SingularMatrix,
    ZeroVector,
    OSError,
)


# --- documents -------------------------------------------------------------

def matrix_to_document(matrix: ExactMatrix) -> dict:
    return {"n": matrix.rows, "entries": matrix.entries_str()}


def document_to_matrix(doc) -> ExactMatrix:
    if not isinstance(doc, dict) or "n" not in doc or "entries" not in doc:
        raise ParseError('a matrix document needs the keys "n" and "entries"')
    n = doc["n"]
    entries = doc["entries"]
    if not isinstance(n, int) or n < 1:
        raise ParseError(f"matrix size must be a positive integer, got {n!r}")
    if not isinstance(entries, list) or len(entries) != n:
        raise ParseError(f"expected {n} rows of entries")
    rows = []
    for row in entries:
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"expected square {n}x{n} entries")
        rows.append([parse_scalar(str(item)) for item in row])
    return ExactMatrix(rows)


def spectrum_to_document(spect: Spectrum) -> dict:
    return {
        "entries": [
            {
                "lambda": format_scalar(entry.eigenvalue),
                "multiplicity": entry.multiplicity,
                "geometric": entry.geometric_dim,
                "max_stage": entry.max_stage,
            }
            for entry in spect.entries
        ]
    }


def document_to_spectrum(doc) -> Spectrum:
    if not isinstance(doc, dict) or "entries" not in doc:
        raise ParseError('a spectrum document needs the key "entries"')
    entries = tuple(
        SpectrumEntry(
            parse_scalar(item["lambda"]),
            int(item["multiplicity"]),
            int(item["geometric"]),
            int(item["max_stage"]),
        )
        for item in doc["entries"]
    )
    return Spectrum(entries)


def decomposition_to_document(decomposition: Decomposition) -> dict:
    return {
        "kind": decomposition.kind,
        "V": matrix_to_document(decomposition.V),
        "M": matrix_to_document(decomposition.M),
        "blocks": [
            {"lambda": format_scalar(block.eigenvalue), "size": block.size}
            for block in decomposition.blocks
        ],
    }


def document_to_decomposition(doc) -> Decomposition:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ParseError('a decomposition document needs the key "kind"')
    blocks = tuple(
        Block(parse_scalar(item["lambda"]), int(item["size"]))
        for item in doc["blocks"]
    )
    return Decomposition(
        doc["kind"],
        document_to_matrix(doc["V"]),
        document_to_matrix(doc["M"]),
        blocks,
    )


# --- pretty rendering ------------------------------------------------------

def pretty_matrix(matrix: ExactMatrix, indent: str = "  ") -> str:
    cells = matrix.entries_str()
    if not cells:
        return indent + "(empty)"
    widths = [
        max(len(cells[i][j]) for i in range(matrix.rows))
        for j in range(matrix.cols)
    ]
    lines = [
        indent + "  ".join(cell.rjust(width) for cell, width in zip(row, widths))
        for row in cells
    ]
    return "\n".join(lines)


def _blocks_line(blocks: Sequence[Block]) -> str:
    return "blocks: " + " ".join(
        f"{format_scalar(block.eigenvalue)}:{block.size}" for block in blocks
    )


def _pretty_decomposition(decomposition: Decomposition) -> List[str]:
    lines = [f"kind: {decomposition.kind}"]
    lines.append("V:")
    lines.append(pretty_matrix(decomposition.V))
    lines.append("M:")
    lines.append(pretty_matrix(decomposition.M))
    lines.append(_blocks_line(decomposition.blocks))
    if decomposition.kind == "jordan":
        answer = "yes" if decomposition.is_diagonal_form() else "no"
        lines.append(f"diagonalizable: {answer}")
    return lines


def _pretty_spectrum(spect: Spectrum) -> List[str]:
    return [
        f"lambda={format_scalar(e.eigenvalue)} multiplicity={e.multiplicity} "
        f"geometric={e.geometric_dim} max_stage={e.max_stage}"
        for e in spect.entries
    ]


def _pretty_report(report) -> List[str]:
    return [
        f"check {result.name}: {'pass' if result.passed else 'FAIL'}"
        + ("" if result.passed else f" ({result.detail})")
        for result in report.results
    ]


# --- argument plumbing -----------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="jordanform", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_matrix_command(name: str, help_text: str, check_flag: bool = True):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument(
            "matrix",
            nargs="?",
            default="-",
            help="path to a matrix JSON document, or - for stdin (default)",
        )
        cmd.add_argument(
            "--spectrum",
            dest="provided",
            metavar="LAMBDAS",
            help="comma-separated eigenvalues to use instead of root finding",
        )
        cmd.add_argument(
            "--format", choices=("json", "pretty"), default="pretty"
        )
        if check_flag:
            cmd.add_argument(
                "--check",
                action="store_true",
                help="append a verification report; failures set exit code 3",
            )
        return cmd

    add_matrix_command("spectrum", "eigenvalues with multiplicities", check_flag=False)
    for kind in _DECOMPOSERS:
        add_matrix_command(kind, f"compute the {kind} decomposition")
    add_matrix_command("verify", "run all decompositions and their checks", check_flag=False)

    gen = sub.add_parser("gen", help="generate a matrix with known structure")
    gen.add_argument(
        "--structure",
        required=True,
        help='block structure, e.g. "3:3" or "0:2,1;1:1"',
    )
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--bound", type=int, default=3)
    gen.add_argument("--format", choices=("json", "pretty"), default="json")
    return parser


def _read_matrix(path: str) -> ExactMatrix:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path!r}: {exc}") from exc
    return document_to_matrix(doc)


def _parse_provided(text: Optional[str]) -> Optional[List[GaussianRational]]:
    if text is None:
        return None
    items = [item.strip() for item in text.split(",")]
    if not any(items):
        raise UsageError("--spectrum needs at least one eigenvalue")
    return [parse_scalar(item) for item in items]


def _emit(doc: dict, pretty_lines: List[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(pretty_lines))


# --- subcommand handlers ---------------------------------------------------

def _cmd_spectrum(args) -> int:
    matrix = _read_matrix(args.matrix)
    spect = spectrum(matrix, _parse_provided(args.provided))
    _emit(spectrum_to_document(spect), _pretty_spectrum(spect), args.format)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    matrix = _read_matrix(args.matrix)
    decomposition = _DECOMPOSERS[args.command](matrix, _parse_provided(args.provided))
    doc = decomposition_to_document(decomposition)
    pretty = _pretty_decomposition(decomposition)
    code = EXIT_OK
    if args.check:
        report = check_decomposition(matrix, decomposition)
        doc["check"] = {
            "passed": report.passed,
            "checks": [
                {"name": r.name, "passed": r.passed, "detail": r.detail}
                for r in report.results
            ],
        }
        pretty.extend(_pretty_report(report))
        if not report.passed:
            code = EXIT_CHECK_FAILED
    _emit(doc, pretty, args.format)
    return code


def _cmd_verify(args) -> int:
    matrix = _read_matrix(args.matrix)
    provided = _parse_provided(args.provided)
    doc_reports = []
    pretty: List[str] = []
    all_passed = True
    for kind, decompose in _DECOMPOSERS.items():
        decomposition = decompose(matrix, provided)
        report = check_decomposition(matrix, decomposition)
        all_passed = all_passed and report.passed
        doc_reports.append(
            {
                "kind": kind,
                "passed": report.passed,
                "checks": [
                    {"name": r.name, "passed": r.passed, "detail": r.detail}
                    for r in report.results
                ],
            }
        )
        pretty.append(f"{kind}: {'pass' if report.passed else 'FAIL'}")
        pretty.extend("  " + line for line in _pretty_report(report))
    _emit({"n": matrix.rows, "reports": doc_reports}, pretty, args.format)
    return EXIT_OK if all_passed else EXIT_CHECK_FAILED


def _cmd_gen(args) -> int:
    structure = parse_structure(args.structure)
    matrix, _expected = generate_case(structure, args.seed, args.bound)
    # Default is JSON (unlike the other subcommands) so gen can be piped
    # straight into them.
    _emit(matrix_to_document(matrix), [pretty_matrix(matrix)], args.format)
    return EXIT_OK


def run(argv: Sequence[str]) -> int:
    """Execute one invocation; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except UsageError as exc:
        print(f"jordanform: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help and friends
        return int(exc.code or 0)
    handlers = {
        "spectrum": _cmd_spectrum,
        "verify": _cmd_verify,
        "gen": _cmd_gen,
    }
    handler = handlers.get(args.command, _cmd_decompose)
    try:
        return handler(args)
    except SpectrumNotRepresentable as exc:
        print(
            f"jordanform {args.command}: SpectrumNotRepresentable: {exc}",
            file=sys.stderr,
        )
        return EXIT_NOT_REPRESENTABLE
    except _USAGE_ERRORS as exc:
        print(
            f"jordanform {args.command}: {type(exc).__name__}: {exc}",
            file=sys.stderr,
        )
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
