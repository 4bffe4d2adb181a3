#!/usr/bin/env python3
"""
Command-line front end: census tables, sequence b-files, the bounds table and verification.

Usage:
    polite-seating table b --k 1 --pmax 64
    polite-seating sequence an --nmax 30 --out b_an.txt
    polite-seating bounds --nmax 10 --extra 15
    polite-seating verify --nmax-formula 64 --nmax-oracle 14
    polite-seating schema --level 3
    polite-seating census --p 20
"""

import argparse
import logging
import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterator, List, Optional, TextIO

import pandas as pd

from .config import load_config
from .formulas.bounds import ComparisonRow, comparison_table
from .formulas.closed_form import b, d
from .formulas.counting import SEQUENCE_OFFSETS, SEQUENCES
from .logging_setup import configure_logging
from .simulation.oracle import b_census, d_census
from .simulation.schema import schema_tuple
from .verification import VerificationFailure, run_verification

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

NOT_DEFINED = '/'


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def format_ratio(ratio: Fraction, precision: int) -> str:
    """
    Decimal rendering of an exact ratio.

    Values with at most `precision` decimals print exactly without trailing
    zeros; anything else is rounded half up and marked with '≈'.
    """
    scale = 10 ** precision
    numerator = ratio.numerator * scale
    exact = numerator % ratio.denominator == 0
    scaled = (2 * numerator + ratio.denominator) // (2 * ratio.denominator)

    whole, fraction = divmod(scaled, scale)
    digits = str(fraction).rjust(precision, '0') if precision else ''
    if exact:
        digits = digits.rstrip('0')
    text = f"{whole}.{digits}" if digits else str(whole)
    return text if exact else f"≈{text}"


def table_lines(kind: str, k: int, pmax: int) -> Iterator[str]:
    """'p;value' for p = 1..pmax."""
    value = b if kind == 'b' else d
    for p in range(1, pmax + 1):
        yield f"{p};{value(p, k)}"


def sequence_lines(name: str, nmax: int) -> Iterator[str]:
    """b-file lines 'n value' from the sequence's first index up to nmax."""
    if name not in SEQUENCES:
        raise ValueError(f"unknown sequence {name!r}, expected one of {sorted(SEQUENCES)}")
    formula = SEQUENCES[name]
    for n in range(SEQUENCE_OFFSETS[name], nmax + 1):
        yield f"{n} {formula(n)}"


def census_lines(p: int) -> Iterator[str]:
    """'k;b;d' from the leftmost-start trajectory for k = 1..p-1."""
    b_table, d_table = b_census(p), d_census(p)
    for k in range(1, p):
        yield f"{k};{b_table.get(k, 0)};{d_table.get(k, 0)}"


def bounds_frame(rows: List[ComparisonRow], precision: int) -> pd.DataFrame:
    """Comparison table with exact integers and rendered ratios."""
    records = []
    for row in rows:
        records.append({
            'n': row.n,
            'U/a_n': NOT_DEFINED if row.lower is None else format_ratio(row.lower_ratio, precision),
            'U': NOT_DEFINED if row.lower is None else row.lower,
            'a_n': row.count,
            'O': row.upper,
            'O/a_n': format_ratio(row.upper_ratio, precision),
            'n!': row.factorial_n,
        })
    return pd.DataFrame.from_records(
        records, columns=['n', 'U/a_n', 'U', 'a_n', 'O', 'O/a_n', 'n!']
    ).astype(object)


@contextmanager
def open_output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        yield f


def emit(lines, out: TextIO):
    for line in lines:
        out.write(line + '\n')


def cmd_table(args, config) -> int:
    with open_output(args.out) as out:
        emit(table_lines(args.kind, args.k, args.pmax), out)
    return EXIT_OK


def cmd_sequence(args, config) -> int:
    with open_output(args.out) as out:
        emit(sequence_lines(args.name, args.nmax), out)
    return EXIT_OK


def cmd_bounds(args, config) -> int:
    precision = config.output.precision if args.precision is None else args.precision
    frame = bounds_frame(comparison_table(args.nmax, args.extra or ()), precision)
    with open_output(args.out) as out:
        out.write(frame.to_string(index=False) + '\n')
    return EXIT_OK


def cmd_verify(args, config) -> int:
    report = run_verification(args.nmax_formula, args.nmax_oracle, config)
    with open_output(args.out) as out:
        out.write(report.render() + '\n')
    try:
        report.raise_for_failure()
    except VerificationFailure as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_schema(args, config) -> int:
    with open_output(args.out) as out:
        out.write(str(schema_tuple(args.level, config.schema.max_level)) + '\n')
    return EXIT_OK


def cmd_census(args, config) -> int:
    with open_output(args.out) as out:
        emit(census_lines(args.p), out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='polite-seating',
        description='Exact counts for the maximum-distance seating process'
    )
    parser.add_argument('--out', default=None, help='Write output to this file (default: standard output)')
    parser.add_argument('--log-level', default='WARNING', help='Logging level (default: WARNING)')
    parser.add_argument('--config', default=None, help='Path to a seating.yaml override')

    # --out is accepted after the subcommand as well
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument('--out', default=argparse.SUPPRESS, help='Write output to this file')

    subparsers = parser.add_subparsers(dest='command', required=True)

    table = subparsers.add_parser('table', help="Closed-form b or d as 'p;value' lines", parents=[output])
    table.add_argument('kind', choices=['b', 'd'])
    table.add_argument('--k', type=positive_int, required=True, help='Distance k')
    table.add_argument('--pmax', type=positive_int, required=True, help='Last p')
    table.set_defaults(handler=cmd_table)

    sequence = subparsers.add_parser('sequence', help="Sequence values as b-file lines 'n value'", parents=[output])
    sequence.add_argument('name', choices=sorted(SEQUENCES))
    sequence.add_argument('--nmax', type=positive_int, required=True, help='Last n')
    sequence.set_defaults(handler=cmd_sequence)

    bounds = subparsers.add_parser('bounds', help='Comparison of U, a_n, O and n!', parents=[output])
    bounds.add_argument('--nmax', type=positive_int, required=True, help='Last consecutive n')
    bounds.add_argument('--precision', type=non_negative_int, default=None,
                        help='Decimal places for ratio columns (default: output.precision)')
    bounds.add_argument('--extra', type=positive_int, action='append',
                        help='Additional n beyond --nmax (repeatable)')
    bounds.set_defaults(handler=cmd_bounds)

    verify = subparsers.add_parser('verify', help='Cross-check formulas against the oracle', parents=[output])
    verify.add_argument('--nmax-formula', type=positive_int, default=None,
                        help='Largest n/p for formula checks (default: verify.nmax_formula)')
    verify.add_argument('--nmax-oracle', type=positive_int, default=None,
                        help='Largest n for rule-variant oracle checks (default: verify.nmax_oracle)')
    verify.set_defaults(handler=cmd_verify)

    schema = subparsers.add_parser('schema', help='Insertion order over 2^i runs', parents=[output])
    schema.add_argument('--level', type=positive_int, required=True, help='Level i')
    schema.set_defaults(handler=cmd_schema)

    census = subparsers.add_parser('census', help="Oracle census as 'k;b;d' lines", parents=[output])
    census.add_argument('--p', type=positive_int, required=True, help='Seat count')
    census.set_defaults(handler=cmd_census)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    try:
        configure_logging(args.log_level)
        config = load_config(args.config)
        logger.info("Running command", extra={
            "custom_dimensions": {"command": args.command, "config": config.source}
        })
        return args.handler(args, config)
    except (ValueError, FileNotFoundError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
