"""Command-line front end.

Exit codes follow one convention across subcommands: 0 for success or a
positive verdict, 1 for a negative verdict or a domain rejection (word
not in the language, count mismatch, impossible profile), 2 for input
that cannot be parsed at all.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .bench import run_benchmark
from .bruteforce import cross_check
from .cache import cached_table
from .counting import COLUMN_ALIASES, asymptotic_u_tilde
from .factorization import (
    FactorDomainError,
    ProfileError,
    factorize,
    format_profile,
    is_in_l_linear,
    parse_profile,
    reconstruct,
)
from .intersect import verify_intersection_claim
from .oeis import KNOWN_SEQUENCE_IDS, BFileParseError, compare_values, format_bfile, read_bfile
from .words import avoids_xxrx_naive, check_word, find_xxrx_instance

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

# exact values accompany the asymptotic estimate up to this index
_ASYM_EXACT_LIMIT = 1000


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def cmd_check(args: argparse.Namespace) -> int:
    try:
        word = check_word(args.word)
    except ValueError as exc:
        return _fail(str(exc))
    in_l = avoids_xxrx_naive(word) if args.naive else is_in_l_linear(word)
    if in_l:
        print("IN_L")
        return EXIT_OK
    instance = find_xxrx_instance(word)
    print(f"instance ({instance.start},{instance.block_len})")
    return EXIT_FAIL


def cmd_factor(args: argparse.Namespace) -> int:
    try:
        f = factorize(args.word)
    except FactorDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        return _fail(str(exc))
    print(f"start={f.start_letter or '-'} profile={format_profile(f.profile)}")
    return EXIT_OK


def cmd_invert(args: argparse.Namespace) -> int:
    if args.start not in ("0", "1"):
        return _fail(f"start letter must be 0 or 1, not {args.start!r}")
    try:
        entries = parse_profile(args.profile)
    except ProfileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        return _fail(str(exc))
    print(reconstruct(args.start, entries))
    return EXIT_OK


def _emit_table(limit: int, column: str | None, fmt: str) -> int:
    if limit < 0:
        return _fail("N must be nonnegative")
    table = cached_table(limit)
    if fmt == "bfile":
        name = COLUMN_ALIASES[column or "c"]
        sys.stdout.write(format_bfile(table.column(name)))
    elif column is None:
        sys.stdout.write(table.to_csv())
    else:
        name = COLUMN_ALIASES[column]
        values = table.column(name)
        lines = [f"n,{name}"]
        lines.extend(f"{n},{values[n]}" for n in range(limit + 1))
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    return _emit_table(args.limit, args.column, args.format)


def cmd_gf(args: argparse.Namespace) -> int:
    return _emit_table(args.limit, "u", args.format)


def cmd_asym(args: argparse.Namespace) -> int:
    if args.n < 1:
        return _fail("n must be at least 1")
    exact = None
    if args.n <= _ASYM_EXACT_LIMIT:
        exact = cached_table(args.n).u_tilde[args.n]
    est = asymptotic_u_tilde(args.n, exact)
    line = f"n={est.n} estimate={est.value!r}"
    if exact is not None:
        line += f" exact={exact} rel_err={est.relative_error_vs_exact:.6e}"
    print(line)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    try:
        report = cross_check(args.words, args.seq)
    except ValueError as exc:
        return _fail(str(exc))
    sys.stdout.write(report.as_csv() if args.format == "csv" else report.as_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_cfl_verify(args: argparse.Namespace) -> int:
    try:
        report = verify_intersection_claim(args.max_exp)
    except ValueError as exc:
        return _fail(str(exc))
    sys.stdout.write(report.as_csv() if args.format == "csv" else report.as_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_oeis_compare(args: argparse.Namespace) -> int:
    try:
        bfile = read_bfile(args.path)
    except BFileParseError as exc:
        return _fail(f"{args.path}: {exc}")
    except OSError as exc:
        return _fail(f"cannot read {args.path}: {exc}")
    name = COLUMN_ALIASES[args.column]
    expected_id = KNOWN_SEQUENCE_IDS.get(name)
    if bfile.sequence_id and expected_id and bfile.sequence_id != expected_id:
        print(
            f"warning: file names {bfile.sequence_id} but column {args.column} "
            f"is catalogued as {expected_id}",
            file=sys.stderr,
        )
    usable = [n for n, _ in bfile.entries if args.offset <= n <= args.limit]
    if not usable:
        print("warning: no overlapping indices; comparison is vacuous")
        return EXIT_OK
    table = cached_table(max(usable) - args.offset)
    mismatches, overlap = compare_values(bfile, table.column(name), args.offset)
    for m in mismatches:
        print(f"n={m.index} local={m.local} reference={m.reference}")
    if mismatches:
        print(f"{len(mismatches)} mismatches over {overlap} shared indices")
        return EXIT_FAIL
    print(f"ok: {overlap} shared indices agree")
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        report = run_benchmark(
            max_len=args.max_len,
            samples=args.samples,
            seed=args.seed,
            naive_cutoff=args.naive_cutoff,
        )
    except ValueError as exc:
        return _fail(str(exc))
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    sys.stdout.write(report.as_text())
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xxrx",
        description="Recognition and enumeration of binary words avoiding x x^R x.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test one word for membership")
    p.add_argument("word", help="binary word, e.g. 010110; empty string is the empty word")
    p.add_argument("--naive", action="store_true", help="use the direct instance scan")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("factor", help="print start letter and block profile of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("invert", help="rebuild the word from start letter and profile")
    p.add_argument("start", help="0 or 1")
    p.add_argument("profile", help='profile such as "(4,4,4)"; "()" for the empty word')
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("count", help="emit exact count tables up to N")
    p.add_argument("limit", type=int, metavar="N")
    p.add_argument("--column", choices=["c", "v", "u"], help="single column (default: all)")
    p.add_argument(
        "--format",
        choices=["csv", "bfile"],
        default="csv",
        help="bfile requires a single column and defaults it to c",
    )
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("gf", help="emit the series coefficients of column u up to N")
    p.add_argument("limit", type=int, metavar="N")
    p.add_argument("--format", choices=["csv", "bfile"], default="csv")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("asym", help="asymptotic estimate of u(n), with exact error when cheap")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_asym)

    p = sub.add_parser("oracle", help="brute-force cross-check of the tables and bijection")
    p.add_argument("--words", type=int, default=12, help="max word length (default 12)")
    p.add_argument("--seq", type=int, default=25, help="max sequence weight (default 25)")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("cfl-verify", help="scan the quadruple family against its predicate")
    p.add_argument("--max-exp", type=int, default=8, dest="max_exp")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.set_defaults(func=cmd_cfl_verify)

    p = sub.add_parser("oeis-compare", help="diff a column against a downloaded b-file")
    p.add_argument("path")
    p.add_argument("--column", choices=["c", "v", "u"], default="c")
    p.add_argument("--limit", type=int, default=1000, help="largest index to compare")
    p.add_argument("--offset", type=int, default=0, help="index of the first local value")
    p.set_defaults(func=cmd_oeis_compare)

    p = sub.add_parser("bench", help="time the recognizers on random words")
    p.add_argument("--max-len", type=int, default=1000, dest="max_len")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--naive-cutoff",
        type=int,
        default=4096,
        dest="naive_cutoff",
        help="skip the direct scan on words longer than this",
    )
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
