# pretzelslice/parsing/parser.py
from __future__ import annotations

import argparse
import os

from pretzelslice.constants import DEFAULT_ODD_BOUND, DEFAULT_ORACLE_MAX_DIM, DEFAULT_ORACLE_MAX_SUM


def _de_max(value: str) -> int | str:
    # argparse also runs the string default "same" through this converter.
    if value.lower() in ("auto", "same"):
        return value.lower()
    try:
        return int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, 'same' or 'auto', got {value!r}") from None


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("Logging")
    g.add_argument(
        "--json-logs",
        action="store_true",
        default=os.getenv("PRETZELSLICE_JSON_LOGS") == "1",
        help="Emit logs as JSON lines on stderr (env PRETZELSLICE_JSON_LOGS=1).",
    )
    g.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level.")
    g.add_argument("-q", "--quiet", action="store_true", help="Only warnings and errors; no progress bar.")
    return common


def _output_flags(p: argparse.ArgumentParser, *, default: str) -> None:
    g = p.add_argument_group("Output")
    fmt = g.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON output (one record per line).")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv", help="CSV output with a fixed header.")
    p.set_defaults(fmt=default)
    g.add_argument("--out", metavar="PATH", help="Write records to PATH instead of stdout.")


def _build_parser() -> argparse.ArgumentParser:
    """
    Build the CLI argument parser.

    Subcommands:
        analyze   one tuple, full obstruction trace
        census    every signature-zero odd five-stranded multiset up to a bound
        selftest  identity and theorem checks
    """
    common = _common_flags()
    p = argparse.ArgumentParser(
        prog="pretzelslice",
        formatter_class=argparse.RawTextHelpFormatter,
        description=(
            "pretzelslice – slice obstructions for odd pretzel knots\n"
            "Negative twist parameters need a '--' first:  pretzelslice analyze -- -3,-7,-19,3,47"
        ),
    )
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    # -----------------------
    # analyze
    # -----------------------
    p_an = sub.add_parser(
        "analyze",
        parents=[common],
        formatter_class=argparse.RawTextHelpFormatter,
        help="Evaluate one pretzel tuple.",
        description="Evaluate one pretzel tuple, e.g. 3,-3,5,-5,7 or P(3, 5, 7).",
    )
    p_an.add_argument("tuple", nargs="+", metavar="TUPLE", help="Comma- or space-separated twist parameters.")
    _output_flags(p_an, default="text")

    # -----------------------
    # census
    # -----------------------
    p_ce = sub.add_parser(
        "census",
        parents=[common],
        formatter_class=argparse.RawTextHelpFormatter,
        help="Evaluate every signature-zero P(-a,-b,-c,d,e) up to a bound.",
        description=(
            "Enumerate multisets {-a,-b,-c,d,e} with odd a ≤ b ≤ c ≤ MAX and odd d ≤ e ≤ DE_MAX,\n"
            "keep those with σ = 0 and evaluate one representative each."
        ),
    )
    p_ce.add_argument("--max", type=int, default=DEFAULT_ODD_BOUND, metavar="N", help=f"Odd bound for a, b, c (default {DEFAULT_ODD_BOUND}).")
    p_ce.add_argument(
        "--de-max",
        type=_de_max,
        default="same",
        metavar="N|auto",
        help=(
            "Bound for d and e: an integer, 'same', or 'auto'.\n"
            "'auto' is the full cap (a+b+c)·MAX per triple a ≤ b ≤ c.\n"
            "Default 'same': d, e ≤ MAX, i.e. every |p_i| ≤ MAX."
        ),
    )
    p_ce.add_argument("--pairs", type=int, choices=(0, 1, 2), help="Keep only t-pair multisets.")
    p_ce.add_argument("--no-single-twists", action="store_true", help="Drop multisets containing ±1.")
    p_ce.add_argument("--simple-ribbon-only", action="store_true", help="Keep only multisets with a simple-ribbon ordering.")
    p_ce.add_argument(
        "--threads",
        type=int,
        default=None,
        metavar="N",
        help="Worker processes (env PRETZELSLICE_THREADS, default 1).",
    )
    p_ce.add_argument("--summary-json", action="store_true", help="Print the run summary as JSON on stderr.")
    _output_flags(p_ce, default="json")

    # -----------------------
    # selftest
    # -----------------------
    p_st = sub.add_parser(
        "selftest",
        parents=[common],
        formatter_class=argparse.RawTextHelpFormatter,
        help="Check the invariant identities and the non-sliceness theorems.",
    )
    p_st.add_argument("--max", type=int, default=DEFAULT_ODD_BOUND, metavar="N", help=f"Census bound for the sweeps (default {DEFAULT_ODD_BOUND}).")
    p_st.add_argument("--samples", type=int, default=1000, metavar="N", help="Random tuples for the formula checks.")
    p_st.add_argument("--oracle", action="store_true", help="Also compare the generic embedding search.")
    p_st.add_argument(
        "--oracle-max",
        type=int,
        default=DEFAULT_ORACLE_MAX_SUM,
        metavar="N",
        help=(
            f"Largest a+b+c (and d, e) for --oracle (default {DEFAULT_ORACLE_MAX_SUM}); "
            f"at most {DEFAULT_ORACLE_MAX_DIM}."
        ),
    )
    p_st.add_argument("--threads", type=int, default=None, metavar="N", help="Worker processes for the sweep.")
    return p
