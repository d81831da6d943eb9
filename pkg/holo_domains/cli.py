"""
Command Line
============

holo-domains <command> [options]

Commands:
    tube-check INPUT        tube membership
    etube-check INPUT       extended-tube membership
    jost-check INPUT        Jost-point test (real configurations)
    union-check INPUT       permuted extended-tube union (s = 2)
    classify                order-class table for one dimension s
    horn solve --input F    least model of a Horn formula
    selftest                property suites against brute-force oracles

Exit codes:
    0  inside / model found / all suites pass
    1  outside / UNSAT / a suite failed
    2  boundary
    3  unknown
    64 input error (malformed JSON, bad flags, s != 2 with --exact-only)

INPUT may be "-" for standard input. Verdicts go to standard output as
JSON; logs and timings go to standard error.

Environment:
    NO_COLOR            plain reports without ANSI colour
    HOLO_DOMAINS_DEBUG  "1" validates every emitted verdict against the schema
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from . import __version__
from .base import DEFAULT_EPSILON, VerdictState
from .checks import run_check
from .classify import class_table, parts_table
from .geometry import Configuration
from .hornsat import HornFormula, minimal_model
from .io import dumps, parse_configuration, verdict_to_json
from .permutation import DEFAULT_GUESSES, DEFAULT_MAX_ENUMERATE
from .selftest import SUITES, run_suites, summary_frame

logger = logging.getLogger(__name__)

EXIT_USAGE = 64

EXIT_CODES: Dict[VerdictState, int] = {
    VerdictState.INSIDE: 0,
    VerdictState.OUTSIDE: 1,
    VerdictState.BOUNDARY: 2,
    VerdictState.UNKNOWN: 3,
}

_GREEN = "\033[32m"
_RED = "\033[31m"
_RESET = "\033[0m"


class UsageError(ValueError):
    """Bad command-line flags."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _use_color(stream) -> bool:
    if "NO_COLOR" in os.environ:
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _paint(text: str, color: str, stream) -> str:
    return f"{color}{text}{_RESET}" if _use_color(stream) else text


def _debug_enabled(args: argparse.Namespace) -> bool:
    return args.debug or os.environ.get("HOLO_DOMAINS_DEBUG") == "1"


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text(encoding="utf-8")


def _load(source: str) -> Configuration:
    return parse_configuration(_read_text(source))


def render_class_table(s: int, m_max: int, fmt: str = "table", parts: bool = False) -> str:
    """
    Byte-stable class table text.

    Args:
        fmt: "table" (aligned columns) or "json"
        parts: Append the problem-part summary
    """
    table = class_table(s, m_max)
    if fmt == "json":
        payload: Dict[str, Any] = {"s": s, "rows": table.to_dict(orient="records")}
        if parts:
            payload["parts"] = parts_table().to_dict(orient="records")
        return dumps(payload)
    if fmt != "table":
        raise ValueError(f"Unknown format '{fmt}'. Available: json, table")
    text = f"s = {s}\n" + table.to_string(index=False) + "\n"
    if parts:
        text += "\n" + parts_table().to_string(index=False) + "\n"
    return text


# ==================== Commands ====================


def _emit_verdict(args: argparse.Namespace, check: str, overrides: Dict[str, Any]) -> int:
    configuration = _load(args.input)
    verdict = run_check(check, configuration, overrides)
    sys.stdout.write(verdict_to_json(verdict, validate=_debug_enabled(args)))
    for key, value in sorted(verdict.details.items()):
        logger.debug("%s: %r", key, value)
    return EXIT_CODES[verdict.state]


def command_tube_check(args: argparse.Namespace) -> int:
    return _emit_verdict(args, "tube", {"epsilon": args.epsilon})


def command_etube_check(args: argparse.Namespace) -> int:
    return _emit_verdict(
        args,
        "etube",
        {
            "epsilon": args.epsilon,
            "budget": args.budget,
            "seed": args.seed,
            "exact_only": args.exact_only,
        },
    )


def command_jost_check(args: argparse.Namespace) -> int:
    return _emit_verdict(
        args,
        "jost",
        {
            "epsilon": args.epsilon,
            "samples": args.samples,
            "seed": args.seed,
            "exact_only": args.exact_only,
        },
    )


def command_union_check(args: argparse.Namespace) -> int:
    return _emit_verdict(
        args,
        "union",
        {
            "epsilon": args.epsilon,
            "max_enumerate": args.max_enumerate,
            "guesses": args.guesses,
            "seed": args.seed,
        },
    )


def command_classify(args: argparse.Namespace) -> int:
    sys.stdout.write(render_class_table(args.s, args.m_max, args.format, args.parts))
    return 0


def command_horn_solve(args: argparse.Namespace) -> int:
    formula = HornFormula.from_text(_read_text(args.input))
    model = minimal_model(formula)
    if not model:
        print(_paint("UNSAT", _RED, sys.stdout))
        logger.info("violated goal: %s", model.goal.to_text())
        return 1
    for atom in model.sorted():
        print(atom)
    return 0


def command_selftest(args: argparse.Namespace) -> int:
    results = run_suites(seed=args.seed, quick=not args.full, only=args.suite)
    frame = summary_frame(results)
    for line in frame.to_string(index=False).splitlines():
        if "FAIL" in line:
            line = _paint(line, _RED, sys.stdout)
        elif "pass" in line:
            line = _paint(line, _GREEN, sys.stdout)
        print(line)

    for result in results:
        print(f"{result.name}: {result.seconds:.2f}s", file=sys.stderr)
        for failure in result.failures[:10]:
            print(f"  {result.name}: {failure}", file=sys.stderr)
    return 0 if all(r.passed for r in results) else 1


# ==================== Parser ====================


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", help="Configuration JSON file, or - for stdin.")
    parser.add_argument(
        "--epsilon", type=float, default=DEFAULT_EPSILON, help="Boundary band (default 1e-9)."
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="holo-domains", description="Domain-of-holomorphy membership tools.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logs."
    )
    parser.add_argument(
        "--debug", action="store_true", help="Validate every verdict against its schema."
    )
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    tube = subparsers.add_parser("tube-check", help="Tube membership.")
    _add_input(tube)
    tube.set_defaults(func=command_tube_check)

    etube = subparsers.add_parser("etube-check", help="Extended-tube membership.")
    _add_input(etube)
    etube.add_argument("--budget", type=int, default=2000, help="Search candidates (s > 2).")
    etube.add_argument("--seed", type=int, default=0, help="Search seed (default 0).")
    etube.add_argument(
        "--exact-only", action="store_true", help="Reject s != 2 instead of searching."
    )
    etube.set_defaults(func=command_etube_check)

    jost = subparsers.add_parser("jost-check", help="Jost-point test.")
    _add_input(jost)
    jost.add_argument("--samples", type=int, default=10_000, help="Convex combinations (s > 2).")
    jost.add_argument("--seed", type=int, default=0, help="Sampling seed (default 0).")
    jost.add_argument(
        "--exact-only", action="store_true", help="Reject s != 2 instead of sampling."
    )
    jost.set_defaults(func=command_jost_check)

    union = subparsers.add_parser("union-check", help="Permuted extended-tube union (s = 2).")
    _add_input(union)
    union.add_argument(
        "--max-enumerate",
        type=int,
        default=DEFAULT_MAX_ENUMERATE,
        help="Enumerate every ordering up to this order.",
    )
    union.add_argument(
        "--guesses", type=int, default=DEFAULT_GUESSES, help="Random orderings above it."
    )
    union.add_argument("--seed", type=int, default=0, help="Guess seed (default 0).")
    union.set_defaults(func=command_union_check)

    classify = subparsers.add_parser("classify", help="Order classes for m = 2 .. m-max.")
    classify.add_argument("--s", type=int, required=True, help="Space-time dimension.")
    classify.add_argument("--m-max", type=int, required=True, help="Largest order.")
    classify.add_argument("--format", choices=["table", "json"], default="table")
    classify.add_argument("--parts", action="store_true", help="Append the problem parts.")
    classify.set_defaults(func=command_classify)

    horn = subparsers.add_parser("horn", help="Horn formulas.")
    horn_sub = horn.add_subparsers(dest="horn_command", required=True, parser_class=_Parser)
    solve = horn_sub.add_parser("solve", help="Least model or UNSAT.")
    solve.add_argument("--input", required=True, help="Horn text file, or - for stdin.")
    solve.set_defaults(func=command_horn_solve)

    selftest = subparsers.add_parser("selftest", help="Run the property suites.")
    mode = selftest.add_mutually_exclusive_group()
    mode.add_argument("--quick", action="store_true", help="Small samples (default).")
    mode.add_argument("--full", action="store_true", help="Full acceptance sample sizes.")
    selftest.add_argument("--seed", type=int, default=0, help="Base seed (default 0).")
    selftest.add_argument(
        "--suite",
        action="append",
        choices=list(SUITES),
        help="Run only this suite (repeatable).",
    )
    selftest.set_defaults(func=command_selftest)

    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    _configure_logging(args.verbose)
    try:
        return args.func(args)
    except (ValueError, OverflowError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
