"""Command line entry point ``qlab``.

Exit codes: 0 success, 1 failed reproduction checks, 2 input error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from .bell import CONSTRAINT_SETS
from .errors import NumericalFailure, QlabError
from .scenario import COMMANDS, FIXTURES, ScenarioError, load_fixture, parse_scenario, run

EXIT_OK, EXIT_CHECKS, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2, 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qlab", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    src = parser.add_mutually_exclusive_group()
    src.add_argument("--scenario", type=Path, help="scenario JSON file")
    src.add_argument("--fixture", choices=FIXTURES, help="built-in scenario")
    parser.add_argument("--tol", type=float, help="state/isometry/nonnegativity tolerance")
    parser.add_argument("--norm-cap", type=float, help="bound on sum of weights in the witness search")
    parser.add_argument("--constraints", choices=CONSTRAINT_SETS)
    parser.add_argument("--steps", type=int, help="number of evolution steps")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _load(args):
    if args.scenario is not None:
        try:
            text = args.scenario.read_text(encoding="utf-8")
        except OSError as exc:
            raise ScenarioError("schema", f"cannot read {args.scenario}: {exc.strerror}") from None
        sc = parse_scenario(text, args.tol)
    elif args.fixture is not None:
        sc = load_fixture(args.fixture, args.tol)
    else:
        return None
    overrides = {}
    if args.norm_cap is not None:
        overrides["norm_cap"] = args.norm_cap
    if args.constraints is not None:
        overrides["constraints"] = args.constraints
    if args.steps is not None:
        overrides["steps"] = args.steps
    if overrides:
        sc = replace(sc, options=replace(sc.options, **overrides))
    return sc


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.12g}"
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    return str(v)


def _text_block(name: str, block, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(block, dict):
        lines = [f"{pad}{name}:"]
        for k, v in block.items():
            lines += _text_block(k, v, indent + 1)
        return lines
    if isinstance(block, list) and block and isinstance(block[0], dict):
        lines = [f"{pad}{name}: {len(block)} entries"]
        for i, item in enumerate(block[:10]):
            lines += _text_block(f"[{i}]", item, indent + 1)
        return lines
    return [f"{pad}{name}: {_fmt(block)}"]


def render_text(report: dict) -> str:
    if report["command"] == "verify-paper":
        lines = [f"{'check':<6}{'status':<15}{'item':<46}{'expected':>14}{'computed':>20}"]
        for r in report["checks"]:
            lines.append(
                f"{r['check']:<6}{r['status']:<15}{r['item']:<46}{_fmt(r['expected']):>14}{_fmt(r['computed']):>20}"
                + (f"  ({r['note']})" if r["note"] else "")
            )
        lines.append("all checks passed" if report["passed"] else "SOME CHECKS FAILED")
        return "\n".join(lines)
    lines = [f"command: {report['command']}", f"scenario: {report['scenario']['name'] or '(unnamed)'}"]
    lines += _text_block(report["command"], report[report["command"]])
    for note in report.get("notes", []):
        lines.append(f"note: {note}")
    return "\n".join(lines)


def _json_default(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    raise TypeError(f"not serializable: {type(obj).__name__}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        scenario = _load(args)
        report = run(scenario, args.command)
    except NumericalFailure as exc:
        print(f"qlab: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except QlabError as exc:
        print(f"qlab: input error {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "json":
        print(json.dumps(report, indent=2, default=_json_default))
    else:
        print(render_text(report))
    if args.command == "verify-paper" and not report["passed"]:
        return EXIT_CHECKS
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
