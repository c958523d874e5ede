"""Command line front end: evaluate expressions, compare cosets, run the
axiom audit, or start a small REPL.

Exit codes: 0 success (and all-pass audits), 1 evaluation errors,
2 audit counterexamples, 64 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .axioms import audit
from .expressions import EvalError, evaluate, parse

USAGE_EXIT = 64


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="extnum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p_eval = sub.add_parser("eval", help="evaluate an expression")
    p_eval.add_argument("expression")
    p_eval.add_argument("--json", action="store_true", help="print the JSON value form")

    p_cmp = sub.add_parser("cmp", help="compare two expressions")
    p_cmp.add_argument("left")
    p_cmp.add_argument("right")
    p_cmp.add_argument("--json", action="store_true")

    p_audit = sub.add_parser("audit", help="run the randomized axiom audit")
    p_audit.add_argument("--seed", type=int, default=0)
    p_audit.add_argument("--trials", type=int, default=100)
    p_audit.add_argument("--axiom", default=None, help="comma separated ids, e.g. A22,T7")
    p_audit.add_argument("--json", action="store_true", help="accepted; the report is JSON")

    sub.add_parser("repl", help="interactive loop; '_' holds the last value")
    return parser


def _print_eval_error(exc: EvalError) -> int:
    print(f"error: {exc.kind} at {exc.span[0]}..{exc.span[1]}: {exc.message}", file=sys.stderr)
    return 1


def _cmd_eval(ns) -> int:
    try:
        value = evaluate(parse(ns.expression))
    except EvalError as exc:
        return _print_eval_error(exc)
    if ns.json:
        print(json.dumps(value.to_json()))
    else:
        print(value)
    return 0


def _cmd_cmp(ns) -> int:
    try:
        left = evaluate(parse(ns.left))
        right = evaluate(parse(ns.right))
    except EvalError as exc:
        return _print_eval_error(exc)
    rel = left.classify(right)
    leq_lr = left <= right
    leq_rl = right <= left
    if ns.json:
        print(
            json.dumps(
                {
                    "symbol": rel.symbol,
                    "relation": rel.name.lower(),
                    "leq_left_right": leq_lr,
                    "leq_right_left": leq_rl,
                }
            )
        )
    else:
        print(rel.symbol)
        print(f"left <= right: {str(leq_lr).lower()}")
        print(f"right <= left: {str(leq_rl).lower()}")
    return 0


def _cmd_audit(ns) -> int:
    ids = None
    if ns.axiom:
        ids = [part.strip() for part in ns.axiom.split(",") if part.strip()]
    try:
        report = audit(seed=ns.seed, trials=ns.trials, axioms=ids)
    except ValueError as exc:
        print(f"audit: {exc}", file=sys.stderr)
        return USAGE_EXIT
    print(report.to_json_text())
    return 0 if report.all_passed else 2


def _cmd_repl() -> int:
    last = None
    while True:
        try:
            line = input("ext> ")
        except EOFError:
            print()
            return 0
        line = line.strip()
        if not line:
            continue
        if line in ("quit", "exit"):
            return 0
        try:
            value = evaluate(parse(line, allow_last=True), last)
        except EvalError as exc:
            print(f"error: {exc.kind} at {exc.span[0]}..{exc.span[1]}: {exc.message}")
            continue
        last = value
        print(value)


def run_command(argv) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    if ns.command == "eval":
        return _cmd_eval(ns)
    if ns.command == "cmp":
        return _cmd_cmp(ns)
    if ns.command == "audit":
        return _cmd_audit(ns)
    return _cmd_repl()


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
