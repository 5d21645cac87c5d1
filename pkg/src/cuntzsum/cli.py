"""Command line: ``eval``, ``check`` and ``rep orbits``.

Exit codes: 0 pass, 1 fail, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys

from .checks import RUNNERS
from .parser import EvaluationError, ParseError, evaluate, format_value
from .representations import orbit_analysis, product_system, square_window, standard_system
from .words import ArityError

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# flags whose shape can't be read off the default value
_SPECIAL = {
    "x": dict(nargs="+"),
    "derive_n": dict(nargs="+", type=int),
    "pairs": dict(nargs="+", metavar="N,M"),
    "family_name": dict(flags=("--family",)),
    "n": dict(type=int),
}

_CHECK_HELP = {
    "coassoc": "(delta (x) id) delta = (id (x) delta) delta on generators and random elements",
    "counit": "counit law on generators and random elements",
    "cocomm": "compare delta(x) with its flip",
    "pentagon": "W12 W13 W23 = W23 W12 on random triples",
    "antipode-witness": "W(x (x) I(1)) = 0 for generators x (or I(1) (x) x with --form I1-x)",
    "haar": "Haar property on random elements, with a counit negative control",
    "haar-unique": "truncated linear solve for Haar states",
    "kms": "KMS derivation, pair check and negative control",
    "morphism": "bialgebra morphism compatibility for rho, zeta and the broken swap family",
    "closure": "subbialgebra closure under delta",
    "cantor": "Cantor duality phi(a,b)(s_R s_R*) = s_S s_S* (x) s_T s_T*",
    "cancellation": "truncated cancellation witness",
    "rep-vi": "product branching system versus (pi1 (x) pi2) o phi",
    "rewrite-oracle": "normal forms versus permutative representation",
    "delta-s62": "canonical print of delta(s(6,2))",
    "e22-display": "delta of the matrix unit E22 in O_6",
}


def _pair(text: str) -> tuple:
    try:
        n, m = (int(a) for a in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N,M, got {text!r}") from None
    return (n, m)


def _add_runner_flags(sub: argparse.ArgumentParser, runner) -> None:
    for name, param in inspect.signature(runner).parameters.items():
        if name == "seed":
            continue  # global flag
        spec = dict(_SPECIAL.get(name, {}))
        flags = spec.pop("flags", ("--" + name.replace("_", "-"),))
        default = param.default
        if name == "pairs":
            spec["type"] = _pair
        elif "type" not in spec and "nargs" not in spec and isinstance(default, int):
            spec["type"] = int
        shown = list(default) if isinstance(default, tuple) else default
        sub.add_argument(*flags, dest=name, default=argparse.SUPPRESS,
                         help=f"default: {shown}", **spec)


def _common(parser: argparse.ArgumentParser, top: bool) -> None:
    # subparsers get SUPPRESS defaults so they don't clobber top-level values
    kw = {} if top else {"default": argparse.SUPPRESS}
    parser.add_argument("--json", action="store_true", help="emit a JSON report", **kw)
    parser.add_argument("--seed", type=int, help="seed for randomized suites (default 0)",
                        **({"default": 0} if top else kw))
    parser.add_argument("--backend", choices=("exact", "float"),
                        help="scalar backend for eval (default exact)",
                        **({"default": "exact"} if top else kw))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cuntzsum",
                                     description="Exact computations in the unitized direct sum "
                                                 "of Cuntz algebras.")
    _common(parser, top=True)
    cmds = parser.add_subparsers(dest="command", required=True)

    ev = cmds.add_parser("eval", help="evaluate an expression")
    _common(ev, top=False)
    ev.add_argument("expr")

    ck = cmds.add_parser("check", help="run a named check suite")
    _common(ck, top=False)
    checks = ck.add_subparsers(dest="check", required=True, metavar="NAME")
    for name, runner in RUNNERS.items():
        sub = checks.add_parser(name, help=_CHECK_HELP.get(name))
        _common(sub, top=False)
        _add_runner_flags(sub, runner)

    rep = cmds.add_parser("rep", help="permutative representations")
    reps = rep.add_subparsers(dest="rep_command", required=True)
    orb = reps.add_parser("orbits", help="cycle and orbit analysis of a branching system")
    _common(orb, top=False)
    orb.add_argument("--n", type=int, required=True)
    orb.add_argument("--m", type=int, help="second arity; analyses the product system")
    orb.add_argument("--window", type=int, default=64,
                     help="points 1..W (or the W x W square for product systems)")
    orb.add_argument("--max-steps", type=int, default=10_000)
    return parser


def _emit(payload: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(payload, ensure_ascii=False, indent=2, default=str))
    else:
        print(text)


def _cmd_eval(args) -> int:
    try:
        value = evaluate(args.expr, backend=args.backend)
    except (ParseError, ArityError, EvaluationError, ValueError) as exc:
        payload = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, ParseError):
            payload.update(line=exc.line, column=exc.column, expected=list(exc.expected))
        if args.json:
            print(json.dumps(payload, ensure_ascii=False, indent=2))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = format_value(value)
    _emit({"expr": args.expr, "backend": args.backend, "value": out}, args.json, out)
    return EXIT_PASS


def _cmd_check(args) -> int:
    runner = RUNNERS[args.check]
    accepted = inspect.signature(runner).parameters
    params = {k: v for k, v in vars(args).items() if k in accepted}
    if "seed" in accepted:
        params["seed"] = args.seed
    for key in ("x", "pairs", "derive_n"):
        if key in params:
            params[key] = tuple(params[key])
    try:
        report = runner(**params)
    except (ParseError, ArityError, EvaluationError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = report.to_json()
    payload["backend"] = "exact"
    lines = [f"{report.check}: {'pass' if report.passed else 'fail'}"]
    if report.witness:
        lines.append("witness: " + json.dumps(report.witness, ensure_ascii=False, default=str))
    _emit(payload, args.json, "\n".join(lines))
    return EXIT_PASS if report.passed else EXIT_FAIL


def _cmd_rep(args) -> int:
    try:
        if args.m is None:
            system = standard_system(args.n)
            window = list(range(1, args.window + 1))
        else:
            system = product_system(standard_system(args.n), standard_system(args.m))
            window = square_window(args.window)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    result = orbit_analysis(system, window, args.max_steps)
    result["system"] = system.name
    text = [f"{system.name}: {result['size']} points, {len(result['cycles'])} cycle(s)"]
    for k, c in enumerate(result["cycles"]):
        text.append(f"  cycle {k}: word {''.join(map(str, c['word']))} at "
                    f"{c['representative']}, {c['members']} point(s) in window")
    if "escaping" in result["classes"]:
        text.append(f"  escaping the window: {result['classes']['escaping']}")
    _emit(result, args.json, "\n".join(text))
    return EXIT_PASS if result["partition_ok"] else EXIT_FAIL


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    handler = {"eval": _cmd_eval, "check": _cmd_check, "rep": _cmd_rep}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
