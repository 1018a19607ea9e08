"""Command-line front end: validate, normalize, render, check, split,
exp demo, examples.  Exit codes: 0 success/pass, 2 semantic failure,
1 usage/parse error."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .errors import LdcError, SuiteFailure
from .exponential import retract_idempotent
from .fixtures import fixture_names, load_gadget
from .gadget import gadget_to_json
from .io import parse, serialize
from .render import render_dot
from .rewrite import normalize
from .structures import (complementary_from_idempotent,
                         split_binary_idempotent, split_linear_bialgebra,
                         split_linear_comonoid, split_linear_monoid)
from .suites import SUITES, check_suite
from .validity import validate


def _emit(data: bytes, out: str | None) -> None:
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.write(data.decode())


def _write_report(report, path: str | None) -> None:
    if path:
        Path(path).write_text(json.dumps(report.to_json(), indent=1) + "\n")


def cmd_validate(args) -> int:
    circuit = parse(Path(args.path).read_bytes())
    rep = validate(circuit)
    if args.trace:
        for step in rep.trace:
            print(json.dumps(step))
    print("valid" if rep.valid else "invalid")
    if not rep.valid and rep.stuck is not None and args.trace:
        print(json.dumps({"stuck": rep.stuck}))
    return 0 if rep.valid else 2


def cmd_normalize(args) -> int:
    circuit = parse(Path(args.path).read_bytes())
    _emit(serialize(normalize(circuit)), args.output)
    return 0


def cmd_render(args) -> int:
    if args.format != "dot":
        print(f"unknown format {args.format!r}", file=sys.stderr)
        return 1
    circuit = parse(Path(args.path).read_bytes())
    _emit(render_dot(circuit), args.output)
    return 0


def cmd_check(args) -> int:
    if args.suite not in SUITES:
        print(f"unknown suite {args.suite!r}; available: "
              f"{', '.join(sorted(SUITES))}", file=sys.stderr)
        return 1
    gadget = load_gadget(args.gadget, degree=args.degree)
    report = check_suite(gadget, SUITES[args.suite], tol=args.tol)
    _write_report(report, args.report)
    for label, residual in report.residuals.items():
        print(f"{label}: {residual:.3e}")
    print("pass" if report.passed else "fail")
    return 0 if report.passed else 2


_SPLITTERS = {
    "binary": None,
    "monoid": split_linear_monoid,
    "comonoid": split_linear_comonoid,
    "bialgebra": split_linear_bialgebra,
}


def cmd_split(args) -> int:
    gadget = load_gadget(args.gadget, degree=args.degree)
    if args.kind == "binary":
        result = split_binary_idempotent(gadget, tol=args.tol)
        alpha, beta = result["alpha"], result["beta"]
        res = max(float(np.max(np.abs(alpha @ beta - np.eye(alpha.shape[0])))),
                  float(np.max(np.abs(beta @ alpha - np.eye(beta.shape[0])))))
        print(f"rank {alpha.shape[0]}, iso residual {res:.3e}")
        return 0 if res <= args.tol * 10 else 2
    ub, vb = gadget.morphism("ub"), gadget.morphism("vb")
    split = _SPLITTERS[args.kind](gadget, vb @ ub, ub @ vb, args.tol)
    _emit(json.dumps(gadget_to_json(split), indent=1).encode() + b"\n",
          args.output)
    return 0


def cmd_exp_demo(args) -> int:
    gadget = load_gadget(args.gadget, degree=args.degree)
    comp = check_suite(gadget, SUITES["complementary"], tol=args.tol)
    print(f"complementary (input): worst residual {comp.worst():.3e}")
    if not comp.passed:
        print("input is not a complementary system", file=sys.stderr)
        return 2
    if args.degree < 2:
        print("warning: degree 1 leaves no room above the retraction; "
              "windowed checks are degenerate")

    result = retract_idempotent(gadget, degree=args.degree, tol=args.tol)
    induced = result["gadget"]
    eps, flat, sharp, eta = result["splitting"]
    dim = flat.shape[1]
    r1 = float(np.max(np.abs(eps @ flat - np.eye(dim))))
    e_bang = result["e_bang"]
    r2 = float(np.max(np.abs(e_bang @ e_bang - e_bang)))
    print(f"retraction: flat;eps deviation {r1:.3e}, "
          f"idempotency deviation {r2:.3e}")

    degenerate = args.degree < 2
    out = complementary_from_idempotent(induced, tol=args.tol,
                                        retractional=(True, False),
                                        splitting=result["splitting"],
                                        check=not degenerate)
    cond, verdict = out["conditions"], out["complementary"]
    print(f"idempotent conditions: worst residual {cond.worst():.3e}")
    print(f"split complementary: worst residual {verdict.worst():.3e}")
    if not (cond.passed and verdict.passed):
        if degenerate:
            print("warning: windowed suite failures ignored at this degree")
        else:
            return 2

    recovered = out["split"]
    err = max(float(np.max(np.abs(recovered.morphism(role)
                                  - gadget.morphism(role))))
              for role in recovered.morphisms if role in gadget.morphisms)
    print(f"recovery error {err:.3e}")
    if degenerate and err > args.tol * 10:
        print("warning: recovery is truncated below degree 2; only the "
              "retraction is exact")
        return 0 if max(r1, r2) <= args.tol else 2
    return 0 if err <= args.tol * 10 else 2


def cmd_examples(args) -> int:
    for name in fixture_names():
        print(name)
    return 0


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="ldckit")
    sub = top.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("validate", help="check circuit correctness by boxing")
    p.add_argument("path")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("normalize", help="apply reduction rewrites")
    p.add_argument("path")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("render", help="emit a DOT drawing")
    p.add_argument("path")
    p.add_argument("--format", default="dot")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("check", help="run an equation suite on a gadget")
    p.add_argument("--suite", required=True)
    p.add_argument("--gadget", required=True)
    p.add_argument("--report")
    _common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("split", help="split an idempotent on a gadget")
    p.add_argument("--gadget", required=True)
    p.add_argument("--kind", choices=sorted(_SPLITTERS), default="binary")
    p.add_argument("-o", "--output")
    _common(p)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("exp", help="exponential-modality commands")
    esub = p.add_subparsers(dest="expcmd", required=True)
    pd = esub.add_parser("demo", help="lift, retract, and re-split a "
                                      "complementary system")
    pd.add_argument("--gadget", required=True)
    _common(pd)
    pd.set_defaults(func=cmd_exp_demo)

    p = sub.add_parser("examples", help="list built-in gadgets")
    p.set_defaults(func=cmd_examples)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SuiteFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (LdcError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
