"""Command-line front end.

    qgwa [--params generic|p=2,q=3,...] [--algebra A|A-w|A-loc|torus]
         [--output text|json] COMMAND ...

Exit status is 0 exactly when the command's verdict is success; usage and
input errors exit with 2.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

from . import acceptance
from .algebra import Algebra, AlgebraError, NotAUnitError
from .gwa import from_gwa, to_gwa
from .localization import QuantumTorus, ideal_membership, invert_unit, torus_matrix
from .morphisms import MorphismError, classify_affine, dixmier_invert, verify_relations
from .parse import ParseError
from .probes import center_scan
from .scalars import ParamConfig, ScalarError
from .serialize import (dumps, element_to_json, genmap_from_json, genmap_to_json,
                        parse_element, parse_gwa)


class CliError(Exception):
    pass


def build_algebra(args):
    cfg = ParamConfig.parse(args.params)
    if args.algebra == "torus":
        return QuantumTorus(torus_matrix(Algebra(cfg)))
    alg = Algebra(cfg, kind=args.algebra)
    if alg.kind == "A-loc":
        alg.require_p_not_one()
    return alg


def emit(args, element=None, text=None, record=None):
    if args.output == "json":
        out = dict(record or {})
        if element is not None:
            out.update(element_to_json(element))
        print(dumps(out))
    else:
        if text is not None:
            print(text)
        elif element is not None:
            print(element.pretty())


def _element(args, text):
    return parse_element(text, build_algebra(args))


def _need_kind(args, *kinds):
    if args.algebra not in kinds:
        raise CliError(f"this command needs --algebra {' or '.join(kinds)}")


def _load_json(path):
    """Read a JSON file, or a shipped fixture when ``path`` names one."""
    if not os.path.exists(path):
        name = path if path.endswith(".json") else path + ".json"
        ref = resources.files("qgwa").joinpath("fixtures", name)
        if ref.is_file():
            return json.loads(ref.read_text())
        raise CliError(f"no such file: {path}")
    with open(path) as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise CliError(f"malformed JSON in {path}: {exc}")


# -- commands ---------------------------------------------------------------------

def cmd_nf(args):
    emit(args, _element(args, args.expr))
    return 0


def cmd_mul(args):
    emit(args, _element(args, args.left) * _element(args, args.right))
    return 0


def cmd_commutator(args):
    a, b = _element(args, args.left), _element(args, args.right)
    emit(args, a * b - b * a)
    return 0


def cmd_to_gwa(args):
    _need_kind(args, "A")
    emit(args, to_gwa(_element(args, args.expr)))
    return 0


def cmd_from_gwa(args):
    _need_kind(args, "A")
    emit(args, from_gwa(parse_gwa(args.expr, build_algebra(args))))
    return 0


def cmd_invert_unit(args):
    _need_kind(args, "A-loc")
    e = _element(args, args.expr)
    try:
        inv = invert_unit(e)
    except NotAUnitError as exc:
        emit(args, text=f"not a unit: {e.pretty()}", record={"unit": False, "error": str(exc)})
        return 1
    emit(args, inv, record={"unit": True})
    return 0


def cmd_ideal_member(args):
    _need_kind(args, "A")
    e = _element(args, args.expr)
    member = ideal_membership(e, args.gen)
    emit(args, text="true" if member else "false", record={"member": member, "ideal": args.gen})
    return 0 if member else 1


def cmd_center(args):
    res = center_scan(build_algebra(args), args.max_degree)
    if args.output == "json":
        out = res.summary()
        out["basis"] = [element_to_json(b) for b in res.basis]
        print(dumps(out))
    else:
        print(f"dimension {res.dimension} (max degree {res.max_degree})")
        for b in res.basis:
            print(f"  {b.pretty()}")
    return 0


def cmd_verify_morphism(args):
    f = genmap_from_json(_load_json(args.file))
    rep = verify_relations(f)
    if args.output == "json":
        print(dumps({
            "verified": rep.ok,
            "residuals": {n: element_to_json(r) for n, r in rep.residuals},
            "problems": rep.problems,
        }))
    else:
        for line in rep.lines():
            print(line)
    return 0 if rep.ok else 1


def cmd_dixmier_invert(args):
    f = genmap_from_json(_load_json(args.file))
    rep = verify_relations(f)
    if not rep.ok:
        for line in rep.lines():
            print(line)
        return 1
    res = dixmier_invert(rep.genmap)
    if args.output == "json":
        print(dumps({"psi": genmap_to_json(res.psi), "residual": genmap_to_json(res.residual),
                     "inverse": genmap_to_json(res.inverse)}))
    else:
        print(f"psi:      {res.psi.pretty()}")
        print(f"residual: {res.residual.pretty()}")
        print(f"inverse:  {res.inverse.pretty()}")
    return 0


def cmd_classify_affine(args):
    obj = _load_json(args.file)
    cfg = ParamConfig.parse(obj.get("params", args.params))
    res = classify_affine(cfg, obj["matrix"], obj.get("constant"))
    if args.output == "json":
        print(dumps({"verified": res.verified, "family": res.family}))
    else:
        if not res.verified:
            for line in res.report.lines():
                print(line)
        else:
            print(f"verified: {res.family}")
    return 0 if res.verified else 1


def cmd_suite(args):
    results = []
    for r in acceptance.run(args.filter, args.seed):
        results.append(r)
        if args.output == "text":
            print(r.line(), flush=True)
    if not results:
        print(f"no criteria match {args.filter!r}", file=sys.stderr)
        return 2
    failed = [r for r in results if not r.ok]
    if args.output == "json":
        print(dumps([{"number": r.number, "name": r.name, "ok": r.ok, "detail": r.detail,
                      "seconds": round(r.seconds, 3)} for r in results]))
    else:
        print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return 0 if not failed else 1


def make_parser():
    parser = argparse.ArgumentParser(prog="qgwa", description=__doc__.splitlines()[0])
    parser.add_argument("--params", default="generic",
                        help="'generic' or assignments like p=2,q=3,l=1,u=1")
    parser.add_argument("--algebra", default="A", choices=["A", "A-w", "A-loc", "torus"])
    parser.add_argument("--output", default="text", choices=["text", "json"])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", help="normal form of an expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_nf)
    for name, func in (("mul", cmd_mul), ("commutator", cmd_commutator)):
        p = sub.add_parser(name)
        p.add_argument("left")
        p.add_argument("right")
        p.set_defaults(func=func)
    p = sub.add_parser("to-gwa", help="rewrite in the z^a s^b t^c X^d basis")
    p.add_argument("expr")
    p.set_defaults(func=cmd_to_gwa)
    p = sub.add_parser("from-gwa", help="evaluate with z-basis arithmetic, print PBW form")
    p.add_argument("expr")
    p.set_defaults(func=cmd_from_gwa)
    p = sub.add_parser("invert-unit")
    p.add_argument("expr")
    p.set_defaults(func=cmd_invert_unit)
    p = sub.add_parser("ideal-member")
    p.add_argument("expr")
    p.add_argument("--gen", default="z", choices=["z", "s", "t"])
    p.set_defaults(func=cmd_ideal_member)
    p = sub.add_parser("center")
    p.add_argument("--max-degree", type=int, default=3)
    p.set_defaults(func=cmd_center)
    for name, func in (("verify-morphism", cmd_verify_morphism),
                       ("dixmier-invert", cmd_dixmier_invert),
                       ("classify-affine", cmd_classify_affine)):
        p = sub.add_parser(name)
        p.add_argument("file", help="JSON file (or the name of a shipped fixture)")
        p.set_defaults(func=func)
    p = sub.add_parser("suite", help="run the acceptance criteria")
    p.add_argument("--filter", default=None, help="tag or criterion number")
    p.add_argument("--seed", type=int, default=None, help="overrides GWA_SEED")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except (CliError, AlgebraError, MorphismError, ScalarError, ValueError, KeyError,
            TypeError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
