"""Command-line interface.

    nilrep analyze --group "H3" --target "SL2" [--json]
    nilrep poincare --group "Z^2" --target "Sp4"
    nilrep pi1 --group "H3" --target "GL2"
    nilrep connectivity --group "F(2,3)" --target "Sp4"
    nilrep homcount --group "H3" [--finite q8]
    nilrep bound --m 3
    nilrep selftest

Exit codes: 0 success, 2 parse error, 3 unsupported or too large.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (InexactDivision, ParseError, TooLarge, UnsupportedGroup,
                     UnsupportedQuotient, UnsupportedType)
from .finitehom import (central_image_order_bound, connectivity_verdict,
                        cyclic, dihedral, enumerate_homs, q8)
from .groups import FreeAbelian, abelianize
from .invariants import poincare_char_variety, poincare_hom_component
from .parsing import parse_group_spec, parse_reductive_spec
from .report import analyze
from .rootdata import build_root_datum, pi1_G, pi1_G_ab
from . import selftest as _selftest


def _emit(payload: dict, args) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for key, value in payload.items():
            print("%s: %s" % (key, value))


def _finite_target(name: str):
    if name == "q8":
        return q8()
    if name.startswith("c") and name[1:].isdigit():
        return cyclic(int(name[1:]))
    if name.startswith("d") and name[1:].isdigit():
        return dihedral(int(name[1:]))
    raise ParseError("unknown finite group %r" % name, 0, ("q8", "cN", "dN"))


def _group_arg(args):
    if getattr(args, "r_override", None) is not None:
        return FreeAbelian(args.r_override)
    return parse_group_spec(args.group)


def _cmd_analyze(args) -> int:
    report = analyze(_group_arg(args), parse_reductive_spec(args.target),
                     r_max_guard=args.r_guard)
    if args.json:
        print(json.dumps(report.to_json_dict(), sort_keys=True, indent=2))
    else:
        print(report.to_text())
    return 0


def _cmd_poincare(args) -> int:
    g = _group_arg(args)
    spec = parse_reductive_spec(args.target)
    rd = build_root_datum(spec)
    r = abelianize(g).rank
    hom = poincare_hom_component(rd, r)
    char = poincare_char_variety(rd, r)
    _emit({"group": str(g), "target": str(spec), "r": r,
           "poincare_hom": list(hom.coefficients) if args.json else str(hom),
           "poincare_char": list(char.coefficients) if args.json else str(char)},
          args)
    return 0


def _cmd_pi1(args) -> int:
    g = _group_arg(args)
    spec = parse_reductive_spec(args.target)
    rd = build_root_datum(spec)
    r = abelianize(g).rank
    hom = pi1_G(rd).self_power(r)
    char_rank = pi1_G_ab(rd) * r
    if args.json:
        _emit({"group": str(g), "target": str(spec), "r": r,
               "pi1_hom": {"rank": hom.rank, "torsion": list(hom.torsion)},
               "pi1_char": {"rank": char_rank, "torsion": []}}, args)
    else:
        print("pi_1 of Hom(%s, %s)_1: %s" % (g, spec, hom))
        print("pi_1 of the character variety: %s"
              % ("Z^%d" % char_rank if char_rank else "1"))
    return 0


def _cmd_connectivity(args) -> int:
    g = _group_arg(args)
    spec = parse_reductive_spec(args.target)
    verdict = connectivity_verdict(g, spec)
    payload = {"group": str(g), "target": str(spec),
               "status": verdict.status, "reason": verdict.reason}
    if verdict.witness is not None:
        labels = q8().labels
        payload["witness"] = [labels[i] for i in verdict.witness]
    _emit(payload, args)
    return 0


def _cmd_homcount(args) -> int:
    g = parse_group_spec(args.group)
    target = _finite_target(args.finite)
    result = enumerate_homs(g, target)
    payload = {"group": str(g), "finite_target": target.name,
               "total": result.total, "surjective": result.surjective}
    if result.witness is not None:
        names = result.presentation.generator_names()
        payload["witness"] = ["%s -> %s" % (names[k], target.labels[v])
                              for k, v in enumerate(result.witness)]
    _emit(payload, args)
    return 0


def _cmd_bound(args) -> int:
    _emit({"m": args.m, "bound": central_image_order_bound(args.m)}, args)
    return 0


def _cmd_selftest(args) -> int:
    return _selftest.run()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilrep",
        description="Topology of representation and character varieties of "
                    "finitely generated nilpotent groups in reductive groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, group=True, target=True, override=False):
        p = sub.add_parser(name, help=help_text)
        if group:
            p.add_argument("--group", required=not override,
                           help="group DSL, e.g. 'H3', 'F(2,3)', 'Z^2', "
                                "'<x,y | [x,y]>'")
        if target:
            p.add_argument("--target", required=True,
                           help="reductive DSL, e.g. 'SL2', 'GL3 x T2'")
        if override:
            p.add_argument("--r-override", type=int, default=None,
                           metavar="N", help="analyze Hom(Z^N, G) directly")
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")
        p.set_defaults(func=fn)
        return p

    p = add("analyze", _cmd_analyze, "full report for one pair",
            override=True)
    p.add_argument("--r-guard", type=int, default=8, metavar="N",
                   help="skip Poincare polynomials beyond this rank")
    add("poincare", _cmd_poincare, "the two Poincare polynomials",
        override=True)
    add("pi1", _cmd_pi1, "fundamental groups of both spaces", override=True)
    add("connectivity", _cmd_connectivity, "connectivity verdict")
    p = add("homcount", _cmd_homcount,
            "count homomorphisms into a finite group", target=False)
    p.add_argument("--finite", default="q8", metavar="F",
                   help="finite target: q8, cN (cyclic), dN (dihedral)")
    p = sub.add_parser("bound", help="explicit central-image order bound")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bound)
    p = sub.add_parser("selftest", help="run the built-in sanity checks")
    p.set_defaults(func=_cmd_selftest, json=False)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        _report_error(args, "parse", exc)
        return 2
    except (TooLarge, UnsupportedType, UnsupportedGroup, UnsupportedQuotient,
            InexactDivision) as exc:
        _report_error(args, type(exc).__name__, exc)
        return 3


def _report_error(args, kind, exc) -> None:
    if getattr(args, "json", False):
        print(json.dumps({"error": {"type": kind, "message": str(exc)}},
                         sort_keys=True, indent=2))
    else:
        print("error (%s): %s" % (kind, exc), file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
