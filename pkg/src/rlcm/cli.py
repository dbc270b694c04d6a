"""Command-line front end.

    rlcm lcm SPEC X Y [--radius L]
    rlcm check SPEC --check {covariance,wick,rightlcm,cancellativity,inclusion,zf} [...]
    rlcm classify (SPEC | --matrix "1 3; 3 1")
    rlcm ball SPEC [--radius L]

Exit codes: 0 report produced (whatever the verdicts), 1 ``--assert-holds``
and some verdict is not Holds, 2 bad input, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from collections import Counter

from .artin import (
    Unknown,
    amenability_verdict,
    classify,
    dihedral_witness_report,
    propagate_graph_product,
)
from .inclusions import (
    ParabolicInclusion,
    check_closed_under_factorization,
    check_preserves_orthogonality,
    check_respects_lcm,
)
from .lcm import lcm, verify_right_lcm
from .matrices import psd
from .presentations import (
    DEFAULT_CAP,
    CoxeterMatrix,
    ResourceError,
    WordSyntaxError,
    check_cancellativity,
    default_names,
    enumerate_ball,
)
from .replab import (
    UnresolvedLcm,
    build_regular_rep,
    covariance_items,
    wick_items,
    z_functional,
)
from .report import dumps, make_report
from .specfile import load_representation, load_spec
from .verdict import Fails, Holds, Inconclusive, aggregate

CAP_ENV = "RLCM_CAP"
DEFAULT_RADIUS = 5


class UsageError(ValueError):
    pass


def _cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get(CAP_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{CAP_ENV}={env!r} is not an integer") from None
    return DEFAULT_CAP


def _word(pres, text: str, what: str):
    try:
        return pres.parse_word(text)
    except WordSyntaxError as exc:
        raise UsageError(f"{what} {text!r}: {exc}") from None


def _in_ball(ball, word, text):
    if len(word) > ball.radius:
        raise UsageError(f"word {text!r} is longer than the radius {ball.radius}")
    return ball.index(word)


def _subset(pres, text: str) -> frozenset:
    lookup = {n: i for i, n in enumerate(pres.names)}
    out = set()
    for tok in filter(None, (t.strip() for t in text.split(","))):
        if tok not in lookup:
            raise UsageError(f"--subset: unknown generator {tok!r}")
        out.add(lookup[tok])
    return frozenset(out)


def cmd_lcm(args):
    spec = load_spec(args.spec)
    pres = spec.presentation
    x, y = _word(pres, args.x, "x"), _word(pres, args.y, "y")
    ball = enumerate_ball(pres, args.radius, _cap(args))
    res = lcm(ball, _in_ball(ball, x, args.x), _in_ball(ball, y, args.y))
    results = {"x": x, "y": y, "result": res.to_json(ball), "certificate": res.kind}
    ok = res.kind in ("lcm", "proven_empty")
    return make_report("lcm", [args.spec], {"radius": args.radius, "cap": _cap(args)}, results, pres), ok


def _pair_items(ball, items, all_items):
    counts = Counter(v.kind for _, _, v in items)
    listed = [
        {"x": ball.words[x], "y": ball.words[y], "verdict": v}
        for x, y, v in items if all_items or v.kind != "holds"
    ]
    verdict = aggregate((v for _, _, v in items), ball.radius)
    return {"verdict": verdict, "counts": dict(sorted(counts.items())), "items": listed, "pairs": len(items)}


def _representation(args, ball):
    if args.rep in (None, "regular"):
        return build_regular_rep(ball)
    return load_representation(args.rep, ball.presentation)


def cmd_check(args):
    spec = load_spec(args.spec)
    pres = spec.presentation
    cap = _cap(args)
    ball = enumerate_ball(pres, args.radius, cap)
    inputs = [args.spec] + ([args.rep] if args.rep not in (None, "regular") else [])
    params = {"check": args.check, "radius": args.radius, "cap": cap}
    check = args.check
    if check in ("covariance", "wick"):
        rep = _representation(args, ball)
        params["rep"] = args.rep or "regular"
        fn = covariance_items if check == "covariance" else wick_items
        results = _pair_items(ball, fn(rep, ball), args.all_items)
        verdicts = [results["verdict"]]
    elif check == "rightlcm":
        v = verify_right_lcm(ball)
        results, verdicts = {"verdict": v}, [v]
    elif check == "cancellativity":
        if args.radius < 2:
            raise UsageError("cancellativity needs --radius >= 2")
        v = check_cancellativity(ball)
        results, verdicts = {"verdict": v}, [v]
    elif check == "inclusion":
        if args.subset is None:
            raise UsageError("--check inclusion needs --subset")
        subset = _subset(pres, args.subset)
        params["subset"] = sorted(pres.names[s] for s in subset)
        inc = ParabolicInclusion(ball, subset)
        named = {
            "closed_under_factorization": check_closed_under_factorization(inc),
            "preserves_orthogonality": check_preserves_orthogonality(inc),
            "respects_lcm": check_respects_lcm(inc),
        }
        results, verdicts = named, list(named.values())
    elif check == "zf":
        if args.set is None:
            raise UsageError("--check zf needs --set")
        words = [_word(pres, t, "--set element") for t in args.set.split(",") if t.strip()]
        F = [_in_ball(ball, w, pres.format_word(w)) for w in words]
        rep = _representation(args, ball)
        params["set"] = [pres.format_word(w) for w in words]
        params["rep"] = args.rep or "regular"
        try:
            Z = z_functional(rep, ball, F)
        except UnresolvedLcm as exc:
            v = Inconclusive(ball.radius, str(exc), 1)
            results, verdicts = {"verdict": v, "matrix": None, "psd": None}, [v]
        else:
            positive = psd(Z)
            v = Holds(ball.radius, 1) if positive else Fails({"psd": False}, ball.radius)
            results = {"verdict": v, "matrix": Z, "psd": positive, "dim": Z.rows}
            verdicts = [v]
    else:  # argparse restricts choices
        raise UsageError(f"unknown check {check!r}")
    ok = all(isinstance(v, Holds) for v in verdicts)
    return make_report("check", inputs, params, results, pres), ok


def _parse_matrix_option(text: str) -> CoxeterMatrix:
    rows = [r.split() for r in text.split(";") if r.strip()]
    try:
        return CoxeterMatrix.from_rows(rows)
    except ValueError as exc:
        raise UsageError(f"--matrix: {exc}") from None


def _artin_results(M, radius, cap, pres=None):
    cls = classify(M)
    verdict = amenability_verdict(M)
    out = {"class": cls, "verdict": verdict}
    names = pres.names if pres is not None else default_names(M.n)
    if not cls.right_angled:
        i, j, m = cls.offending_entry
        if M.n > 2:
            rep = dihedral_witness_report(M, radius, cap, pres)
            out["dihedral_witness"] = {
                "generators": [names[i], names[j]],
                "m": m,
                "radius": radius,
                "checks": rep.verdicts(),
                "caveats": rep.caveats,
            }
        else:
            out["dihedral_witness"] = {"generators": [names[i], names[j]], "m": m,
                                       "note": "the monoid is itself dihedral"}
    return out


def cmd_classify(args):
    cap = _cap(args)
    params = {"radius": args.radius}
    if args.matrix is not None:
        M = _parse_matrix_option(args.matrix)
        return make_report("classify", [], params, _artin_results(M, args.radius, cap)), True
    if args.spec is None:
        raise UsageError("classify needs a spec file or --matrix")
    spec = load_spec(args.spec)
    pres = spec.presentation
    if spec.is_artin:
        return make_report("classify", [args.spec], params,
                           _artin_results(spec.coxeter, args.radius, cap, pres), pres), True
    if spec.kind != "graphproduct":
        raise UsageError("classify needs an Artin monoid (coxeter/free) or a graph product of them; "
                         f"got a {spec.kind} spec")
    factor_verdicts = []
    for f in spec.factors:
        if f.is_artin:
            factor_verdicts.append(amenability_verdict(f.coxeter))
        else:
            factor_verdicts.append(Unknown("factor is not an Artin monoid"))
    verdict = propagate_graph_product(spec.graph, factor_verdicts, [f.presentation for f in spec.factors])
    results = {"factor_verdicts": factor_verdicts, "verdict": verdict}
    if isinstance(verdict, Unknown) and pres.coxeter is not None:
        # every factor is Artin, so the product is the Artin monoid of the combined matrix
        results["combined_artin"] = {
            "coxeter": pres.coxeter.to_json(),
            "class": classify(pres.coxeter),
            "verdict": amenability_verdict(pres.coxeter),
        }
    return make_report("classify", [args.spec], params, results, pres), True


def cmd_ball(args):
    spec = load_spec(args.spec)
    pres = spec.presentation
    ball = enumerate_ball(pres, args.radius, _cap(args))
    results = {"size": len(ball), "sizes_by_length": list(ball.sizes_by_length())}
    if args.list:
        results["elements"] = [
            {"canonical": w, "class_size": len(c)} for w, c in zip(ball.words, ball.classes)
        ]
    return make_report("ball", [args.spec], {"radius": args.radius, "cap": _cap(args)}, results, pres), True


def _text(report: dict) -> str:
    lines = [f"rlcm {report['command']}  {report.get('monoid', '')}".rstrip()]

    def walk(obj, indent):
        pad = "  " * indent
        if isinstance(obj, dict):
            if "kind" in obj and indent:
                extra = ", ".join(f"{k}={v}" for k, v in obj.items() if k != "kind" and not isinstance(v, (dict, list)))
                lines[-1] += f" {obj['kind']}" + (f" ({extra})" if extra else "")
                for k, v in obj.items():
                    if isinstance(v, (dict, list)) and v:
                        lines.append(f"{pad}{k}:")
                        walk(v, indent + 1)
                return
            for k, v in obj.items():
                if isinstance(v, (dict, list)) and v:
                    lines.append(f"{pad}{k}:")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}{k}: {v}")
        elif isinstance(obj, list):
            for v in obj:
                if isinstance(v, (dict, list)):
                    lines.append(f"{pad}-")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}- {v}")

    walk({"parameters": report["parameters"], "results": report["results"]}, 0)
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--radius", "-L", type=int, default=DEFAULT_RADIUS, help="ball radius (default 5)")
    common.add_argument("--cap", type=int, default=None, help=f"saturation/ball word cap (env {CAP_ENV})")
    common.add_argument("--json", action="store_true", help="emit canonical JSON")
    common.add_argument("--assert-holds", action="store_true", help="exit 1 unless every verdict Holds")
    common.add_argument("--timing", action="store_true", help="add wall-clock timing to the report")

    p = argparse.ArgumentParser(prog="rlcm", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("lcm", parents=[common], help="least common multiple of two words")
    s.add_argument("spec")
    s.add_argument("x")
    s.add_argument("y")
    s.set_defaults(func=cmd_lcm)

    s = sub.add_parser("check", parents=[common], help="run a checker over the ball")
    s.add_argument("spec")
    s.add_argument("--check", required=True,
                   choices=["covariance", "wick", "rightlcm", "cancellativity", "inclusion", "zf"])
    s.add_argument("--subset", help="comma-separated generators of a parabolic submonoid")
    s.add_argument("--set", help="comma-separated words forming F for Z(F)")
    s.add_argument("--rep", default=None, help="'regular' (default) or a representation file")
    s.add_argument("--all-items", action="store_true", help="list every pair, not only non-Holds ones")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("classify", parents=[common], help="Artin type and Nica-amenability verdict")
    s.add_argument("spec", nargs="?")
    s.add_argument("--matrix", help='Coxeter matrix rows separated by ";", e.g. "1 3; 3 1"')
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("ball", parents=[common], help="census of the ball")
    s.add_argument("spec")
    s.add_argument("--list", action="store_true", help="list canonical words")
    s.set_defaults(func=cmd_ball)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        if args.radius < 0:
            raise UsageError("--radius must be non-negative")
        report, ok = args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        # bad spec, word, representation or option
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"rlcm: error: {msg}", file=sys.stderr)
        return 2
    except ResourceError as exc:
        print(f"rlcm: resource cap exceeded: {exc}", file=sys.stderr)
        return 3
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 3)
    sys.stdout.write(dumps(report) if args.json else _text(report))
    if args.assert_holds and not ok:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
