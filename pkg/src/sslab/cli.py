"""
Command line front end.

Exit status: 0 on success, 1 when a verification finds counterexamples,
2 on malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .errors import SSLabError
from .groups import (
    FiniteGroup,
    Presentation,
    abelianization,
    alexander_polynomial,
    fill_quotient,
    hom_count,
    rational_longitude,
)
from .lspace import certify
from .seifert import (
    FiberFilling,
    SeifertBounded,
    SeifertClosed,
    fill,
    from_json as seifert_from_json,
    fundamental_group,
    h1,
    normalize_invariants,
    recognize,
)
from .slopes import Slope
from .tangles import double_branched_cover, tangle_from_slope, two_bridge


class UsageError(Exception):
    pass


def _read_source(text_or_path):
    try:
        if text_or_path == "-":
            return json.load(sys.stdin)
        with open(text_or_path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise UsageError(f"no such file: {text_or_path}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{text_or_path}: invalid JSON ({exc})") from None


def _loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON ({exc})") from None


def _load_object(args):
    """A Seifert manifold or a presentation from --manifold/--seifert/--group/--presentation."""
    data = None
    for attr, loader in (
        ("manifold", _read_source),
        ("group", _read_source),
        ("seifert", _loads),
        ("presentation", _loads),
    ):
        value = getattr(args, attr, None)
        if value is not None:
            data = loader(value)
            break
    if data is None:
        raise UsageError("no input given (use --manifold FILE, --seifert JSON, --group FILE or --presentation JSON)")
    if isinstance(data, dict) and "generators" in data:
        return Presentation.from_json(data)
    return seifert_from_json(data)


def _as_presentation(obj):
    if isinstance(obj, Presentation):
        return obj
    if isinstance(obj, FiberFilling):
        return obj.group()
    return fundamental_group(obj)


def _need(obj, kinds, what):
    if not isinstance(obj, kinds):
        raise UsageError(f"{what} needs {' or '.join(k.__name__ for k in kinds)}, got {type(obj).__name__}")
    return obj


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_fill(args):
    obj = _load_object(args)
    slope = Slope.parse(args.slope)
    if isinstance(obj, Presentation):
        out = fill_quotient(obj, args.boundary, slope)
    else:
        out = fill(_need(obj, (SeifertBounded,), "fill"), args.boundary, slope)
    # always JSON, so the result can be fed back in with --manifold -
    print(json.dumps(out.to_json(), sort_keys=True))
    return 0


def cmd_h1(args):
    obj = _load_object(args)
    if isinstance(obj, (SeifertClosed, SeifertBounded)):
        g = h1(obj)
    else:
        g = abelianization(_as_presentation(obj))
    _emit(args, g.to_json(), str(g))
    return 0


def cmd_abelianize(args):
    P = _as_presentation(_load_object(args))
    g = abelianization(P)
    _emit(args, g.to_json(), str(g))
    return 0


def cmd_recognize(args):
    m = _need(_load_object(args), (SeifertClosed,), "recognize")
    r = recognize(normalize_invariants(m))
    _emit(args, r.to_json(), str(r))
    return 0


def cmd_lspace(args):
    m = _need(_load_object(args), (SeifertClosed,), "lspace")
    cert = certify(m, use_recognition=not args.no_recognition)
    lines = [f"verdict: {cert.verdict.value}", f"rule:    {cert.rule.value}"]
    for k, v in cert.witness.items():
        lines.append(f"  {k}: {v}")
    _emit(args, cert.to_json(), "\n".join(lines))
    return 0


def cmd_longitude(args):
    P = _as_presentation(_load_object(args))
    s = rational_longitude(P, args.boundary)
    _emit(args, s.to_json(), str(s))
    return 0


def cmd_homcount(args):
    P = _as_presentation(_load_object(args))
    try:
        G = FiniteGroup.by_name(args.target)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    n = hom_count(P, G, budget=args.budget)
    _emit(args, {"target": G.name, "count": n}, str(n))
    return 0


def cmd_alexander(args):
    P = _as_presentation(_load_object(args))
    poly = alexander_polynomial(P)
    _emit(args, poly.to_json(), str(poly))
    return 0


def cmd_tangle(args):
    t = tangle_from_slope(Slope.parse(args.slope))
    link = two_bridge(t)
    lens = double_branched_cover(link)
    payload = {
        "fraction": [t.p, t.q],
        "continued_fraction": list(t.continued_fraction),
        "link": link.name,
        "double_branched_cover": lens.name,
    }
    text = f"tangle {t}\nlink   {link}\ncover  {lens}"
    _emit(args, payload, text)
    return 0


def cmd_verify(args):
    reports = []
    if args.target == "paper":
        chosen = {k for k in ("lemma1", "theorem", "fibration", "remark") if getattr(args, k)}
        if args.all or not chosen:
            chosen = {"lemma1", "theorem", "fibration", "remark"}
        if "lemma1" in chosen:
            reports.append(harness.lemma1_scan(args.p_bound or harness.DEFAULT_LEMMA1_BOUND))
        if "theorem" in chosen:
            reports.append(harness.theorem_scan(args.alpha_bound, args.beta_bound))
        if "fibration" in chosen:
            reports.append(harness.fibration_scan(args.p_bound or harness.DEFAULT_FIBRATION_BOUND))
        if "remark" in chosen:
            reports.append(harness.remark_scan(args.p_bound or harness.DEFAULT_REMARK_BOUND))
    else:
        try:
            cones = [int(x) for x in args.cones.split(",") if x.strip()]
        except ValueError:
            raise UsageError(f"bad cone list {args.cones!r}") from None
        reports.append(harness.theorem_scan(args.alpha_bound, args.beta_bound, cones))
    ok = all(r.ok for r in reports)
    if args.json:
        print(json.dumps({"ok": ok, "reports": [r.to_json() for r in reports]}, sort_keys=True))
    else:
        for r in reports:
            print(r.format_summary())
            for c in r.counterexamples[:10]:
                print(f"  counterexample: {json.dumps(c, sort_keys=True)}")
        print("ALL PASS" if ok else "FAILURES FOUND")
    if args.report:
        with open(args.report, "w") as fh:
            json.dump({"ok": ok, "reports": [r.to_json(timing=True) for r in reports]}, fh, indent=1, sort_keys=True)
    return 0 if ok else 1


def _add_inputs(p, group=True):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--manifold", metavar="FILE", help="JSON file (Seifert data or presentation), '-' for stdin")
    src.add_argument("--seifert", metavar="JSON", help="Seifert data as a JSON string")
    if group:
        src.add_argument("--group", metavar="FILE", help="presentation JSON file, '-' for stdin")
        src.add_argument("--presentation", metavar="JSON", help="presentation as a JSON string")


def build_parser():
    parser = argparse.ArgumentParser(prog="sslab", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fill", help="Dehn fill one boundary torus")
    _add_inputs(p)
    p.add_argument("--boundary", type=int, required=True, help="0-based boundary index")
    p.add_argument("--slope", required=True, help="slope p/q in that torus's basis")
    p.set_defaults(func=cmd_fill)

    p = sub.add_parser("h1", help="first homology")
    _add_inputs(p)
    p.set_defaults(func=cmd_h1)

    p = sub.add_parser("recognize", help="recognize a closed Seifert manifold")
    _add_inputs(p, group=False)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("lspace", help="L-space certificate")
    _add_inputs(p, group=False)
    p.add_argument("--no-recognition", action="store_true", help="always use the general S^2 criterion")
    p.set_defaults(func=cmd_lspace)

    p = sub.add_parser("abelianize", help="abelianization of a presentation")
    _add_inputs(p)
    p.set_defaults(func=cmd_abelianize)

    p = sub.add_parser("longitude", help="rational longitude of a boundary torus")
    _add_inputs(p)
    p.add_argument("--boundary", type=int, default=0)
    p.set_defaults(func=cmd_longitude)

    p = sub.add_parser("homcount", help="count homomorphisms into a finite group")
    _add_inputs(p)
    p.add_argument("--target", required=True, help="S3, D4, Z/5, Q8, A4, ...")
    p.add_argument("--budget", type=int, default=10**8)
    p.set_defaults(func=cmd_homcount)

    p = sub.add_parser("alexander", help="Alexander polynomial (first Betti number one)")
    _add_inputs(p)
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("tangle", help="rational tangle, two-bridge link and lens space of a slope")
    p.add_argument("--slope", required=True)
    p.set_defaults(func=cmd_tangle)

    p = sub.add_parser("verify", help="run the verification scans")
    p.add_argument("target", choices=["paper", "generalized"])
    p.add_argument("--all", action="store_true")
    for name in ("lemma1", "theorem", "fibration", "remark"):
        p.add_argument(f"--{name}", action="store_true")
    p.add_argument("--alpha-bound", type=int, default=harness.DEFAULT_ALPHA_BOUND)
    p.add_argument("--beta-bound", type=int, default=harness.DEFAULT_BETA_BOUND)
    p.add_argument("--p-bound", type=int, default=None)
    p.add_argument("--cones", default="2", help="comma-separated cone points (generalized)")
    p.add_argument("--report", metavar="FILE", help="also write the full JSON report here")
    p.set_defaults(func=cmd_verify)
    return parser


def _hoist_json_flag(argv):
    # accept --json anywhere on the line
    if "--json" in argv:
        argv = ["--json"] + [a for a in argv if a != "--json"]
    return argv


def run(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_hoist_json_flag(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, SSLabError) as exc:
        print(f"sslab {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
