"""
The twisted I-bundle over the Klein bottle, the complement of a regular
fiber inside it, and exhaustive scans over their Dehn fillings.

Slope conventions (both tori of M, and the boundary of N):

* ``T1`` (index 0) is the boundary of N. Its basis is (section, phi0)
  where phi0 = ab is the fiber of the Mobius-band structure and the
  section is the class of ``a^-2 t^-1`` in M (``a^-2`` in N). The fiber
  phi1 of the D^2(2,2) structure is ``b^2 = a^-2``, the slope (1, 0).
* ``T2`` (index 1) is the torus around the removed fiber K0, with basis
  (mu, phi0), ``mu = t``.

Every scan returns a :class:`ScanReport` whose cases can be re-run from
their stored inputs.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Optional

from .errors import BadP, EmptyCones
from .groups import (
    AbelianGroup,
    FiniteGroup,
    Presentation,
    abelianization,
    alexander_polynomial,
    fill_quotient,
    hom_count,
    rational_longitude,
)
from .groups import words as W
from .lspace import Rule, Verdict, certify, is_qhs
from .seifert import (
    BaseOrbifold,
    Framing,
    SeifertBounded,
    SeifertClosed,
    fill,
    h1,
    lens_space_datum,
    normalize_invariants,
    recognize,
)
from .slopes import Slope, coprime_pairs, distance
from .tangles import (
    LensSpace,
    double_branched_cover,
    lens_homeo_equal,
    tangle_from_slope,
    two_bridge,
)

T1, T2 = 0, 1
PHI0 = Slope(0, 1)
PHI1 = Slope(1, 0)
MU = Slope(1, 0)

DEFAULT_ALPHA_BOUND = 10
DEFAULT_BETA_BOUND = 10
DEFAULT_LEMMA1_BOUND = 50
DEFAULT_FIBRATION_BOUND = 20
DEFAULT_REMARK_BOUND = 25


@dataclass(frozen=True)
class PaperObjects:
    n_mobius: SeifertBounded
    n_group: Presentation
    m_seifert: SeifertBounded
    m_group: Presentation
    n_disk: Optional[SeifertBounded] = None
    cones: tuple = ()

    def check(self):
        """The invariants every build must satisfy; returns a list of failures."""
        bad = []
        if self.n_disk is not None:
            phi0 = self.n_mobius.framings[0].fiber_slope
            phi1 = self.n_disk.framings[0].fiber_slope
            if distance(phi0, phi1) != 1:
                bad.append("distance(phi0, phi1) != 1")
        if not self.cones:
            if abelianization(self.n_group) != AbelianGroup(1, (2,)):
                bad.append("H1(N) != Z + Z/2")
            if abelianization(self.m_group) != AbelianGroup(2, (2,)):
                bad.append("H1(M) != Z^2 + Z/2")
        if rational_longitude(self.n_group, 0) != PHI0:
            bad.append("longitude of N is not phi0")
        if fill(self.m_seifert, T2, MU) != self.n_mobius:
            bad.append("M(-, mu) != N")
        if h1(self.n_mobius) != abelianization(self.n_group):
            bad.append("H1(N) differs between routes")
        return bad


def build_paper_objects() -> PaperObjects:
    n_mobius = SeifertBounded(BaseOrbifold(1, False, 1), (), (Framing(),))
    # D^2(2,2) structure: fiber b^2 = a^-2 is the slope (1, 0), section (ab)^-1
    n_disk = SeifertBounded(
        BaseOrbifold(0, True, 1), ((2, 1), (2, -1)), (Framing((0, 1), (1, 0)),)
    )
    n_group = Presentation.parse("ab", ["aabb"], [("AA", "ab")])
    m_seifert = SeifertBounded(BaseOrbifold(1, False, 2), (), (Framing(), Framing()))
    m_group = Presentation.parse(
        "abt", ["aabb", "[t,ab]"], [("AAT", "ab"), ("t", "ab")]
    )
    return PaperObjects(n_mobius, n_group, m_seifert, m_group, n_disk)


def build_generalized(cones) -> PaperObjects:
    """Fiber complement in the Seifert manifold over RP^2(cones), b_i = 1.

    M' is Seifert over a punctured Mobius band with the given cone points;
    filling T2 along mu gives the analogue N' of N.
    """
    cones = tuple(int(a) for a in cones)
    if not cones:
        raise EmptyCones("at least one cone point is required")
    if any(a < 2 for a in cones):
        raise ValueError(f"cone multiplicities must be >= 2: {cones}")
    fibers = tuple((a, 1) for a in cones)
    m_seifert = SeifertBounded(BaseOrbifold(1, False, 2), fibers, (Framing(), Framing()))

    pool = "cdefgijklmnopqrsuwxyz"
    if len(cones) > len(pool):
        raise ValueError("too many cone points")
    names = ("v",) + tuple(pool[: len(cones)]) + ("h", "t")
    v = (1,)
    cs = [(i + 2,) for i in range(len(cones))]
    h = (len(cones) + 2,)
    t = (len(cones) + 3,)
    rels = [W.multiply(v, h, W.inverse(v), h), W.commutator(t, h)]
    for c, a in zip(cs, cones):
        rels.append(W.commutator(c, h))
        rels.append(W.multiply(W.power(c, a), h))
    # v^2 c_1 ... c_k d_1 d_2 = 1 with d_2 = t
    d1 = W.inverse(W.multiply(W.power(v, 2), *cs, t))
    m_group = Presentation(names, tuple(rels), ((d1, h), (t, h)))

    n_mobius = fill(m_seifert, T2, MU)
    n_group = fill_quotient(m_group, T2, MU)
    return PaperObjects(n_mobius, n_group, m_seifert, m_group, None, cones)


@lru_cache(maxsize=None)
def _objects(cones):
    return build_generalized(cones) if cones else build_paper_objects()


# -- reports -------------------------------------------------------------------

@dataclass
class ScanReport:
    name: str
    params: dict
    cases: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def counterexamples(self):
        return [c for c in self.cases if not c["ok"]]

    @property
    def ok(self):
        return not self.counterexamples

    def revalidate(self) -> bool:
        """Re-run every case from its stored input and compare outcomes."""
        for case in self.cases:
            again = _CHECKS[case["kind"]](case["input"], self.params)
            if again != case:
                return False
        return True

    def summary(self):
        """One row per case class: (class, cases, failures)."""
        rows = {}
        for c in self.cases:
            n, bad = rows.get(c["class"], (0, 0))
            rows[c["class"]] = (n + 1, bad + (not c["ok"]))
        return [(k, n, bad) for k, (n, bad) in rows.items()]

    def format_summary(self):
        lines = [f"{self.name}  {_fmt_params(self.params)}"]
        width = max((len(k) for k, _, _ in self.summary()), default=5)
        for k, n, bad in self.summary():
            status = "ok" if not bad else f"{bad} FAILED"
            lines.append(f"  {k:<{width}}  {n:6d} cases  {status}")
        if self.skipped:
            lines.append(f"  {'skipped':<{width}}  {len(self.skipped):6d} cases")
        lines.append(f"  {'result':<{width}}  {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)

    def to_json(self, timing=False):
        out = {
            "name": self.name,
            "params": self.params,
            "ok": self.ok,
            "summary": [
                {"class": k, "cases": n, "failures": bad} for k, n, bad in self.summary()
            ],
            "cases": self.cases,
            "skipped": self.skipped,
            "counterexamples": self.counterexamples,
        }
        if timing:
            out["elapsed"] = self.elapsed
        return out


def _fmt_params(params):
    return " ".join(f"{k}={v}" for k, v in params.items())


def _workers():
    try:
        cap = int(os.environ.get("SSLAB_THREADS", "1"))
    except ValueError:
        cap = 1
    return max(1, min(cap, os.cpu_count() or 1))


def _run_cases(kind, inputs, params):
    checker = _CHECKS[kind]
    n = _workers()
    if n > 1 and len(inputs) > 200:
        with ProcessPoolExecutor(max_workers=n) as ex:
            chunk = max(1, len(inputs) // (4 * n))
            return list(ex.map(_check_one, [(kind, i, params) for i in inputs], chunksize=chunk))
    return [checker(i, params) for i in inputs]


def _check_one(args):
    kind, inp, params = args
    return _CHECKS[kind](inp, params)


# -- fillings after phi0 ------------------------------------------------------

def _predicted_lemma1(p):
    if p == 0:
        return AbelianGroup(2)
    if p == 1:
        return AbelianGroup(1)
    return AbelianGroup(1, (p,))


def _lemma1_case(inp, params):
    objs = _objects(tuple(params.get("cones", ())))
    p, q = inp["alpha"]
    g = fill_quotient(fill_quotient(objs.m_group, T1, PHI0), 0, Slope(p, q))
    got = abelianization(g)
    want = _predicted_lemma1(p)
    cls = "p=0" if p == 0 else "p=1" if p == 1 else "p>=2"
    return {
        "kind": "lemma1",
        "class": cls,
        "input": inp,
        "h1": str(got),
        "predicted": str(want),
        "ok": got == want,
    }


def lemma1_scan(bound=DEFAULT_LEMMA1_BOUND) -> ScanReport:
    """H_1 of M(phi0, alpha) for every alpha = (p, q), 0 <= p, |q| <= bound."""
    start = time.perf_counter()
    params = {"bound": bound}
    inputs = [
        {"alpha": s.to_json()}
        for s in coprime_pairs(range(0, bound + 1), range(-bound, bound + 1))
    ]
    report = ScanReport("lemma1", params, _run_cases("lemma1", inputs, params))
    report.elapsed = time.perf_counter() - start
    return report


# -- double fillings -----------------------------------------------------------

def _longitude_case(inp, params):
    cones = tuple(params.get("cones", ()))
    objs = _objects(cones)
    alpha = Slope(*inp["alpha"])
    filled = fill(objs.m_seifert, T2, alpha)
    group = fill_quotient(objs.m_group, T2, alpha)
    n = alpha.p
    expect_cones = tuple(sorted(cones + ((n,) if n > 1 else ())))
    lon = rational_longitude(group, 0)
    ok = (
        isinstance(filled, SeifertBounded)
        and not filled.base.orientable
        and filled.base.boundary_count == 1
        and filled.base.cone_points == expect_cones
        and lon == filled.framings[0].fiber_slope
        and lon == PHI0
    )
    return {
        "kind": "longitude",
        "class": "M(-,alpha) longitude",
        "input": inp,
        "base": filled.base.label() if isinstance(filled, SeifertBounded) else None,
        "longitude": lon.to_json(),
        "ok": ok,
    }


def _theorem_case(inp, params):
    cones = tuple(params.get("cones", ()))
    objs = _objects(cones)
    alpha = Slope(*inp["alpha"])
    beta = Slope(*inp["beta"])
    once = fill(objs.m_seifert, T2, alpha)
    closed = fill(once, T1, beta)
    out = {"kind": "theorem", "input": inp}
    if not isinstance(closed, SeifertClosed):
        out.update({"class": "not closed", "ok": False})
        return out
    n = distance(alpha, objs.m_seifert.framings[T2].fiber_slope)
    m = distance(beta, once.framings[0].fiber_slope)
    expect = tuple(sorted(cones + tuple(x for x in (n, m) if x > 1)))
    qhs = is_qhs(closed)
    cert = certify(closed) if qhs else None
    h_seifert = h1(closed)
    group = fill_quotient(fill_quotient(objs.m_group, T2, alpha), 0, beta)
    h_group = abelianization(group)
    ok = (
        not closed.base.orientable
        and closed.base.genus == 1
        and closed.base.cone_points == expect
        and qhs
        and cert.verdict is Verdict.LSPACE
        and cert.rule is Rule.NON_ORIENTABLE_BASE
        and cert.validate(closed)
        and h_seifert == h_group
        and recognize_irreducible(closed)
    )
    out.update(
        {
            "class": f"{closed.base.surface_name} with {len(closed.base.cone_points)} cones",
            "base": closed.base.label(),
            "qhs": qhs,
            "certificate": cert.to_json() if cert else None,
            "h1": str(h_seifert),
            "h1_group": str(h_group),
            "ok": ok,
        }
    )
    return out


def recognize_irreducible(m: SeifertClosed) -> bool:
    return recognize(normalize_invariants(m)).irreducible


def _n_table_case(inp, params):
    objs = _objects(())
    alpha = Slope(*inp["alpha"])
    a = distance(alpha, PHI0)
    b = distance(alpha, PHI1)
    mob = fill(objs.n_mobius, 0, alpha)
    disk = fill(objs.n_disk, 0, alpha)
    h_group = abelianization(fill_quotient(objs.n_group, 0, alpha))
    cert = certify(disk)
    want_rule = Rule.ELLIPTIC if b >= 2 else Rule.LENS_SPACE
    ok = (
        isinstance(mob, SeifertClosed)
        and isinstance(disk, SeifertClosed)
        and mob.base.label() == BaseOrbifold(1, False, 0, (a,)).label()
        and disk.base.label() == BaseOrbifold(0, True, 0, (2, 2, b)).label()
        and cert.verdict is Verdict.LSPACE
        and cert.rule is want_rule
        and h1(mob) == h1(disk) == h_group
    )
    return {
        "kind": "n_table",
        "class": "N(alpha) bases",
        "input": inp,
        "delta_phi0": a,
        "delta_phi1": b,
        "mobius_base": mob.base.label(),
        "disk_base": disk.base.label(),
        "disk_certificate": cert.to_json(),
        "h1": str(h_group),
        "ok": ok,
    }


def n_filling_table(bound=DEFAULT_ALPHA_BOUND) -> ScanReport:
    """Fillings of N: bases RP^2(a) and S^2(2,2,b), a, b <= bound."""
    start = time.perf_counter()
    params = {"bound": bound}
    inputs = [
        {"alpha": s.to_json()}
        for s in coprime_pairs(range(1, bound + 1), range(-bound, bound + 1))
        if s.q != 0
    ]
    report = ScanReport("n_filling_table", params, _run_cases("n_table", inputs, params))
    report.elapsed = time.perf_counter() - start
    return report


def theorem_scan(
    alpha_bound=DEFAULT_ALPHA_BOUND, beta_bound=DEFAULT_BETA_BOUND, cones=()
) -> ScanReport:
    """Closed fillings M(beta, alpha), beta != phi0, for distance(alpha, phi0) >= 2.

    ``alpha = (p, q)`` ranges over 2 <= p <= alpha_bound, |q| <= alpha_bound;
    ``beta = (m, r)`` over 0 <= m <= beta_bound, |r| <= beta_bound.
    """
    start = time.perf_counter()
    cones = tuple(cones)
    params = {"alpha_bound": alpha_bound, "beta_bound": beta_bound}
    if cones:
        params["cones"] = list(cones)
    alphas = list(
        coprime_pairs(range(2, alpha_bound + 1), range(-alpha_bound, alpha_bound + 1))
    )
    betas = list(coprime_pairs(range(0, beta_bound + 1), range(-beta_bound, beta_bound + 1)))
    report = ScanReport("theorem", params)
    report.cases += _run_cases(
        "longitude", [{"alpha": a.to_json()} for a in alphas], params
    )
    inputs, skipped = [], []
    for a in alphas:
        for b in betas:
            entry = {"alpha": a.to_json(), "beta": b.to_json()}
            if b == PHI0:
                skipped.append({**entry, "reason": "longitudinal"})
            else:
                inputs.append(entry)
    report.cases += _run_cases("theorem", inputs, params)
    report.skipped = skipped
    if not cones:
        table = n_filling_table(alpha_bound)
        report.cases += table.cases
    report.elapsed = time.perf_counter() - start
    return report


# -- Fibration obstruction -----------------------------------------------------

BUNDLE_HOMOLOGY = {
    "S2xS1": AbelianGroup(1),
    "S2 twisted S1": AbelianGroup(1),
    "RP2xS1": AbelianGroup(1, (2,)),
}


def product_z_z2() -> Presentation:
    """Z x Z/2, the fundamental group of RP^2 x S^1."""
    return Presentation.parse("xy", ["[x,y]", "yy"])


def _fibration_case(inp, params):
    objs = _objects(())
    p, q = inp["p"], inp["q"]
    group = fill_quotient(fill_quotient(objs.m_group, T1, PHI0), 0, Slope(p, q))
    got = abelianization(group)
    clashes = sorted(k for k, g in BUNDLE_HOMOLOGY.items() if g == got)
    s3 = FiniteGroup.symmetric(3)
    count = hom_count(group, s3)
    involutions = sum(1 for g in range(s3.order) if s3.power(g, p) == s3.identity)
    out = {
        "kind": "fibration",
        "input": inp,
        "h1": str(got),
        "bundle_clashes": clashes,
        "hom_S3": count,
        "free_product_formula": s3.order * involutions,
    }
    ok = got == AbelianGroup(1, (p,)) and count == s3.order * involutions
    if p == 2:
        reference = hom_count(product_z_z2(), s3)
        out["hom_S3_ZxZ2"] = reference
        out["class"] = "p=2 (finite quotients)"
        ok = ok and clashes == ["RP2xS1"] and count == 24 and reference == 12
    else:
        out["class"] = "p>2 (homology)"
        ok = ok and not clashes
    out["ok"] = ok
    return out


def fibration_obstruction_check(p: int, q: int) -> ScanReport:
    """Computable shadows of the non-fibering argument for M(-, (p, q))."""
    if p < 2 or gcd(p, q) != 1:
        raise BadP(f"need p >= 2 and gcd(p, q) = 1, got ({p}, {q})")
    start = time.perf_counter()
    report = ScanReport("fibration", {"p": p, "q": q})
    report.cases.append(_fibration_case({"p": p, "q": q}, report.params))
    report.elapsed = time.perf_counter() - start
    return report


def fibration_scan(p_bound=DEFAULT_FIBRATION_BOUND) -> ScanReport:
    start = time.perf_counter()
    params = {"p_bound": p_bound}
    inputs = [
        {"p": p, "q": q}
        for p in range(2, p_bound + 1)
        for q in range(-p, p + 1)
        if gcd(p, q) == 1
    ]
    report = ScanReport("fibration", params, _run_cases("fibration", inputs, params))
    report.elapsed = time.perf_counter() - start
    return report


# -- tangles --------------------------------------------------------------------

def tangle_lens(alpha: Slope) -> LensSpace:
    return double_branched_cover(two_bridge(tangle_from_slope(alpha)))


def _remark_case(inp, params):
    objs = _objects(())
    p, q = inp["alpha"]
    alpha = Slope(p, q)
    lens = tangle_lens(alpha)
    shifted = tangle_lens(Slope(p, q + p))
    group = fill_quotient(fill_quotient(objs.m_group, T1, PHI0), 0, alpha)
    torsion = abelianization(group).torsion_order
    rec = recognize(lens_space_datum(p, q))
    seifert_lens = LensSpace(rec.detail["p"], rec.detail["q"])
    ok = (
        lens.p == p == torsion
        and lens_homeo_equal(lens, shifted)
        and lens_homeo_equal(lens, seifert_lens)
    )
    return {
        "kind": "remark",
        "class": "tangle lens vs torsion",
        "input": inp,
        "tangle": str(tangle_from_slope(alpha)),
        "link": two_bridge(tangle_from_slope(alpha)).name,
        "lens": lens.name,
        "torsion_order": torsion,
        "ok": ok,
    }


def remark_scan(bound=DEFAULT_REMARK_BOUND) -> ScanReport:
    start = time.perf_counter()
    params = {"bound": bound}
    inputs = [
        {"alpha": s.to_json()}
        for s in coprime_pairs(range(2, bound + 1), range(-bound, bound + 1))
    ]
    report = ScanReport("remark", params, _run_cases("remark", inputs, params))
    report.elapsed = time.perf_counter() - start
    return report


def alexander_record(alpha: Slope):
    """Alexander polynomial of M(-, alpha); recorded, not a gate."""
    objs = _objects(())
    return alexander_polynomial(fill_quotient(objs.m_group, T2, alpha))


_CHECKS = {
    "lemma1": _lemma1_case,
    "longitude": _longitude_case,
    "theorem": _theorem_case,
    "n_table": _n_table_case,
    "fibration": _fibration_case,
    "remark": _remark_case,
}


def verify_all(
    alpha_bound=DEFAULT_ALPHA_BOUND,
    beta_bound=DEFAULT_BETA_BOUND,
    p_bound=None,
):
    """Run the four scans on N and M at the given bounds; returns the reports."""
    return [
        lemma1_scan(p_bound or DEFAULT_LEMMA1_BOUND),
        theorem_scan(alpha_bound, beta_bound),
        fibration_scan(p_bound or DEFAULT_FIBRATION_BOUND),
        remark_scan(p_bound or DEFAULT_REMARK_BOUND),
    ]
