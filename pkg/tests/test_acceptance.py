"""
Acceptance criteria. Each criterion prints one PASS/FAIL line with its
measurements; time limits are pinned in LIMITS (seconds).

Run standalone with ``python tests/test_acceptance.py``.
"""
import time

from oracles import brute_hom_count, sym
from sslab.groups import fill_quotient, rational_longitude
from sslab.harness import (
    PHI0,
    T2,
    build_paper_objects,
    fibration_scan,
    lemma1_scan,
    n_filling_table,
    remark_scan,
    theorem_scan,
)
from sslab.slopes import coprime_pairs
from suites import distance_suite, elliptic_suite, free_product_suite, snf_suite, tietze_suite

LIMITS = {"lemma1": 10.0, "theorem": 30.0, "properties": 60.0}


def _timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def lemma1():
    r, dt = _timed(lemma1_scan, 50)
    ok = r.ok and len(r.cases) > 0 and dt < LIMITS["lemma1"]
    return ok, f"{len(r.cases)} slopes, {len(r.counterexamples)} counterexamples, {dt:.2f}s (limit {LIMITS['lemma1']:.0f}s)"


def longitudes():
    objs = build_paper_objects()
    results = [rational_longitude(objs.n_group, 0) == PHI0]
    alphas = list(coprime_pairs(range(2, 11), range(-10, 11)))
    for alpha in alphas:
        results.append(rational_longitude(fill_quotient(objs.m_group, T2, alpha), 0) == PHI0)
    bad = results.count(False)
    return bad == 0, f"boundary of N and T1 of M(-,alpha) for {len(alphas)} alphas, {bad} mismatches"


def theorem():
    r, dt = _timed(theorem_scan, 10, 10)
    fillings = [c for c in r.cases if c["kind"] == "theorem"]
    ok = r.ok and fillings and all(
        c["qhs"]
        and c["certificate"]["verdict"] == "LSpace"
        and c["certificate"]["rule"] == "NonOrientableBase"
        and c["h1"] == c["h1_group"]
        for c in fillings
    ) and dt < LIMITS["theorem"]
    return ok, (
        f"{len(fillings)} double fillings, {len(r.skipped)} longitudinal skipped, "
        f"{len(r.counterexamples)} counterexamples, {dt:.2f}s (limit {LIMITS['theorem']:.0f}s)"
    )


def n_table():
    r = n_filling_table(10)
    rules = {}
    bad = 0
    for c in r.cases:
        a, b = c["delta_phi0"], c["delta_phi1"]
        rule = c["disk_certificate"]["rule"]
        rules.setdefault(b >= 2, set()).add(rule)
        want_mobius = f"RP2({a})" if a > 1 else "RP2"
        want_disk = f"S2(2,2,{b})" if b > 1 else "S2(2,2)"
        if c["mobius_base"] != want_mobius or c["disk_base"] != want_disk:
            bad += 1
        # S2(2,2,b) with b >= 2 must certify Elliptic; at b = 1 the base is
        # S2(2,2), a lens space, which the dispatch certifies as LensSpace
        if (b >= 2 and rule != "Elliptic") or (b == 1 and rule != "LensSpace"):
            bad += 1
        if c["disk_certificate"]["verdict"] != "LSpace":
            bad += 1
    ok = r.ok and bad == 0 and rules.get(True) == {"Elliptic"}
    return ok, (
        f"{len(r.cases)} slopes, a,b <= 10; b>=2 rules {sorted(rules.get(True, []))}, "
        f"b=1 rules {sorted(rules.get(False, []))}; {bad} mismatches"
    )


def fibration():
    r = fibration_scan(20)
    words = ["aabb", "tabTBA", "ab", "ttab"]
    brute_m = brute_hom_count("abt", words, sym(3))
    brute_ref = brute_hom_count("xy", ["xyXY", "yy"], sym(3))
    p2 = [c for c in r.cases if c["input"]["p"] == 2]
    counts = {(c["hom_S3"], c["hom_S3_ZxZ2"]) for c in p2}
    ok = r.ok and counts == {(24, 12)} and (brute_m, brute_ref) == (24, 12)
    return ok, (
        f"{len(r.cases)} slopes with 2<=p<=20, {len(r.counterexamples)} counterexamples; "
        f"p=2 S3 counts {sorted(counts)} (brute force {brute_m} vs {brute_ref})"
    )


def remark():
    r = remark_scan(25)
    return r.ok, f"{len(r.cases)} slopes with 2<=p<=25, {len(r.counterexamples)} lens/torsion mismatches"


def properties():
    start = time.perf_counter()
    failures = {
        "snf": len(snf_suite(1000)),
        "distance": len(distance_suite(1000)),
        "tietze": len(tietze_suite(500)),
        "free_product": len(free_product_suite(12)),
        "elliptic": len(elliptic_suite(100)),
    }
    dt = time.perf_counter() - start
    ok = not any(failures.values()) and dt < LIMITS["properties"]
    detail = ", ".join(f"{k} {v}" for k, v in failures.items())
    return ok, f"failures: {detail}; {dt:.2f}s (limit {LIMITS['properties']:.0f}s)"


def generalized():
    parts = []
    ok = True
    for cones in ([2], [2, 3]):
        r = theorem_scan(6, 6, cones)
        ok = ok and r.ok and len(r.cases) > 0
        parts.append(f"cones {cones}: {len(r.cases)} cases, {len(r.counterexamples)} counterexamples")
    return ok, "; ".join(parts)


CRITERIA = [
    ("lemma1 scan", lemma1),
    ("longitude checks", longitudes),
    ("theorem scan", theorem),
    ("N-filling table", n_table),
    ("fibration obstruction", fibration),
    ("remark scan", remark),
    ("property suites", properties),
    ("generalized family", generalized),
]


def _line(name, fn):
    ok, detail = fn()
    return ok, f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"


def _check(acceptance_line, name, fn):
    ok, line = _line(name, fn)
    acceptance_line(line)
    assert ok, line


def test_lemma1_scan(acceptance_line):
    _check(acceptance_line, "lemma1 scan", lemma1)


def test_longitude_checks(acceptance_line):
    _check(acceptance_line, "longitude checks", longitudes)


def test_theorem_scan(acceptance_line):
    _check(acceptance_line, "theorem scan", theorem)


def test_n_filling_table(acceptance_line):
    _check(acceptance_line, "N-filling table", n_table)


def test_fibration_obstruction(acceptance_line):
    _check(acceptance_line, "fibration obstruction", fibration)


def test_remark_scan(acceptance_line):
    _check(acceptance_line, "remark scan", remark)


def test_property_suites(acceptance_line):
    _check(acceptance_line, "property suites", properties)


def test_generalized_family(acceptance_line):
    _check(acceptance_line, "generalized family", generalized)


if __name__ == "__main__":
    import sys

    results = [_line(name, fn) for name, fn in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
