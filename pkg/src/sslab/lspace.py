"""
L-space certificates for closed Seifert fibered rational homology spheres.

Rules, tried in order:

* ``NonOrientableBase`` -- every Seifert rational homology sphere over a
  non-orientable base is an L-space.
* ``LensSpace`` -- base S^2 with at most two cone points.
* ``Elliptic`` -- base S^2(a, b, c) with 1/a + 1/b + 1/c > 1; finite
  fundamental group.
* ``SphereBaseCriterion`` -- otherwise (base S^2): an L-space exactly when
  there is no transverse foliation, decided from the normalized data
  ``M(e0; r_1, ..., r_k)`` with ``1 > r_1 >= ... >= r_k > 0``:

  - ``2 - k <= e0 <= -2``: a foliation exists;
  - ``e0 = -1``: a foliation exists iff ``(r_1, ..., r_k)`` is realizable;
  - ``e0 = 1 - k``: iff ``(1 - r_1, ..., 1 - r_k)`` is realizable;
  - any other ``e0``: no foliation.

  ``(r_i)`` is realizable when coprime ``0 < a < m`` exist with
  ``r_1 < a/m``, ``r_2 < (m - a)/m`` and ``r_i < 1/m`` for ``i >= 3``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd, prod

from .errors import BudgetExceeded, NotQHS
from .seifert import SeifertClosed, h1, normalize_invariants

DEFAULT_BUDGET = 10**7


class Verdict(str, Enum):
    LSPACE = "LSpace"
    NOT_LSPACE = "NotLSpace"
    UNDETERMINED = "Undetermined"


class Rule(str, Enum):
    NON_ORIENTABLE_BASE = "NonOrientableBase"
    LENS_SPACE = "LensSpace"
    ELLIPTIC = "Elliptic"
    SPHERE_BASE_CRITERION = "SphereBaseCriterion"


@dataclass(frozen=True)
class LSpaceCertificate:
    verdict: Verdict
    rule: Rule
    witness: dict = field(default_factory=dict)

    @property
    def is_lspace(self):
        return self.verdict is Verdict.LSPACE

    def validate(self, m: SeifertClosed = None) -> bool:
        """Re-check the witness against its rule (and against ``m`` if given)."""
        w = self.witness
        cones = list(w.get("cones", []))
        if m is not None and sorted(m.base.cone_points) != sorted(cones):
            return False
        if self.rule is Rule.NON_ORIENTABLE_BASE:
            if w.get("orientable") is not False:
                return False
            if m is not None and m.base.orientable:
                return False
            return self.verdict is Verdict.LSPACE
        if self.rule is Rule.LENS_SPACE:
            return len(cones) <= 2 and self.verdict is Verdict.LSPACE
        if self.rule is Rule.ELLIPTIC:
            return (
                len(cones) == 3
                and sum(Fraction(1, a) for a in cones) > 1
                and self.verdict is Verdict.LSPACE
            )
        if self.rule is Rule.SPHERE_BASE_CRITERION:
            r = [Fraction(x) for x in w["r"]]
            found = _foliation_from(int(w["e0"]), r)
            if found != w["foliation"]:
                return False
            if w["foliation"] and w.get("realizer"):
                a, mm = w["realizer"]
                rr = r if w["e0"] == -1 else [1 - x for x in r]
                if not _realizes(sorted(rr, reverse=True), a, mm):
                    return False
            expected = Verdict.NOT_LSPACE if found else Verdict.LSPACE
            return self.verdict is expected
        return False

    def to_json(self):
        return {"verdict": self.verdict.value, "rule": self.rule.value, "witness": self.witness}

    def __str__(self):
        return f"{self.verdict.value} via {self.rule.value}"


def is_qhs(m: SeifertClosed) -> bool:
    return h1(m).free_rank == 0


def _realizes(r_sorted, a, m):
    if not (0 < a < m and gcd(a, m) == 1):
        return False
    if r_sorted[0] >= Fraction(a, m) or r_sorted[1] >= Fraction(m - a, m):
        return False
    return all(x < Fraction(1, m) for x in r_sorted[2:])


def find_realizer(r, budget=DEFAULT_BUDGET):
    """Coprime (a, m) realizing ``r``, or None. See the module docstring."""
    r = sorted((Fraction(x) for x in r), reverse=True)
    if len(r) < 3:
        return None
    if any(not (0 < x < 1) for x in r):
        raise ValueError(f"entries must lie in (0, 1): {r}")
    # r_k < 1/m forces m < 1/r_k; the product of denominators is a coarser cap
    bound = prod(x.denominator for x in r)
    top = min(bound, -(-r[-1].denominator // r[-1].numerator))
    if top > budget:
        raise BudgetExceeded(top, budget)
    for m in range(2, top + 1):
        if not r[-1] < Fraction(1, m):
            break
        lo = int(r[0] * m) + 1
        for a in range(lo, m):
            if Fraction(m - a, m) <= r[1]:
                break
            if gcd(a, m) == 1:
                return a, m
    return None


def foliation_realizable(r, budget=DEFAULT_BUDGET) -> bool:
    """Whether the rationals ``r`` (three or more, in (0, 1)) are realizable."""
    return find_realizer(r, budget) is not None


def _foliation_from(e0, r, budget=DEFAULT_BUDGET):
    k = len(r)
    if k < 3:
        return False
    if 2 - k <= e0 <= -2:
        return True
    if e0 == -1:
        return foliation_realizable(r, budget)
    if e0 == 1 - k:
        return foliation_realizable([1 - x for x in r], budget)
    return False


def sphere_base_criterion(m: SeifertClosed, budget=DEFAULT_BUDGET) -> LSpaceCertificate:
    m = normalize_invariants(m)
    r = sorted((Fraction(b, a) for a, b in m.fibers), reverse=True)
    e0 = m.b0
    k = len(r)
    realizer = None
    if k >= 3 and e0 == -1:
        realizer = find_realizer(r, budget)
    elif k >= 3 and e0 == 1 - k:
        realizer = find_realizer([1 - x for x in r], budget)
    foliation = _foliation_from(e0, r, budget)
    witness = {
        "cones": list(m.base.cone_points),
        "e0": e0,
        "r": [str(x) for x in r],
        "foliation": foliation,
        "realizer": list(realizer) if realizer else None,
    }
    verdict = Verdict.NOT_LSPACE if foliation else Verdict.LSPACE
    return LSpaceCertificate(verdict, Rule.SPHERE_BASE_CRITERION, witness)


def certify(m: SeifertClosed, use_recognition=True, budget=DEFAULT_BUDGET) -> LSpaceCertificate:
    if not is_qhs(m):
        raise NotQHS(f"{m} has infinite first homology")
    m = normalize_invariants(m)
    base = m.base
    cones = list(base.cone_points)
    if not base.orientable:
        return LSpaceCertificate(
            Verdict.LSPACE,
            Rule.NON_ORIENTABLE_BASE,
            {"base": base.label(), "orientable": False, "genus": base.genus, "cones": cones},
        )
    # an orientable base of positive genus has b_1 > 0, so only S^2 remains
    if use_recognition:
        if len(cones) <= 2:
            return LSpaceCertificate(
                Verdict.LSPACE, Rule.LENS_SPACE, {"base": base.label(), "cones": cones}
            )
        if len(cones) == 3 and sum(Fraction(1, a) for a in cones) > 1:
            return LSpaceCertificate(
                Verdict.LSPACE, Rule.ELLIPTIC, {"base": base.label(), "cones": cones}
            )
    return sphere_base_criterion(m, budget)
