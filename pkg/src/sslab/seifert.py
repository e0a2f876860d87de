"""
Seifert fibered manifolds as data, and the Dehn filling calculus on them.

Conventions. A Seifert manifold is described by its base orbifold, a list
of exceptional fiber pairs ``(a, b)`` and, when closed, an integer ``b0``.
With fiber ``h``, boundary curves ``c_i`` of the exceptional fiber
neighbourhoods and ``d_j`` of the boundary tori, the fundamental group is

    < base gens, c_i, d_j, h | c_i^a_i h^b_i,  c_i, d_j commute with h,
      base gens commute with h (orientable) or invert it (non-orientable),
      prod [x_k, y_k] * prod c_i * prod d_j = h^b0 >

(with ``prod v_k^2`` in place of the commutators for a non-orientable base).
The Euler number is ``b0 + sum b_i / a_i``. A bounded manifold has no
``b0``: each boundary torus carries a :class:`Framing`, the section curve
``d_j`` and the fiber ``h`` written in whatever basis the caller uses for
slopes on that torus.

Filling a boundary along ``alpha = p*section + q*fiber`` adds the pair
``(p, q)``; the new multiplicity is ``p = distance(alpha, fiber)``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd
from typing import Union

from .errors import BadBoundaryIndex, NotNormalized, ParseError, SSLabError
from .groups.presentation import AbelianGroup, Presentation, cokernel, fill_quotient
from .groups import words as W
from .slopes import Slope


@dataclass(frozen=True)
class BaseOrbifold:
    genus: int = 0
    orientable: bool = True
    boundary_count: int = 0
    cone_points: tuple = ()

    def __post_init__(self):
        if self.genus < 0 or self.boundary_count < 0:
            raise ValueError("genus and boundary count must be non-negative")
        if not self.orientable and self.genus < 1:
            raise ValueError("a non-orientable base needs at least one cross-cap")
        cones = tuple(sorted(int(a) for a in self.cone_points if int(a) != 1))
        if any(a < 1 for a in cones):
            raise ValueError(f"cone multiplicities must be positive: {self.cone_points}")
        object.__setattr__(self, "cone_points", cones)

    @property
    def surface_name(self):
        g, k = self.genus, self.boundary_count
        if self.orientable:
            closed = {0: "S2", 1: "T2"}.get(g, f"Sigma{g}")
            if g == 0 and k == 1:
                return "D2"
            if g == 0 and k == 2:
                return "A"
        else:
            closed = {1: "RP2", 2: "K"}.get(g, f"N{g}")
            if g == 1 and k == 1:
                return "Mobius"
        return closed if k == 0 else f"{closed}-{k}"

    def label(self):
        name = self.surface_name
        if self.cone_points:
            name += "(" + ",".join(map(str, self.cone_points)) + ")"
        return name

    def __str__(self):
        return self.label()

    def to_json(self):
        return {
            "genus": self.genus,
            "orientable": self.orientable,
            "boundaries": self.boundary_count,
            "cones": list(self.cone_points),
        }


@dataclass(frozen=True)
class Framing:
    """Oriented (section, fiber) basis of a boundary torus."""

    section: tuple = (1, 0)
    fiber: tuple = (0, 1)

    def __post_init__(self):
        s = tuple(int(x) for x in self.section)
        f = tuple(int(x) for x in self.fiber)
        object.__setattr__(self, "section", s)
        object.__setattr__(self, "fiber", f)
        if s[0] * f[1] - s[1] * f[0] not in (1, -1):
            raise ValueError(f"section {s} and fiber {f} do not form a basis")

    @property
    def det(self):
        s, f = self.section, self.fiber
        return s[0] * f[1] - s[1] * f[0]

    @property
    def fiber_slope(self) -> Slope:
        return Slope(*self.fiber)

    @property
    def section_slope(self) -> Slope:
        return Slope(*self.section)

    def coords(self, alpha: Slope):
        """(p, q) with alpha = p*section + q*fiber, sign fixed so p >= 0."""
        s, f = self.section, self.fiber
        d = self.det
        p = (alpha.p * f[1] - f[0] * alpha.q) * d
        q = (s[0] * alpha.q - alpha.p * s[1]) * d
        s = Slope(p, q)
        return s.p, s.q

    def slope(self, p, q) -> Slope:
        """The slope p*section + q*fiber in the caller's basis."""
        s, f = self.section, self.fiber
        return Slope(p * s[0] + q * f[0], p * s[1] + q * f[1])

    def twisted(self, k):
        """Replace the section d by d h^-k."""
        s, f = self.section, self.fiber
        return Framing((s[0] - k * f[0], s[1] - k * f[1]), f)

    def to_json(self):
        return {"section": list(self.section), "fiber": list(self.fiber)}


def _check_pairs(fibers, min_a):
    out = []
    for a, b in fibers:
        a, b = int(a), int(b)
        if a < 0:
            a, b = -a, -b
        if a < min_a:
            raise ValueError(f"fiber multiplicity {a} is below {min_a}")
        if gcd(a, b) != 1:
            raise ValueError(f"Seifert pair ({a}, {b}) is not coprime")
        out.append((a, b))
    return tuple(out)


@dataclass(frozen=True)
class SeifertBounded:
    base: BaseOrbifold
    fibers: tuple = ()
    framings: tuple = ()

    def __post_init__(self):
        fibers = _check_pairs(self.fibers, 2)
        if self.base.boundary_count < 1:
            raise ValueError("a bounded Seifert manifold needs a boundary")
        framings = tuple(
            f if isinstance(f, Framing) else Framing(*f) for f in self.framings
        )
        if not framings:
            framings = (Framing(),) * self.base.boundary_count
        if len(framings) != self.base.boundary_count:
            raise ValueError(
                f"{len(framings)} framings for {self.base.boundary_count} boundary tori"
            )
        object.__setattr__(self, "fibers", fibers)
        object.__setattr__(self, "framings", framings)
        object.__setattr__(
            self, "base", replace(self.base, cone_points=tuple(a for a, _ in fibers))
        )

    @property
    def boundary_count(self):
        return self.base.boundary_count

    def __str__(self):
        pairs = ", ".join(f"({a},{b})" for a, b in self.fibers)
        return f"SFS[{self.base.label()}; {pairs}]" if pairs else f"SFS[{self.base.label()}]"

    def to_json(self):
        return {
            "base": self.base.to_json(),
            "fibers": [list(p) for p in self.fibers],
            "framings": [f.to_json() for f in self.framings],
        }


@dataclass(frozen=True)
class SeifertClosed:
    base: BaseOrbifold
    b0: int = 0
    fibers: tuple = ()

    def __post_init__(self):
        if self.base.boundary_count != 0:
            raise ValueError("a closed Seifert manifold has no boundary")
        fibers = _check_pairs(self.fibers, 1)
        b0 = int(self.b0)
        kept = []
        for a, b in fibers:
            if a == 1:
                b0 += b
            else:
                kept.append((a, b))
        object.__setattr__(self, "b0", b0)
        object.__setattr__(self, "fibers", tuple(kept))
        object.__setattr__(
            self, "base", replace(self.base, cone_points=tuple(a for a, _ in kept))
        )

    @property
    def euler_number(self) -> Fraction:
        return self.b0 + sum((Fraction(b, a) for a, b in self.fibers), Fraction(0))

    @property
    def is_normalized(self):
        return all(0 < b < a for a, b in self.fibers)

    def __str__(self):
        pairs = "".join(f", ({a},{b})" for a, b in self.fibers)
        return f"SFS[{self.base.label()}; b0={self.b0}{pairs}]"

    def to_json(self):
        return {
            "base": self.base.to_json(),
            "b0": self.b0,
            "fibers": [list(p) for p in self.fibers],
        }


@dataclass(frozen=True)
class FiberFilling:
    """Filling along the fiber slope: the result leaves the Seifert world."""

    manifold: SeifertBounded
    boundary: int
    slope: Slope

    def to_json(self):
        return {
            "fiber_filling": True,
            "boundary": self.boundary,
            "slope": self.slope.to_json(),
            "manifold": self.manifold.to_json(),
        }

    def group(self) -> Presentation:
        """pi_1 of the filled manifold as a presentation."""
        p, q = self.manifold.framings[self.boundary].coords(self.slope)
        return fill_quotient(fundamental_group(self.manifold), self.boundary, Slope(p, q))


FillOutcome = Union[SeifertClosed, SeifertBounded, FiberFilling]


def fill(m: SeifertBounded, boundary: int, alpha: Slope) -> FillOutcome:
    """Dehn fill boundary torus ``boundary`` of ``m`` along ``alpha``.

    ``alpha`` is written in the same basis as that torus's framing.
    """
    if not 0 <= boundary < m.boundary_count:
        raise BadBoundaryIndex(f"boundary {boundary} out of range for {m.boundary_count} tori")
    p, q = m.framings[boundary].coords(alpha)
    if p == 0:
        return FiberFilling(m, boundary, alpha)
    rest = list(m.framings[:boundary] + m.framings[boundary + 1:])
    base = replace(m.base, boundary_count=m.boundary_count - 1)
    if not rest:
        return SeifertClosed(base, 0, m.fibers + ((p, q),))
    if p == 1:
        # d_i = h^-q, absorbed into the section of the next boundary
        rest[0] = rest[0].twisted(q)
        return SeifertBounded(base, m.fibers, tuple(rest))
    return SeifertBounded(base, m.fibers + ((p, q),), tuple(rest))


def normalize_invariants(m: SeifertClosed) -> SeifertClosed:
    b0 = m.b0
    fibers = []
    for a, b in m.fibers:
        k, r = divmod(b, a)
        b0 += k
        fibers.append((a, r))
    return SeifertClosed(m.base, b0, tuple(fibers))


def reverse_orientation(m: SeifertClosed) -> SeifertClosed:
    return normalize_invariants(
        SeifertClosed(m.base, -m.b0, tuple((a, -b) for a, b in m.fibers))
    )


# -- homology and fundamental group ------------------------------------------

def h1(m: Union[SeifertClosed, SeifertBounded]) -> AbelianGroup:
    """First homology from the abelianized Seifert relations."""
    base = m.base
    k = len(m.fibers)
    r = base.boundary_count
    nbase = 2 * base.genus if base.orientable else base.genus
    b0 = getattr(m, "b0", 0)
    # columns: h, c_1..c_k, base generators, d_1..d_r
    ncols = 1 + k + nbase + r
    rows = []
    for i, (a, b) in enumerate(m.fibers):
        row = [0] * ncols
        row[0] = b
        row[1 + i] = a
        rows.append(row)
    product = [0] * ncols
    product[0] = -b0
    for i in range(k):
        product[1 + i] = 1
    for j in range(r):
        product[1 + k + nbase + j] = 1
    if not base.orientable:
        for j in range(nbase):
            product[1 + k + j] = 2
            row = [0] * ncols
            row[0] = 2
            rows.append(row)
    rows.append(product)
    return cokernel(rows, ncols)


_LETTERS = "abcdefgijklmnopqrsuvwxyz"


def fundamental_group(m: Union[SeifertClosed, SeifertBounded]) -> Presentation:
    """The standard Seifert presentation, with peripheral pairs (d_j, h)
    in each boundary torus's framing coordinates."""
    base = m.base
    k = len(m.fibers)
    r = base.boundary_count
    nbase = 2 * base.genus if base.orientable else base.genus
    total = nbase + k + r
    if total > len(_LETTERS):
        raise SSLabError("too many generators for single-letter names")
    names = list(_LETTERS[:total]) + ["h"]
    h = (len(names),)
    basegens = [(i + 1,) for i in range(nbase)]
    cs = [(nbase + i + 1,) for i in range(k)]
    ds = [(nbase + k + j + 1,) for j in range(r)]
    rels = []
    for g in basegens:
        if base.orientable:
            rels.append(W.commutator(g, h))
        else:
            rels.append(W.multiply(g, h, W.inverse(g), h))
    for c, (a, b) in zip(cs, m.fibers):
        rels.append(W.commutator(c, h))
        rels.append(W.multiply(W.power(c, a), W.power(h, b)))
    for d in ds:
        rels.append(W.commutator(d, h))
    prod = []
    if base.orientable:
        for i in range(0, nbase, 2):
            prod.append(W.commutator(basegens[i], basegens[i + 1]))
    else:
        prod += [W.power(g, 2) for g in basegens]
    prod += cs + ds
    prod.append(W.power(h, -getattr(m, "b0", 0)))
    rels.append(W.multiply(*prod))
    pers = [(d, h) for d in ds]
    return Presentation(tuple(names), tuple(rels), tuple(pers))


# -- recognition ---------------------------------------------------------------

@dataclass(frozen=True)
class Recognition:
    kind: str  # "Lens", "Elliptic", "Reducible" or "Other"
    detail: dict = field(default_factory=dict, compare=False)

    @property
    def irreducible(self):
        return self.kind != "Reducible"

    def __str__(self):
        if self.kind == "Lens":
            return f"Lens L({self.detail['p']},{self.detail['q']})"
        if self.kind == "Reducible":
            return f"Reducible {self.detail['name']}"
        return self.kind

    def to_json(self):
        return {"kind": self.kind, "irreducible": self.irreducible, **self.detail}


def _ext_gcd(a, b):
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def lens_parameters(m: SeifertClosed):
    """(p, q) of the lens space with this data over S^2 (at most two cones).

    p = 0 means S^2 x S^1, p = 1 means S^3 (q = 0).
    """
    base = m.base
    if not (base.orientable and base.genus == 0 and len(m.fibers) <= 2):
        raise ValueError("lens parameters need an S^2 base with at most two cone points")
    fibs = list(m.fibers) + [(1, 0)] * (2 - len(m.fibers))
    (a1, b1), (a2, b2) = fibs
    b2 += m.b0 * a2
    P = a1 * b2 + a2 * b1
    # meridians (a1, b1) and (-a2, b2) in the (c_1, h) basis; l1 is dual to the first
    _, s, u = _ext_gcd(a1, b1)
    y, x = s, -u
    Q = -a2 * y - b2 * x
    p = abs(P)
    if p == 0:
        return 0, 1
    if p == 1:
        return 1, 0
    q = (Q if P > 0 else -Q) % p
    return p, q


def recognize(m: SeifertClosed) -> Recognition:
    if not m.is_normalized:
        raise NotNormalized("recognize needs 0 < b_i < a_i; call normalize_invariants")
    base = m.base
    cones = base.cone_points
    if base.orientable and base.genus == 0:
        if len(cones) <= 2:
            p, q = lens_parameters(m)
            if p == 0:
                return Recognition("Reducible", {"name": "S2xS1"})
            return Recognition("Lens", {"p": p, "q": q})
        if len(cones) == 3 and sum(Fraction(1, a) for a in cones) > 1:
            return Recognition("Elliptic", {"cones": list(cones)})
        return Recognition("Other")
    if not base.orientable and base.genus == 1:
        if not cones and m.b0 == 0:
            return Recognition("Reducible", {"name": "RP3#RP3"})
        if len(cones) <= 1 and h1(m).is_finite:
            return Recognition("Elliptic", {"cones": list(cones)})
    return Recognition("Other")


def lens_space_datum(p: int, q: int) -> SeifertClosed:
    """Seifert data over S^2 for L(p, q)."""
    s2 = BaseOrbifold(0, True, 0)
    if p == 0:
        return SeifertClosed(s2, 0)
    q %= p
    if p == 1:
        return SeifertClosed(s2, 1)
    if gcd(p, q) != 1:
        raise ValueError(f"L({p},{q}) needs gcd(p, q) = 1")
    return normalize_invariants(SeifertClosed(s2, 0, ((q, p),)))


# -- JSON ----------------------------------------------------------------------

def from_json(data) -> FillOutcome:
    if isinstance(data, str):
        data = json.loads(data)
    if isinstance(data, dict) and data.get("fiber_filling"):
        m = from_json(data.get("manifold"))
        if not isinstance(m, SeifertBounded):
            raise ParseError("a fiber filling record needs a bounded manifold")
        try:
            return FiberFilling(m, int(data["boundary"]), Slope.from_json(data["slope"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed fiber filling record: {exc}") from None
    try:
        b = data["base"]
        base = BaseOrbifold(
            int(b.get("genus", 0)),
            bool(b.get("orientable", True)),
            int(b.get("boundaries", 0)),
        )
        cones = [int(a) for a in b.get("cones", [])]
        if "fibers" in data:
            fibers = tuple(tuple(int(x) for x in p) for p in data["fibers"])
            given = sorted(a for a, _ in fibers if abs(a) != 1)
            if cones and sorted(c for c in cones if c != 1) != sorted(abs(a) for a in given):
                raise ParseError(f"cones {cones} disagree with fibers {list(fibers)}")
        else:
            fibers = tuple((a, 1) for a in cones)
        if base.boundary_count == 0:
            return SeifertClosed(base, int(data.get("b0", 0)), fibers)
        framings = tuple(
            Framing(tuple(f["section"]), tuple(f["fiber"])) for f in data.get("framings", [])
        )
        return SeifertBounded(base, fibers, framings)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed Seifert data: {exc}") from None
