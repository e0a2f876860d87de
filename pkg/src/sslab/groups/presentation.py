"""
Finitely presented groups with peripheral (boundary torus) data.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

from ..errors import BadBoundaryIndex, NoTorsionSlope, NotUnique, ParseError
from ..slopes import Slope
from . import words as W
from .snf import smith_normal_form


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank + Z/d_1 + ... + Z/d_k with d_i | d_{i+1}."""

    free_rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        tors = tuple(int(d) for d in self.torsion if abs(int(d)) != 1)
        if any(d < 2 for d in tors):
            raise ValueError(f"torsion coefficients must be >= 2: {self.torsion}")
        for a, b in zip(tors, tors[1:]):
            if b % a:
                raise ValueError(f"divisibility chain fails: {tors}")
        object.__setattr__(self, "torsion", tors)
        if self.free_rank < 0:
            raise ValueError("negative free rank")

    @property
    def is_finite(self):
        return self.free_rank == 0

    @property
    def order(self):
        """Order of the group, or None if infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    @property
    def torsion_order(self):
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data):
        return cls(data["free_rank"], tuple(data["torsion"]))


def cokernel(rows, ncols) -> AbelianGroup:
    """Z^ncols modulo the row span of ``rows``."""
    if not rows or ncols == 0:
        return AbelianGroup(ncols, ())
    snf = smith_normal_form(rows)
    diag = snf.diagonal
    rank = sum(1 for d in diag if d)
    return AbelianGroup(ncols - rank, tuple(d for d in diag if d > 1))


@dataclass(frozen=True)
class PeripheralPair:
    """Two commuting words framing a boundary torus.

    A slope (p, q) on this torus means the class ``mu^p lambda^q``.
    """

    mu: tuple
    lam: tuple


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple = ()
    peripherals: tuple = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator names")
        n = len(gens)
        rels = []
        for r in self.relators:
            r = W.cyclic_reduce(r)
            if any(abs(x) > n or x == 0 for x in r):
                raise ValueError(f"relator uses unknown generator: {r}")
            if r:
                rels.append(r)
        pers = []
        for pp in self.peripherals:
            if not isinstance(pp, PeripheralPair):
                pp = PeripheralPair(*pp)
            pers.append(PeripheralPair(W.reduce(pp.mu), W.reduce(pp.lam)))
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))
        object.__setattr__(self, "peripherals", tuple(pers))

    @property
    def ngens(self):
        return len(self.generators)

    def word(self, text):
        return W.parse_word(text, self.generators)

    def format(self, word):
        return W.format_word(word, self.generators)

    @classmethod
    def parse(cls, generators, relators, peripherals=()):
        """Build from text words, e.g. ``Presentation.parse("ab", ["aabb"])``."""
        gens = tuple(generators)
        rels = [W.parse_word(r, gens) for r in relators]
        pers = [
            PeripheralPair(W.parse_word(m, gens), W.parse_word(l, gens))
            for m, l in peripherals
        ]
        return cls(gens, tuple(rels), tuple(pers))

    def relation_matrix(self):
        return [W.exponent_sums(r, self.ngens) for r in self.relators]

    def with_relators(self, extra):
        return Presentation(self.generators, self.relators + tuple(extra), self.peripherals)

    def to_json(self):
        return {
            "generators": list(self.generators),
            "relators": [self.format(r) for r in self.relators],
            "peripherals": [
                {"mu": self.format(pp.mu), "lambda": self.format(pp.lam)}
                for pp in self.peripherals
            ],
        }

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        try:
            gens = data["generators"]
            return cls.parse(
                gens,
                data.get("relators", []),
                [(p["mu"], p["lambda"]) for p in data.get("peripherals", [])],
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed presentation: {exc}") from None

    def __str__(self):
        rels = ", ".join(self.format(r) for r in self.relators)
        return f"< {', '.join(self.generators)} | {rels} >"


def abelianization(P: Presentation) -> AbelianGroup:
    return cokernel(P.relation_matrix(), P.ngens)


class H1Map:
    """The quotient map Z^ngens -> H_1(P), in Smith coordinates.

    ``free_part(v)`` gives the image of an exponent vector in the free
    quotient H_1 / torsion, as a list of ``free_rank`` integers.
    """

    def __init__(self, P: Presentation):
        n = P.ngens
        rows = P.relation_matrix()
        if rows:
            snf = smith_normal_form(rows)
            diag = snf.diagonal
            self.V = snf.V
        else:
            diag = []
            self.V = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        self.ngens = n
        self.diag = list(diag) + [0] * (n - len(diag))
        self.free_coords = [i for i, d in enumerate(self.diag) if d == 0]
        self.torsion_coords = [(i, d) for i, d in enumerate(self.diag) if d > 1]
        self.group = AbelianGroup(
            len(self.free_coords), tuple(d for _, d in self.torsion_coords)
        )

    def coords(self, vec):
        return [sum(vec[k] * self.V[k][j] for k in range(self.ngens)) for j in range(self.ngens)]

    def free_part(self, vec):
        c = self.coords(vec)
        return [c[i] for i in self.free_coords]

    def of_word(self, word):
        return self.free_part(W.exponent_sums(word, self.ngens))

    def torsion_part(self, vec):
        c = self.coords(vec)
        return [c[i] % d for i, d in self.torsion_coords]

    def is_zero(self, vec):
        c = self.coords(vec)
        return all(c[i] == 0 for i in self.free_coords) and all(
            c[i] % d == 0 for i, d in self.torsion_coords
        )


def _boundary(P, boundary):
    if not 0 <= boundary < len(P.peripherals):
        raise BadBoundaryIndex(
            f"boundary {boundary} out of range for {len(P.peripherals)} peripheral pairs"
        )
    return P.peripherals[boundary]


def fill_quotient(P: Presentation, boundary: int, alpha: Slope) -> Presentation:
    """Kill the class mu^p lambda^q of the given boundary torus."""
    pp = _boundary(P, boundary)
    rel = W.multiply(W.power(pp.mu, alpha.p), W.power(pp.lam, alpha.q))
    pers = P.peripherals[:boundary] + P.peripherals[boundary + 1:]
    return Presentation(P.generators, P.relators + (rel,), pers)


def peripheral_commutes_in_h1(P: Presentation, boundary: int) -> bool:
    pp = _boundary(P, boundary)
    h = H1Map(P)
    return h.is_zero(W.exponent_sums(W.commutator(pp.mu, pp.lam), P.ngens))


def rational_longitude(P: Presentation, boundary: int) -> Slope:
    """The slope on ``boundary`` whose class in H_1(P) is torsion."""
    pp = _boundary(P, boundary)
    h = H1Map(P)
    u = h.of_word(pp.mu)
    v = h.of_word(pp.lam)
    if not any(u) and not any(v):
        raise NotUnique("both peripheral classes are torsion; every slope is")
    # find primitive (p, q) with p u + q v = 0 over Q
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            if u[i] * v[j] - u[j] * v[i]:
                raise NoTorsionSlope("peripheral classes are independent in H_1 / torsion")
    # u and v are parallel; pick a nonzero coordinate
    k = next(i for i in range(len(u)) if u[i] or v[i])
    p, q = v[k], -u[k]
    g = gcd(p, q)
    return Slope(p // g, q // g)
