"""
Rational tangles, two-bridge links and their double branched covers.

Filling slope ``(p, q)`` on the knot torus corresponds to the rational
tangle of fraction ``p/q``; its numerator closure is the two-bridge link
``b(p, q)`` whose double branched cover is the lens space ``L(p, q)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .slopes import Slope


def continued_fraction(p: int, q: int):
    """Regular expansion of p/q: a_0 any integer, later terms >= 1.

    The tangle 1/0 has the empty expansion.
    """
    if q == 0:
        return ()
    if q < 0:
        p, q = -p, -q
    out = []
    while q:
        a, r = divmod(p, q)
        out.append(a)
        p, q = q, r
    return tuple(out)


def evaluate(terms):
    """Inverse of :func:`continued_fraction`, returning (p, q)."""
    if not terms:
        return 1, 0
    p, q = terms[-1], 1
    for a in reversed(terms[:-1]):
        p, q = a * p + q, p
    if q < 0:
        p, q = -p, -q
    return p, q


@dataclass(frozen=True)
class RationalTangle:
    """Rational tangle of fraction p/q (q >= 0; 1/0 is the infinity tangle)."""

    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if (p, q) == (0, 0) or gcd(p, q) != 1:
            raise ValueError(f"{p}/{q} is not a reduced fraction")
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def continued_fraction(self):
        return continued_fraction(self.p, self.q)

    @property
    def fraction(self):
        return None if self.q == 0 else Fraction(self.p, self.q)

    def __str__(self):
        cf = self.continued_fraction
        body = "[" + ", ".join(map(str, cf)) + "]" if cf else "[inf]"
        return f"{self.p}/{self.q} = {body}"


@dataclass(frozen=True)
class TwoBridgeLink:
    """b(p, q) with 0 < q < p; b(1, 0) is the unknot, b(0, 1) the 2-component unlink."""

    p: int
    q: int

    def __post_init__(self):
        p, q = abs(int(self.p)), int(self.q)
        if p == 0:
            q = 1
        elif p == 1:
            q = 0
        else:
            q %= p
            if gcd(p, q) != 1:
                raise ValueError(f"b({p},{q}) needs gcd(p, q) = 1")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def components(self):
        return 2 if self.p % 2 == 0 else 1

    @property
    def name(self):
        if self.p == 0:
            return "unlink"
        if self.p == 1:
            return "unknot"
        return f"b({self.p},{self.q})"

    def __str__(self):
        return self.name


@dataclass(frozen=True, eq=False)
class LensSpace:
    """L(p, q) up to homeomorphism: L(p, q) = L(p, q') iff q' = +-q^(+-1) mod p.

    L(1, 0) is S^3 and L(0, 1) stands for S^2 x S^1.
    """

    p: int
    q: int

    def __post_init__(self):
        p, q = abs(int(self.p)), int(self.q)
        if p == 0:
            q = 1
        elif p == 1:
            q = 0
        else:
            q %= p
            if gcd(p, q) != 1:
                raise ValueError(f"L({p},{q}) needs gcd(p, q) = 1")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def canonical_q(self):
        if self.p < 2:
            return self.q
        p, q = self.p, self.q
        inv = pow(q, -1, p)
        return min(q, (-q) % p, inv, (-inv) % p)

    def __eq__(self, other):
        if not isinstance(other, LensSpace):
            return NotImplemented
        return lens_homeo_equal(self, other)

    def __hash__(self):
        return hash((self.p, self.canonical_q))

    @property
    def name(self):
        if self.p == 0:
            return "S2xS1"
        if self.p == 1:
            return "S3"
        return f"L({self.p},{self.q})"

    def __str__(self):
        return self.name

    def __repr__(self):
        return f"LensSpace(p={self.p}, q={self.q})"


def tangle_from_slope(alpha: Slope) -> RationalTangle:
    return RationalTangle(alpha.p, alpha.q)


def two_bridge(t: RationalTangle) -> TwoBridgeLink:
    """Numerator closure of the tangle."""
    if t.p == 0:
        return TwoBridgeLink(0, 1)
    p, q = t.p, t.q
    if p < 0:
        p, q = -p, -q
    return TwoBridgeLink(p, q)


def double_branched_cover(link: TwoBridgeLink) -> LensSpace:
    return LensSpace(link.p, link.q)


def lens_homeo_equal(a: LensSpace, b: LensSpace) -> bool:
    if a.p != b.p:
        return False
    if a.p < 2:
        return True
    p = a.p
    inv = pow(a.q, -1, p)
    return b.q % p in {a.q % p, (-a.q) % p, inv, (-inv) % p}
