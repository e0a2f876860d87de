"""
Slopes on a torus: primitive classes of H_1(T^2; Z) up to sign.

A slope is stored in normal form: ``p > 0``, or ``(p, q) == (0, 1)``.
Coordinates always refer to some ordered basis of H_1 that the caller
declares; nothing here knows which basis that is.

>>> normalize(-1, 3)
Slope(p=1, q=-3)
>>> distance(Slope(1, 0), Slope(0, 1))
1
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import NonPrimitive, NotUnimodular, ParseError, ZeroSlope


@dataclass(frozen=True, order=True)
class Slope:
    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if p == 0 and q == 0:
            raise ZeroSlope("(0, 0) is not a slope")
        if gcd(p, q) != 1:
            raise NonPrimitive(f"({p}, {q}) is not primitive")
        if p < 0 or (p == 0 and q < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __iter__(self):
        yield self.p
        yield self.q

    def __str__(self):
        return f"{self.p}/{self.q}"

    def to_json(self):
        return [self.p, self.q]

    @classmethod
    def from_json(cls, data):
        p, q = data
        return cls(p, q)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Parse ``"p/q"`` (or ``"p,q"``) into a slope."""
        for sep in "/,":
            if sep in text:
                a, b = text.split(sep, 1)
                break
        else:
            raise ParseError(f"expected p/q, got {text!r}")
        try:
            return cls(int(a), int(b))
        except ValueError as exc:
            if isinstance(exc, (ZeroSlope, NonPrimitive)):
                raise
            raise ParseError(f"expected integers in {text!r}") from None

    def as_fraction(self):
        """p/q as a Fraction, or None for the slope 1/0."""
        if self.q == 0:
            return None
        return Fraction(self.p, self.q)


def normalize(p: int, q: int) -> Slope:
    return Slope(p, q)


def distance(a: Slope, b: Slope) -> int:
    """Geometric intersection number |p q' - p' q| of two slopes."""
    return abs(a.p * b.q - b.p * a.q)


@dataclass(frozen=True)
class BasisChange:
    """A 2x2 integer matrix ``[[a, b], [c, d]]`` with determinant +-1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise NotUnimodular(f"determinant {self.det} is not +-1")

    @classmethod
    def from_rows(cls, rows):
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    def apply(self, x: int, y: int):
        return self.a * x + self.b * y, self.c * x + self.d * y

    def inverse(self) -> "BasisChange":
        s = self.det
        return BasisChange(s * self.d, -s * self.b, -s * self.c, s * self.a)


IDENTITY = BasisChange(1, 0, 0, 1)


def change_basis(s: Slope, m) -> Slope:
    """Apply the unimodular matrix ``m`` to the coordinates of ``s``."""
    if not isinstance(m, BasisChange):
        m = BasisChange.from_rows(m)
    return Slope(*m.apply(s.p, s.q))


def coprime_pairs(p_range, q_range):
    """Yield the distinct normalized slopes with p in p_range and q in q_range."""
    seen = set()
    for p in p_range:
        for q in q_range:
            if (p, q) == (0, 0) or gcd(p, q) != 1:
                continue
            s = Slope(p, q)
            if s not in seen:
                seen.add(s)
                yield s
