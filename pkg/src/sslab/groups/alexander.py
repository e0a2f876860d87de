"""
Single-variable Alexander polynomials by Fox calculus.

The augmentation sends each generator to ``t^k`` where ``k`` is its image
under H_1(P) -> H_1(P)/torsion = Z, so the presentation must have first
Betti number one. The polynomial is the gcd of all
(ngens - 1)-minors of the augmented Fox Jacobian, content included.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import sympy

from ..errors import RankNotOne
from .presentation import H1Map, Presentation

_t = sympy.Symbol("t")


@dataclass(frozen=True)
class LaurentPolynomial:
    """Integer Laurent polynomial ``sum coeffs[i] t^(shift + i)``.

    ``normalized()`` divides out the unit +-t^k: lowest exponent 0 and a
    positive constant term.
    """

    coeffs: tuple
    shift: int = 0

    def __post_init__(self):
        c = list(self.coeffs)
        shift = self.shift
        while c and c[-1] == 0:
            c.pop()
        while c and c[0] == 0:
            c.pop(0)
            shift += 1
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))
        object.__setattr__(self, "shift", shift if c else 0)

    def normalized(self):
        c = self.coeffs
        if c and c[0] < 0:
            c = tuple(-x for x in c)
        return LaurentPolynomial(c, 0)

    @property
    def is_zero(self):
        return not self.coeffs

    def __call__(self, x):
        return sum(c * x ** (self.shift + i) for i, c in enumerate(self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            k = self.shift + i
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self):
        return {"coefficients": list(self.coeffs), "lowest_exponent": self.shift}


def fox_derivative(word, j, weights):
    """Augmented Fox derivative d(word)/d(x_j) as {exponent: coefficient}.

    ``weights[i]`` is the exponent of t that generator i maps to.
    """
    out = {}
    prefix = 0
    for x in word:
        g = abs(x) - 1
        if x > 0:
            if g == j:
                out[prefix] = out.get(prefix, 0) + 1
            prefix += weights[g]
        else:
            prefix -= weights[g]
            if g == j:
                out[prefix] = out.get(prefix, 0) - 1
    return {k: v for k, v in out.items() if v}


def augmentation_weights(P: Presentation):
    h = H1Map(P)
    if h.group.free_rank != 1:
        raise RankNotOne(f"H_1 has free rank {h.group.free_rank}, need 1")
    weights = []
    for i in range(P.ngens):
        vec = [int(i == k) for k in range(P.ngens)]
        weights.append(h.free_part(vec)[0])
    return weights


def fox_matrix(P: Presentation):
    """Augmented Fox Jacobian as a list of rows of {exponent: coefficient}."""
    weights = augmentation_weights(P)
    return [[fox_derivative(r, j, weights) for j in range(P.ngens)] for r in P.relators]


def _to_sympy(entry):
    return sum((c * _t**k for k, c in entry.items()), sympy.Integer(0))


def alexander_polynomial(P: Presentation) -> LaurentPolynomial:
    n = P.ngens
    J = fox_matrix(P)
    k = n - 1
    if k == 0:
        return LaurentPolynomial((1,))
    rows = [[_to_sympy(e) for e in row] for row in J if any(row)]
    g = sympy.Integer(0)
    for rsel in combinations(range(len(rows)), k):
        for csel in combinations(range(n), k):
            M = sympy.Matrix([[rows[r][c] for c in csel] for r in rsel])
            d = _polynomial_part(M.det(method="berkowitz"))
            if d != 0:
                g = sympy.gcd(g, d) if g != 0 else d
                if g.is_number and abs(g) == 1:
                    return LaurentPolynomial((1,))
    if g == 0:
        return LaurentPolynomial(())
    poly = sympy.Poly(g, _t)
    coeffs = list(reversed(poly.all_coeffs()))
    return LaurentPolynomial(tuple(int(c) for c in coeffs)).normalized()


def _polynomial_part(expr):
    """Multiply a Laurent polynomial by the power of t making it a polynomial."""
    num, _ = sympy.fraction(sympy.together(sympy.expand(expr)))
    return sympy.expand(num)
