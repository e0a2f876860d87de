"""
Counting homomorphisms from a finitely presented group into a finite group.

The count is exhaustive: generator images are enumerated in lexicographic
order and every relator is checked as soon as all the generators it
mentions have been assigned.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from ..errors import TooLarge

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its multiplication table on ``range(n)``."""

    table: tuple
    name: str = ""

    def __post_init__(self):
        table = tuple(tuple(row) for row in self.table)
        n = len(table)
        if any(len(row) != n for row in table):
            raise ValueError("multiplication table must be square")
        object.__setattr__(self, "table", table)

    @property
    def order(self):
        return len(self.table)

    @property
    def identity(self):
        n = self.order
        for e in range(n):
            if all(self.table[e][g] == g for g in range(n)):
                return e
        raise ValueError("table has no identity")

    def inverses(self):
        e = self.identity
        n = self.order
        inv = [None] * n
        for g in range(n):
            for h in range(n):
                if self.table[g][h] == e:
                    inv[g] = h
                    break
        return inv

    def power(self, g, k):
        e = self.identity
        if k < 0:
            g, k = self.inverses()[g], -k
        out = e
        for _ in range(k):
            out = self.table[out][g]
        return out

    @property
    def is_abelian(self):
        t = self.table
        n = self.order
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(n))

    @classmethod
    def from_elements(cls, elements, mul, name=""):
        elements = list(elements)
        index = {x: i for i, x in enumerate(elements)}
        table = [[index[mul(x, y)] for y in elements] for x in elements]
        return cls(tuple(map(tuple, table)), name)

    @classmethod
    def cyclic(cls, n):
        return cls.from_elements(range(n), lambda x, y: (x + y) % n, f"Z/{n}")

    @classmethod
    def symmetric(cls, n):
        perms = sorted(permutations(range(n)))
        return cls.from_elements(
            perms, lambda x, y: tuple(x[y[i]] for i in range(n)), f"S{n}"
        )

    @classmethod
    def dihedral(cls, n):
        """Symmetries of the regular n-gon, order 2n."""
        elems = [(r, s) for s in (0, 1) for r in range(n)]

        def mul(x, y):
            r1, s1 = x
            r2, s2 = y
            return ((r1 + (-r2 if s1 else r2)) % n, s1 ^ s2)

        return cls.from_elements(elems, mul, f"D{n}")

    @classmethod
    def direct_product(cls, G, H):
        elems = list(product(range(G.order), range(H.order)))
        return cls.from_elements(
            elems,
            lambda x, y: (G.table[x[0]][y[0]], H.table[x[1]][y[1]]),
            f"{G.name}x{H.name}",
        )

    @classmethod
    def by_name(cls, name):
        """``S3``, ``D4``, ``Z/5`` (or ``Z5``), ``Q8``, ``A4``, ``1``."""
        name = name.strip()
        if name in ("1", "trivial"):
            return cls.cyclic(1)
        if name.upper().startswith("Z"):
            return cls.cyclic(int(name[1:].lstrip("/")))
        if name.upper().startswith("S"):
            return cls.symmetric(int(name[1:]))
        if name.upper().startswith("D"):
            return cls.dihedral(int(name[1:]))
        if name.upper() == "A4":
            even = [p for p in sorted(permutations(range(4))) if _parity(p) == 0]
            return cls.from_elements(
                even, lambda x, y: tuple(x[y[i]] for i in range(4)), "A4"
            )
        if name.upper() == "Q8":
            return cls.from_elements(_Q8, _q8_mul, "Q8")
        raise ValueError(f"unknown group name {name!r}")


def _parity(p):
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2


# quaternions as (sign, unit) with unit in 1, i, j, k
_Q8 = [(s, u) for s in (1, -1) for u in "1ijk"]
_QMUL = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def _q8_mul(x, y):
    s, u = _QMUL[(x[1], y[1])]
    return (x[0] * y[0] * s, u)


def _as_group(G):
    if isinstance(G, FiniteGroup):
        return G
    return FiniteGroup(G)


def hom_count(P, G, budget=DEFAULT_BUDGET) -> int:
    """Number of homomorphisms from the presented group ``P`` into ``G``."""
    G = _as_group(G)
    n = P.ngens
    order = G.order
    relators = P.relators
    cost = order**n * max(len(relators), 1)
    if cost > budget:
        raise TooLarge(cost, budget)
    table = G.table
    e = G.identity
    inv = G.inverses()

    # relator r becomes checkable once generator max(|x|) has an image
    due = [[] for _ in range(n)]
    for r in relators:
        due[max(abs(x) for x in r) - 1].append(r)
    if n == 0:
        return 1

    images = [0] * n

    def holds(r):
        g = e
        for x in r:
            g = table[g][images[x - 1] if x > 0 else inv[images[-x - 1]]]
        return g == e

    def count(k):
        if k == n:
            return 1
        total = 0
        for g in range(order):
            images[k] = g
            if all(holds(r) for r in due[k]):
                total += count(k + 1)
        return total

    return count(0)


def hom_count_abelian(A, G) -> int:
    """#Hom(A, G) for an AbelianGroup A and an abelian finite group G."""
    G = _as_group(G)
    total = G.order**A.free_rank
    for d in A.torsion:
        total *= sum(1 for g in range(G.order) if G.power(g, d) == G.identity)
    return total
