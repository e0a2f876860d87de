"""
Randomized property suites. Each returns a list of failing inputs; an
empty list means the property held on every sample.
"""
import random
from fractions import Fraction
from math import gcd

from oracles import snf_invariants
from sslab.groups import FiniteGroup, Presentation, abelianization, fill_quotient, hom_count
from sslab.groups import words as W
from sslab.groups.snf import determinant, is_smith_normal_form, matmul, smith_normal_form
from sslab.harness import PHI0, T1, build_paper_objects
from sslab.lspace import Rule, Verdict, certify
from sslab.seifert import BaseOrbifold, SeifertClosed
from sslab.slopes import BasisChange, Slope, change_basis, distance


def random_matrix(rng, max_dim=5, spread=9):
    m = rng.randint(1, max_dim)
    n = rng.randint(1, max_dim)
    return [[rng.randint(-spread, spread) for _ in range(n)] for _ in range(m)]


def snf_suite(samples=1000, seed=1):
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        A = random_matrix(rng)
        res = smith_normal_form(A)
        U, D, V = [list(map(list, x)) for x in (res.U, res.D, res.V)]
        ok = (
            matmul(matmul(U, A), V) == D
            and abs(determinant(U)) == 1
            and abs(determinant(V)) == 1
            and is_smith_normal_form(D)
            and [d for d in res.diagonal if d] == snf_invariants(A)
        )
        if not ok:
            bad.append(A)
    return bad


def random_unimodular(rng, steps=6):
    a, b, c, d = 1, 0, 0, 1
    for _ in range(steps):
        k = rng.randint(-4, 4)
        move = rng.randrange(3)
        if move == 0:
            a, b = a + k * c, b + k * d
        elif move == 1:
            c, d = c + k * a, d + k * b
        else:
            a, b, c, d = c, d, a, b
    return BasisChange(a, b, c, d)


def random_slope(rng, spread=30):
    while True:
        p, q = rng.randint(-spread, spread), rng.randint(-spread, spread)
        if (p, q) != (0, 0) and gcd(p, q) == 1:
            return Slope(p, q)


def distance_suite(samples=1000, seed=2):
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        m = random_unimodular(rng)
        a, b = random_slope(rng), random_slope(rng)
        if distance(change_basis(a, m), change_basis(b, m)) != distance(a, b):
            bad.append((m, a, b))
        elif change_basis(change_basis(a, m), m.inverse()) != a:
            bad.append((m, a))
    return bad


_NAMES = "abcdefgijk"


def random_presentation(rng):
    n = rng.randint(1, 3)
    rels = []
    for _ in range(rng.randint(1, 3)):
        w = tuple(rng.choice([1, -1]) * rng.randint(1, n) for _ in range(rng.randint(1, 6)))
        rels.append(w)
    return Presentation(tuple(_NAMES[:n]), tuple(rels))


def random_word(rng, n, length=4):
    return tuple(rng.choice([1, -1]) * rng.randint(1, n) for _ in range(rng.randint(0, length)))


def tietze_move(P, rng):
    n = P.ngens
    rels = list(P.relators)
    move = rng.randrange(6)
    if move == 0 and rels:
        i = rng.randrange(len(rels))
        rels[i] = W.conjugate(rels[i], random_word(rng, n))
    elif move == 1 and rels:
        i = rng.randrange(len(rels))
        rels[i] = W.inverse(rels[i])
    elif move == 2 and len(rels) >= 2:
        i, j = rng.sample(range(len(rels)), 2)
        rels[i] = W.multiply(rels[i], W.conjugate(rels[j], random_word(rng, n)))
    elif move == 3 and rels:
        # a consequence of the existing relators
        extra = ()
        for _ in range(rng.randint(1, 3)):
            r = rng.choice(rels)
            extra = W.multiply(extra, W.conjugate(r, random_word(rng, n)))
        rels.append(extra)
    elif move == 4 and n < len(_NAMES):
        # new generator x with x = w
        w = random_word(rng, n)
        rels.append(W.multiply((-(n + 1),), w))
        return Presentation(tuple(_NAMES[: n + 1]), tuple(rels))
    elif move == 5 and rels:
        i = rng.randrange(len(rels))
        r = rels[i]
        if r:
            k = rng.randrange(len(r))
            rels[i] = r[k:] + r[:k]
    return Presentation(P.generators, tuple(rels))


def tietze_suite(samples=500, seed=3):
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        P = random_presentation(rng)
        Q = P
        for _ in range(rng.randint(1, 6)):
            Q = tietze_move(Q, rng)
        if abelianization(P) != abelianization(Q):
            bad.append((P, Q))
    return bad


def free_product_suite(max_p=12):
    """#Hom(Z * Z/p, G) = |G| * #{g : g^p = e} on the groups of M(phi0, (p, q))."""
    objs = build_paper_objects()
    targets = [FiniteGroup.cyclic(n) for n in range(2, 7)]
    targets += [FiniteGroup.symmetric(3), FiniteGroup.dihedral(4)]
    bad = []
    for p in range(2, max_p + 1):
        for q in (1, -1, p - 1 if gcd(p, p - 1) == 1 else 1):
            group = fill_quotient(fill_quotient(objs.m_group, T1, PHI0), 0, Slope(p, q))
            for G in targets:
                roots = sum(1 for g in range(G.order) if G.power(g, p) == G.identity)
                if hom_count(group, G) != G.order * roots:
                    bad.append((p, q, G.name))
    return bad


ELLIPTIC_TRIPLES = [(2, 3, 3), (2, 3, 4), (2, 3, 5)] + [(2, 2, n) for n in range(2, 12)]


def random_elliptic(rng):
    cones = rng.choice(ELLIPTIC_TRIPLES)
    while True:
        fibers = []
        for a in cones:
            b = rng.choice([b for b in range(1, a) if gcd(a, b) == 1])
            fibers.append((a, b))
        b0 = rng.randint(-4, 2)
        m = SeifertClosed(BaseOrbifold(0, True, 0), b0, tuple(fibers))
        if m.euler_number != Fraction(0):
            return m


def elliptic_suite(samples=100, seed=4):
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        m = random_elliptic(rng)
        short = certify(m)
        general = certify(m, use_recognition=False)
        ok = (
            short.rule is Rule.ELLIPTIC
            and short.verdict is Verdict.LSPACE
            and general.rule is Rule.SPHERE_BASE_CRITERION
            and general.verdict is Verdict.LSPACE
            and general.validate(m)
        )
        if not ok:
            bad.append(m)
    return bad
