import pytest

from oracles import alexander, brute_hom_count, cyclic_perms, dihedral_perms, sym
from sslab.errors import (
    BadBoundaryIndex,
    NoTorsionSlope,
    NotUnique,
    ParseError,
    RankNotOne,
    TooLarge,
)
from sslab.groups import (
    AbelianGroup,
    FiniteGroup,
    LaurentPolynomial,
    Presentation,
    abelianization,
    alexander_polynomial,
    fill_quotient,
    hom_count,
    hom_count_abelian,
    peripheral_commutes_in_h1,
    rational_longitude,
)
from sslab.groups import words as W
from sslab.slopes import Slope
from suites import tietze_suite


# -- words -----------------------------------------------------------------

def test_reduce_and_inverse():
    assert W.reduce((1, 2, -2, -1, 3)) == (3,)
    assert W.cyclic_reduce((-1, 2, 3, 1)) == (2, 3)
    assert W.inverse((1, -2)) == (2, -1)
    assert W.multiply((1, 2), W.inverse((1, 2))) == ()
    assert W.power((1, 2), -2) == (-2, -1, -2, -1)
    assert W.exponent_sums((1, 1, -2, 3, -1), 3) == [1, -1, 1]


def test_parse_word():
    names = ("a", "b", "t")
    assert W.parse_word("aabb", names) == (1, 1, 2, 2)
    assert W.parse_word("AAT", names) == (-1, -1, -3)
    assert W.parse_word("[t,ab]", names) == W.commutator((3,), (1, 2))
    assert W.parse_word("(ab)^3", names) == W.power((1, 2), 3)
    assert W.parse_word("a^-2", names) == (-1, -1)
    assert W.parse_word("1", names) == ()
    assert W.format_word((1, -2, 3), names) == "aBt"
    with pytest.raises(ParseError):
        W.parse_word("ax", names)


# -- abelianization ----------------------------------------------------------

@pytest.mark.parametrize(
    "gens, rels, want",
    [
        ("ab", ["aabb"], AbelianGroup(1, (2,))),
        ("abt", ["aabb", "[t,ab]"], AbelianGroup(2, (2,))),
        ("xy", ["[x,y]"], AbelianGroup(2)),
        ("xy", ["xxx", "yy"], AbelianGroup(0, (6,))),
        ("x", [], AbelianGroup(1)),
        ("xy", ["xyXY", "x^4", "y^6"], AbelianGroup(0, (2, 12))),
    ],
)
def test_abelianization(gens, rels, want):
    assert abelianization(Presentation.parse(gens, rels)) == want


def test_abelian_group_display():
    assert str(AbelianGroup(2, (2,))) == "Z^2 + Z/2"
    assert str(AbelianGroup(1)) == "Z"
    assert str(AbelianGroup()) == "0"
    assert AbelianGroup(0, (1, 3)) == AbelianGroup(0, (3,))
    g = AbelianGroup(1, (2, 4))
    assert AbelianGroup.from_json(g.to_json()) == g
    with pytest.raises(ValueError):
        AbelianGroup(0, (2, 3))


def test_tietze_invariance():
    assert tietze_suite(samples=100, seed=17) == []


def test_presentation_json_round_trip():
    P = Presentation.parse("abt", ["aabb", "[t,ab]"], [("AAT", "ab"), ("t", "ab")])
    Q = Presentation.from_json(P.to_json())
    assert Q == P
    with pytest.raises(ParseError):
        Presentation.from_json({"relators": []})


# -- fillings and longitudes ---------------------------------------------------

M = Presentation.parse("abt", ["aabb", "[t,ab]"], [("AAT", "ab"), ("t", "ab")])
N = Presentation.parse("ab", ["aabb"], [("AA", "ab")])


def test_fill_quotient_drops_peripheral():
    P = fill_quotient(M, 1, Slope(1, 0))
    assert len(P.peripherals) == 1
    assert P.relators[-1] == (3,)
    assert abelianization(P) == abelianization(N)
    with pytest.raises(BadBoundaryIndex):
        fill_quotient(P, 1, Slope(1, 0))


def test_lemma1_shape():
    for p, q, want in [(0, 1, AbelianGroup(2)), (1, 5, AbelianGroup(1)), (7, -3, AbelianGroup(1, (7,)))]:
        P = fill_quotient(fill_quotient(M, 0, Slope(0, 1)), 0, Slope(p, q))
        assert abelianization(P) == want


def test_rational_longitude():
    assert rational_longitude(N, 0) == Slope(0, 1)
    for alpha in [Slope(2, 1), Slope(3, -2), Slope(5, 7)]:
        assert rational_longitude(fill_quotient(M, 1, alpha), 0) == Slope(0, 1)
    assert peripheral_commutes_in_h1(M, 0)


def test_rational_longitude_errors():
    torus = Presentation.parse("xy", ["[x,y]"], [("x", "y")])
    with pytest.raises(NoTorsionSlope):
        rational_longitude(torus, 0)
    trivial = Presentation.parse("xy", ["x", "y"], [("x", "y")])
    with pytest.raises(NotUnique):
        rational_longitude(trivial, 0)
    # a knot-like case: H_1 = Z generated by the meridian
    solid = Presentation.parse("x", [], [("x", "1")])
    assert rational_longitude(solid, 0) == Slope(0, 1)


# -- finite quotients --------------------------------------------------------

def lemma1_words(p, q):
    alpha = "t" * p + ("ab" * q if q >= 0 else "BA" * -q)
    return ["aabb", "tabTBA", "ab", alpha]


@pytest.mark.parametrize("p, q", [(2, 1), (3, 1), (3, -2), (4, 1), (5, 2)])
@pytest.mark.parametrize(
    "target, elements",
    [
        (FiniteGroup.symmetric(3), sym(3)),
        (FiniteGroup.dihedral(4), dihedral_perms(4)),
        (FiniteGroup.cyclic(5), cyclic_perms(5)),
    ],
)
def test_hom_count_matches_brute_force(p, q, target, elements):
    words = lemma1_words(p, q)
    P = Presentation.parse("abt", words)
    assert hom_count(P, target) == brute_hom_count("abt", words, elements)


def test_hom_counts_into_s3():
    words = lemma1_words(2, 1)
    assert brute_hom_count("abt", words, sym(3)) == 24
    zz2 = ["xyXY", "yy"]
    assert brute_hom_count("xy", zz2, sym(3)) == 12
    assert hom_count(Presentation.parse("xy", zz2), FiniteGroup.symmetric(3)) == 12


def test_finite_group_constructors():
    assert FiniteGroup.dihedral(4).order == 8
    assert not FiniteGroup.dihedral(4).is_abelian
    assert FiniteGroup.symmetric(3).order == 6
    assert FiniteGroup.cyclic(6).is_abelian
    assert FiniteGroup.by_name("Z/5").order == 5
    assert FiniteGroup.by_name("Q8").order == 8
    assert FiniteGroup.by_name("A4").order == 12
    with pytest.raises(ValueError):
        FiniteGroup.by_name("XX")


def test_hom_count_abelian():
    # Hom(Z + Z/6, Z/4) = 4 * 2
    assert hom_count_abelian(AbelianGroup(1, (6,)), FiniteGroup.cyclic(4)) == 8
    P = Presentation.parse("xy", ["[x,y]", "y^6"])
    assert hom_count(P, FiniteGroup.cyclic(4)) == 8


def test_hom_count_budget():
    P = Presentation.parse("abcdefg", [])
    with pytest.raises(TooLarge):
        hom_count(P, FiniteGroup.symmetric(4), budget=1000)


# -- Alexander polynomials ---------------------------------------------------

def test_trefoil():
    P = Presentation.parse("xy", ["xyxYXY"])
    assert alexander_polynomial(P).coeffs == (1, -1, 1)
    assert alexander("xy", ["xyxYXY"], [1, 1]) == [1, -1, 1]


def test_figure_eight():
    rel = "yxYxyXYxYX"
    P = Presentation.parse("xy", [rel])
    assert alexander_polynomial(P).coeffs == (1, -3, 1)
    assert alexander("xy", [rel], [1, 1]) == [1, -3, 1]


def test_torus_knot_2_5():
    P = Presentation.parse("xy", ["xxYYYYY"])
    want = [1, -1, 1, -1, 1]
    assert list(alexander_polynomial(P).coeffs) == want
    assert alexander("xy", ["xxYYYYY"], [5, 2]) == want


def test_unknot_and_circle():
    assert alexander_polynomial(Presentation.parse("x", [])).coeffs == (1,)


@pytest.mark.parametrize("alpha", [Slope(2, 1), Slope(3, 1), Slope(3, -2), Slope(4, 3), Slope(5, -1)])
def test_filled_m_against_fox_oracle(alpha):
    P = fill_quotient(M, 1, alpha)
    words = ["aabb", "tabTBA", "t" * alpha.p + ("ab" * alpha.q if alpha.q >= 0 else "BA" * -alpha.q)]
    # H_1 / torsion = Z generated by a, with b -> -1 and t -> 0
    assert list(alexander_polynomial(P).coeffs) == alexander("abt", words, [1, -1, 0])


def test_filled_m_value():
    assert alexander_polynomial(fill_quotient(M, 1, Slope(2, 1))).coeffs == (2, 2)


def test_rank_not_one():
    with pytest.raises(RankNotOne):
        alexander_polynomial(M)


def test_laurent_display():
    p = LaurentPolynomial((0, -1, 3, 0), shift=-2)
    assert p.shift == -1 and p.coeffs == (-1, 3)
    assert p.normalized().coeffs == (1, -3)
    assert str(LaurentPolynomial((1, -1, 1))) == "1 - t + t^2"
    assert LaurentPolynomial((2, 2))(1) == 4
