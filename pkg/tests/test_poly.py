from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cellred.poly import (
    DegreeExceedsNu,
    IntPoly,
    LaurentPoly,
    LeadingTermOfZero,
    ZeroPolynomial,
    lowest_degree,
    reverse_at,
)

V = LaurentPoly.gen(1)
VI = LaurentPoly.gen(-1)


def test_laurent_basics():
    assert (V + VI) * (V - VI) == LaurentPoly({2: 1, -2: -1})
    assert (VI + V) ** 2 == LaurentPoly({-2: 1, 0: 2, 2: 1})
    assert (LaurentPoly.gen(3) + 2 * V).leading_term() == (3, 1)
    assert LaurentPoly.zero().is_zero
    assert (V - V).is_zero
    assert LaurentPoly.from_int(5).at_one() == 5
    assert (V + VI).at_one() == 2
    assert V.shift(-2) == VI


def test_laurent_leading_of_zero():
    with pytest.raises(LeadingTermOfZero):
        LaurentPoly.zero().leading_term()


laurents = st.dictionaries(
    st.integers(-6, 6), st.integers(-9, 9), max_size=5
).map(LaurentPoly)


@given(laurents, laurents, laurents)
def test_laurent_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a + LaurentPoly.zero() == a
    assert a * LaurentPoly.one() == a


def test_intpoly_parse_render_examples():
    f = IntPoly.parse("t(t+1)(t+2)/6")
    assert f.coeffs() == (0, Fraction(1, 3), Fraction(1, 2), Fraction(1, 6))
    assert IntPoly.parse(f.render()) == f
    assert IntPoly.parse("t^6").render() == "t^6"
    assert IntPoly.parse("1").render() == "1"
    assert IntPoly.parse("t(t+1)^2(t^2-t+1)/2")(2) == 2 * 9 * 3 / 2
    assert IntPoly.parse("t^2(5t^2+1)/6") == IntPoly.parse("(5t^4+t^2)/6")


def test_intpoly_parse_rejects_junk():
    for bad in ("", "t+", "(t", "t^", "q", "t//2"):
        with pytest.raises(ValueError):
            IntPoly.parse(bad)


def test_reverse_at_pairs_from_the_tables():
    # the two transcribed reversal pairs
    f = IntPoly.parse("t(t+1)(t+2)/6")
    assert reverse_at(4, f) == IntPoly.parse("t(t+1)(2t+1)/6")
    g = IntPoly.parse("t^2(5t^2+1)/6")
    assert reverse_at(6, g) == IntPoly.parse("t^2(t^2+5)/6")
    assert reverse_at(6, IntPoly.one()) == IntPoly.monomial(6)


def test_reverse_at_degree_guard():
    with pytest.raises(DegreeExceedsNu):
        reverse_at(2, IntPoly.monomial(3))


def test_lowest_degree():
    assert lowest_degree(IntPoly.parse("t(t-1)(t-2)/6")) == 1
    assert lowest_degree(IntPoly.one()) == 0
    assert lowest_degree(IntPoly.monomial(6)) == 6
    with pytest.raises(ZeroPolynomial):
        lowest_degree(IntPoly.zero())


coeff = st.fractions(
    min_value=-10, max_value=10, max_denominator=12
)
intpolys = st.lists(coeff, max_size=6).map(IntPoly)


@given(intpolys)
def test_reverse_at_is_an_involution(f):
    nu = max(f.degree(), 0) + 2
    assert reverse_at(nu, reverse_at(nu, f)) == f


@given(intpolys, intpolys, st.integers(-20, 20))
def test_product_evaluates_pointwise(f, g, k):
    assert (f * g)(k) == f(k) * g(k)


def test_integer_valuedness():
    assert IntPoly.parse("t(t+1)/2").is_integer_valued()
    assert IntPoly.parse("t(t+1)(2t+1)/6").is_integer_valued()
    assert not IntPoly.parse("t/2").is_integer_valued()
