import pytest

from cellred.poly import IntPoly, lowest_degree
from cellred.rootdata import CartanType, build_root_system, weyl_dim
from cellred.uniptables import WeightTemplate, load_tables
from cellred.weylmod import (
    MissingMwData,
    NonDominantTemplate,
    delta_table,
    dim_template,
    find_duality,
)

from conftest import DATA_TYPE_NAMES


def test_dim_template_examples():
    b2 = build_root_system(CartanType.parse("B2"))
    assert dim_template(b2, WeightTemplate(((-3, 1), (0, 0))), 3) == \
        IntPoly.parse("t(t-1)(t-2)/6")
    assert dim_template(b2, WeightTemplate(((0, 0), (0, 0)))) == IntPoly.one()
    assert dim_template(b2, WeightTemplate(((-1, 1), (-1, 1)))) == IntPoly.monomial(4)
    g2 = build_root_system(CartanType.parse("G2"))
    assert dim_template(g2, WeightTemplate(((-4, 1), (1, 0))), 5) == \
        IntPoly.parse("t(t^2-1)(t^2-9)/30")


def test_dim_template_rejects_non_dominant():
    b2 = build_root_system(CartanType.parse("B2"))
    with pytest.raises(NonDominantTemplate):
        dim_template(b2, WeightTemplate(((-3, 1), (0, 0))), 2)  # -1 at p=2
    with pytest.raises(NonDominantTemplate):
        dim_template(b2, WeightTemplate(((-1, 0), (0, 0))))


def test_delta_table_examples():
    a3 = delta_table(CartanType.parse("A3"))
    assert a3["2"].pi == IntPoly.parse("t(2t^2+1)/3")
    assert a3["13"].pi == IntPoly.parse("t^2(5t^2+1)/6")
    a2 = delta_table(CartanType.parse("A2"))
    assert a2["121"].pi == IntPoly.monomial(3)
    b2 = delta_table(CartanType.parse("B2"))
    assert b2["121"].pi == IntPoly.parse("t(t-1)(t-2)/6")
    assert b2["121"].c == 1


def test_delta_table_missing_for_a4():
    with pytest.raises(MissingMwData):
        delta_table(CartanType.parse("A4"))


@pytest.mark.parametrize("name", DATA_TYPE_NAMES)
def test_delta_matches_weyl_dim_at_primes(name):
    ct = CartanType.parse(name)
    tables = load_tables(ct)
    rs = build_root_system(ct)
    deltas = delta_table(ct)
    for word, dp in deltas.items():
        for p in (5, 7, 11, 13):
            total = 0
            for coef, tmpl in tables.m_w[word]:
                total += coef * weyl_dim(rs, tmpl.instantiate(p))
            assert dp.pi(p) == total


@pytest.mark.parametrize("name", DATA_TYPE_NAMES)
def test_delta_positive_from_min_prime(name):
    ct = CartanType.parse(name)
    tables = load_tables(ct)
    deltas = delta_table(ct)
    for dp in deltas.values():
        for p in range(tables.min_prime, tables.min_prime + 20):
            assert dp.pi(p) > 0


@pytest.mark.parametrize("name", DATA_TYPE_NAMES)
def test_lowest_degrees_recorded(name):
    deltas = delta_table(CartanType.parse(name))
    for dp in deltas.values():
        assert dp.c == lowest_degree(dp.pi)


def test_find_duality_examples():
    b2 = find_duality(CartanType.parse("B2"))
    assert b2.ok
    assert b2.pairs["1"] == ("2", 1)
    assert b2.pairs["e"] == ("1212", 1)
    a3 = find_duality(CartanType.parse("A3"))
    assert a3.pairs["2"] == ("13231", 1)
    assert a3.pairs["e"] == ("121321", 1)
    a1 = find_duality(CartanType.parse("A1"))
    assert a1.pairs["e"] == ("1", 1)


@pytest.mark.parametrize("name", DATA_TYPE_NAMES)
def test_duality_matches_shipped_tables(name):
    ct = CartanType.parse(name)
    res = find_duality(ct)
    assert res.ok
    shipped = load_tables(ct).duality
    assert {w: p for w, (p, _) in res.pairs.items()} == shipped
    # observed signs are all +; recorded, not assumed
    assert all(s == 1 for _, s in res.pairs.values())
