"""Exact scalar layer: polynomials, truncated series, square-root ring."""

from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from hecketrace.scalars import (
    PowerSeries,
    QPoly,
    RootElem,
    SqrtTable,
    exact_sqrt,
    format_fraction,
    parse_fraction,
    series_linear_fraction,
    series_mul,
)


# ---------------------------------------------------------------------------
# rationals (serialization only; arithmetic is fractions.Fraction)


def test_fraction_roundtrip():
    for text in ("5/4", "-5/4", "7", "0", "-3"):
        assert format_fraction(parse_fraction(text)) == text


def test_fraction_field_sample():
    # (a/b) * b == a for a spread of small rationals
    vals = [F(n, d) for n in range(-4, 5) for d in range(1, 5)]
    for a in vals:
        for b in vals:
            if b != 0:
                assert (a / b) * b == a


# ---------------------------------------------------------------------------
# polynomials in q


def test_qpoly_basics():
    q = QPoly.var()
    assert (q - 1) * (q + 1) == QPoly([-1, 0, 1])
    assert QPoly([0, 0, 0]).is_zero()
    assert QPoly().degree() is None
    assert (q * q).degree() == 2
    assert QPoly([1, 2, 3])(F(1, 2)) == F(1) + F(1) + F(3, 4)


def test_qpoly_trailing_zeros_trimmed():
    assert QPoly([1, 1, 0, 0]).coeffs == (F(1), F(1))
    assert (QPoly([0, 1]) - QPoly([0, 1])).is_zero()


def test_qpoly_str():
    q = QPoly.var()
    assert str(q * q - q + 1) == "1 - q + q^2"
    assert str(QPoly()) == "0"


# ---------------------------------------------------------------------------
# truncated power series


def test_series_mul_difference_of_squares():
    one_plus = PowerSeries(3, [1, 1])
    one_minus = PowerSeries(3, [1, -1])
    assert series_mul(one_plus, one_minus) == PowerSeries(3, [1, 0, -1, 0])


def test_series_mul_identity():
    s = PowerSeries(4, [1, F(1, 2), 0, -3, F(2, 7)])
    assert series_mul(PowerSeries.one(4), s) == s


def test_series_mul_geometric_inverse():
    # (1 + 2z + 4z^2 + 8z^3)(1 - 2z) = 1, truncated at order 3
    geo = PowerSeries(3, [1, 2, 4, 8])
    assert series_mul(geo, PowerSeries(3, [1, -2])) == PowerSeries.one(3)


def test_series_mul_order_mismatch():
    with pytest.raises(ValueError):
        series_mul(PowerSeries.one(3), PowerSeries.one(4))


def test_linear_fraction_geometric():
    # 1/(1 - 2z): b = 0, c = -2
    assert series_linear_fraction(0, -2, 3) == PowerSeries(3, [1, 2, 4, 8])


def test_linear_fraction_cancel():
    assert series_linear_fraction(F(1, 3), F(1, 3), 4) == PowerSeries.one(4)


def test_linear_fraction_hand_expansion():
    # (1 + z)/(1 + z/2) with beta = 1/2
    got = series_linear_fraction(2 * F(1, 2), F(1, 2), 2)
    assert got == PowerSeries(2, [1, F(1, 2), F(-1, 4)])


@given(
    b=st.fractions(min_value=-3, max_value=3, max_denominator=6),
    c=st.fractions(min_value=-3, max_value=3, max_denominator=6),
)
def test_linear_fraction_times_denominator(b, c):
    # (1+bz)/(1+cz) * (1+cz) == (1+bz) up to truncation
    order = 6
    lhs = series_mul(series_linear_fraction(b, c, order), PowerSeries(order, [1, c]))
    assert lhs == PowerSeries(order, [1, b])


# ---------------------------------------------------------------------------
# square-root ring


def table_q2():
    return SqrtTable({"sqrt_q": 2})


def test_sqrt_squares_to_value():
    t = table_q2()
    r = t.sqrt("sqrt_q")
    assert r * r == t.from_rational(2)


def test_sqrt_product_of_distinct_symbols():
    t = SqrtTable({"sqrt_a1": F(1, 2), "sqrt_a2": F(1, 3)})
    prod = t.sqrt("sqrt_a1") * t.sqrt("sqrt_a2")
    assert prod.comps == {frozenset(("sqrt_a1", "sqrt_a2")): F(1)}


def test_binomial_square():
    # (1 + sqrt(q))^2 = 4 + 2 sqrt(q) at q = 3
    t = SqrtTable({"sqrt_q": 3})
    x = t.one() + t.sqrt("sqrt_q")
    assert x * x == t.from_rational(4) + t.sqrt("sqrt_q") * 2


def test_rational_part():
    t = table_q2()
    assert t.from_rational(F(5, 4)).rational_part() == (F(5, 4), True)
    mixed = t.from_rational(2) + t.sqrt("sqrt_q") * 3
    assert mixed.rational_part() == (F(2), False)
    assert t.zero().rational_part() == (F(0), True)


def test_perfect_square_resolution():
    # sqrt(1/4) carries no formal symbol: it is the rational 1/2
    t = SqrtTable({"sqrt_a1": F(1, 4)})
    assert not t.formal
    assert t.sqrt("sqrt_a1") == t.from_rational(F(1, 2))
    # q = 1 resolves sqrt_q to 1
    t1 = SqrtTable({"sqrt_q": 1})
    assert t1.sqrt("sqrt_q") == t1.one()


def test_exact_sqrt():
    assert exact_sqrt(F(9, 16)) == F(3, 4)
    assert exact_sqrt(F(1, 2)) is None
    assert exact_sqrt(F(0)) == 0


def test_mismatched_tables_rejected():
    a = SqrtTable({"sqrt_q": 2})
    b = SqrtTable({"sqrt_q": 3})
    with pytest.raises(ValueError):
        a.sqrt("sqrt_q") * b.sqrt("sqrt_q")


def test_serialization_pairs():
    t = SqrtTable({"sqrt_q": 2, "sqrt_a1": F(1, 2)})
    x = t.from_rational(3) + t.sqrt("sqrt_q") * t.sqrt("sqrt_a1") * F(-1, 2)
    assert x.to_pairs() == [([], "3"), (["sqrt_a1", "sqrt_q"], "-1/2")]


_TABLE = SqrtTable({"sqrt_q": 2, "sqrt_a1": F(1, 2), "sqrt_a2": F(2, 3)})


@st.composite
def root_elems(draw):
    keys = [
        frozenset(),
        frozenset(("sqrt_q",)),
        frozenset(("sqrt_a1",)),
        frozenset(("sqrt_a2",)),
        frozenset(("sqrt_q", "sqrt_a1")),
        frozenset(("sqrt_a1", "sqrt_a2")),
    ]
    comps = {}
    for k in draw(st.lists(st.sampled_from(keys), max_size=4)):
        comps[k] = draw(st.fractions(min_value=-3, max_value=3, max_denominator=4))
    return RootElem(_TABLE, comps)


@given(x=root_elems(), y=root_elems(), z=root_elems())
def test_rootring_ring_laws(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
