"""Closed-form trace evaluators and their internal cross-checks."""

from fractions import Fraction as F

import pytest

from hecketrace.scalars import PowerSeries
from hecketrace.traces import (
    TraceParams,
    WeightFunction,
    delta_eigenvalue,
    enumerate_multiplicities,
    generating_series,
    partition_trace,
    series_from_traces,
    super_newton,
    thoma_trace,
    zeta_trace,
    zeta_trace_diagonal,
)


def params(q, alpha=(), beta=(), gamma=0):
    return TraceParams(
        q=F(q), alpha=tuple(F(a) for a in alpha), beta=tuple(F(b) for b in beta),
        gamma=F(gamma),
    )


P_FLAT = params(2, alpha=("1/2", "1/2"))
P_TRIV = params(2, alpha=(1,))
P_SIGN = params(2, beta=(1,))
P_MIX = params(2, alpha=("1/2",), beta=("1/2",))


# ---------------------------------------------------------------------------
# parameter validation


def test_params_sum_must_be_one():
    with pytest.raises(ValueError, match=r"off by -1/2"):
        params(2, alpha=("1/4", "1/4"))
    with pytest.raises(ValueError, match=r"off by 1/3"):
        params(2, alpha=("2/3", "1/3"), gamma="1/3")


def test_params_monotonicity():
    with pytest.raises(ValueError):
        params(2, alpha=("1/4", "3/4"))
    with pytest.raises(ValueError):
        params(0, alpha=(1,))


def test_params_record_roundtrip():
    p = params("1/2", alpha=("1/2",), beta=("1/4",), gamma="1/4")
    rec = p.to_record()
    assert rec == {"q": "1/2", "alpha": ["1/2"], "beta": ["1/4"], "gamma": "1/4"}
    assert TraceParams.from_record(rec) == p


def test_weight_function():
    w = WeightFunction.from_params(params(2, alpha=("1/2",), beta=("1/3", "1/6")))
    assert w.support == (-2, -1, 1)
    assert w(1) == F(1, 2) and w(-1) == F(1, 3) and w(-2) == F(1, 6)
    assert w(5) == 0
    with pytest.raises(ValueError):
        WeightFunction.from_params(params(2, alpha=("1/2",), gamma="1/2"))


# ---------------------------------------------------------------------------
# super-Newton sums


def test_super_newton_examples():
    assert super_newton(1, params(2, alpha=("1/2", "1/2"))) == 1
    assert super_newton(2, P_SIGN) == -1
    assert super_newton(3, P_MIX) == F(1, 4)


def test_super_newton_rejects_k0():
    with pytest.raises(ValueError):
        super_newton(0, P_TRIV)


# ---------------------------------------------------------------------------
# partition enumeration


def test_multiplicity_enumeration_small():
    assert list(enumerate_multiplicities(1)) == [{1: 1}]
    two = list(enumerate_multiplicities(2))
    assert {frozenset(mu.items()) for mu in two} == {
        frozenset({(1, 2)}),
        frozenset({(2, 1)}),
    }


def test_multiplicity_enumeration_counts():
    # partition numbers p(1..8)
    expected = [1, 2, 3, 5, 7, 11, 15, 22]
    for m, count in enumerate(expected, start=1):
        vecs = list(enumerate_multiplicities(m))
        assert len(vecs) == count
        assert all(sum(k * c for k, c in mu.items()) == m for mu in vecs)
        # no duplicates
        assert len({frozenset(mu.items()) for mu in vecs}) == count


# ---------------------------------------------------------------------------
# the partition-sum formula


def test_zeta_trace_m1_is_one():
    for p in (P_FLAT, P_TRIV, P_SIGN, P_MIX):
        assert zeta_trace(1, p) == 1


def test_zeta_trace_one_dimensional_anchors():
    # alpha = (1): the one-dimensional representation sending sigma to q
    for m in range(1, 7):
        assert zeta_trace(m, P_TRIV) == F(2) ** (m - 1)
        assert zeta_trace(m, params(3, alpha=(1,))) == F(3) ** (m - 1)
    # beta = (1): the sign-type representation sending sigma to -1
    for m in range(1, 7):
        assert zeta_trace(m, P_SIGN) == F(-1) ** (m - 1)


def test_zeta_trace_flat_pair():
    assert zeta_trace(2, P_FLAT) == F(5, 4)
    assert zeta_trace(3, P_FLAT) == F(3, 2)


def test_zeta_trace_rejects_q1():
    with pytest.raises(ValueError, match="thoma"):
        zeta_trace(2, params(1, alpha=(1,)))


def test_zeta_trace_accepts_positive_gamma():
    # the formula depends on gamma only through the normalization constraint
    p = params(2, alpha=("1/2",), gamma="1/2")
    assert zeta_trace(1, p) == 1
    # hand expansion: (q-1)^2/2 + (q^2-1)/2 * p_2 with p_2 = 1/4, over q-1
    assert zeta_trace(2, p) == F(7, 8)


def test_partition_trace_examples():
    assert partition_trace((1, 1, 1), P_FLAT) == 1
    assert partition_trace((2, 2), P_FLAT) == F(25, 16)
    assert partition_trace((3,), params(3, alpha=(1,))) == 9


# ---------------------------------------------------------------------------
# Thoma degeneration at q = 1


def test_thoma_values():
    assert thoma_trace(2, params(1, alpha=("1/2", "1/2"))) == F(1, 2)
    assert thoma_trace(1, params(1, beta=(1,))) == 1
    assert thoma_trace(3, params(1, beta=(1,))) == 1


# ---------------------------------------------------------------------------
# generating function


def test_generating_series_geometric():
    got = generating_series(P_TRIV, 4)
    assert got == PowerSeries(4, [1, 1, 2, 4, 8])


def test_generating_series_constant_term():
    for p in (P_FLAT, P_SIGN, P_MIX):
        assert generating_series(p, 5).coeffs[0] == 1


def test_generating_series_sign_representation():
    got = generating_series(P_SIGN, 4)
    assert got == PowerSeries(4, [1, 1, -1, 1, -1])


def test_generating_series_rejects_gamma():
    with pytest.raises(ValueError):
        generating_series(params(2, alpha=("1/2",), gamma="1/2"), 3)


def test_generating_series_trivial_at_q1():
    got = generating_series(params(1, alpha=("1/2", "1/2")), 6)
    assert got == PowerSeries.one(6)


def test_series_from_traces_examples():
    assert series_from_traces(P_TRIV, 3) == PowerSeries(3, [1, 1, 2, 4])
    assert series_from_traces(P_MIX, 5).coeffs[0] == 1
    assert series_from_traces(P_FLAT, 2) == PowerSeries(2, [1, 1, F(5, 4)])


@pytest.mark.parametrize("q", ["2", "3", "1/2", "5/3"])
@pytest.mark.parametrize(
    "alpha,beta",
    [
        ((1,), ()),
        ((), (1,)),
        (("1/2", "1/2"), ()),
        (("1/2",), ("1/2",)),
        (("2/3", "1/6"), ("1/6",)),
    ],
)
def test_series_identity(q, alpha, beta):
    p = params(q, alpha=alpha, beta=beta)
    assert series_from_traces(p, 8) == generating_series(p, 8)


# ---------------------------------------------------------------------------
# diagonal route


def test_delta_eigenvalue_examples():
    q = F(7, 2)
    assert delta_eigenvalue((1, 1), q) == q
    assert delta_eigenvalue((-1, -1), q) == -1
    assert delta_eigenvalue((1, 2), q) == q - 1


def test_delta_eigenvalue_mixed():
    q = F(2)
    # two negative blocks and one positive block: (q-1)^2, sign from
    # multiplicities 2 and 1, q-power from multiplicity 3
    assert delta_eigenvalue((-3, -3, -1, 2, 2, 2), q) == (-1) * q**2 * (q - 1) ** 2


def test_delta_eigenvalue_validation():
    with pytest.raises(ValueError):
        delta_eigenvalue((2, 1), 2)
    with pytest.raises(ValueError):
        delta_eigenvalue((0, 1), 2)
    with pytest.raises(ValueError):
        delta_eigenvalue((), 2)


def test_diagonal_route_examples():
    assert zeta_trace_diagonal(2, P_FLAT) == F(5, 4)
    for p in (P_FLAT, P_SIGN, P_MIX):
        assert zeta_trace_diagonal(1, p) == 1
    assert zeta_trace_diagonal(3, P_TRIV) == 4


def test_diagonal_route_guards():
    with pytest.raises(ValueError):
        zeta_trace_diagonal(2, params(2, alpha=("1/2",), gamma="1/2"))
    with pytest.raises(ValueError):
        zeta_trace_diagonal(2, params(1, alpha=(1,)))


@pytest.mark.parametrize("q", ["2", "3", "1/2"])
@pytest.mark.parametrize(
    "alpha,beta",
    [
        ((1,), ()),
        ((), (1,)),
        (("1/2", "1/2"), ()),
        (("1/2",), ("1/2",)),
        (("2/3", "1/6"), ("1/6",)),
    ],
)
def test_diagonal_route_agrees_with_formula(q, alpha, beta):
    p = params(q, alpha=alpha, beta=beta)
    for m in range(1, 7):
        assert zeta_trace_diagonal(m, p) == zeta_trace(m, p)
