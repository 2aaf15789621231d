"""Closed-form evaluators for the indecomposable traces on the infinite
Iwahori-Hecke algebra.

A trace in this family is indexed by a Thoma-type parameter triple: two
nonincreasing nonnegative sequences alpha, beta and a remainder gamma with
sum(alpha) + sum(beta) + gamma = 1, together with the rational deformation
parameter q > 0.  Its value on the descending cycle element zeta_m is

    (1/(q-1)) * sum over {mu : sum(k mu_k) = m} of
        prod_{k>=1} (q^k - 1)^{mu_k} / (k^{mu_k} mu_k!)
        * prod_{k>=2} p_k(alpha, beta)^{mu_k},

where p_k(alpha, beta) = sum(alpha_i^k) + (-1)^(k+1) sum(beta_i^k) are the
super-Newton sums; the sum ranges over multiplicity vectors of partitions
of m.  Values on products of disjoint cycle blocks multiply, and q = 1 has
a removable singularity where the value degenerates to the classical Thoma
character value p_m(alpha, beta).

Two further evaluation routes are provided for cross-checking: the
generating function

    G(z) = prod_i (1 + beta_i q z)/(1 + beta_i z)
           * prod_j (1 - alpha_j z)/(1 - alpha_j q z)

whose coefficients repackage the same values, and a diagonal-operator sum
that evaluates the trace as a weighted sum of eigenvalues over
nondecreasing index tuples (the scalar shadow of the tensor model in
`tensor`, but computed here without any tensor machinery).

All arithmetic is exact; every function either returns a Fraction or an
exact PowerSeries.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterator, Mapping, Sequence

from .scalars import (
    CrossCheckError,
    PowerSeries,
    Rat,
    format_fraction,
    parse_fraction,
    series_linear_fraction,
    series_mul,
)

__all__ = [
    "TraceParams",
    "WeightFunction",
    "super_newton",
    "enumerate_multiplicities",
    "zeta_trace",
    "partition_trace",
    "thoma_trace",
    "generating_series",
    "series_from_traces",
    "delta_eigenvalue",
    "zeta_trace_diagonal",
]


def _check_weights(name: str, seq: tuple[Fraction, ...]):
    if any(x < 0 for x in seq):
        raise ValueError(f"{name} entries must be nonnegative")
    if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
        raise ValueError(f"{name} must be nonincreasing")


@dataclass(frozen=True)
class TraceParams:
    """Thoma-type parameters (alpha, beta, gamma) plus the deformation
    parameter q; validated so that sum(alpha) + sum(beta) + gamma == 1
    holds exactly."""

    q: Fraction
    alpha: tuple[Fraction, ...] = ()
    beta: tuple[Fraction, ...] = ()
    gamma: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        object.__setattr__(self, "alpha", tuple(Fraction(a) for a in self.alpha))
        object.__setattr__(self, "beta", tuple(Fraction(b) for b in self.beta))
        object.__setattr__(self, "gamma", Fraction(self.gamma))
        if self.q <= 0:
            raise ValueError("q must be positive")
        _check_weights("alpha", self.alpha)
        _check_weights("beta", self.beta)
        if self.gamma < 0:
            raise ValueError("gamma must be nonnegative")
        total = sum(self.alpha) + sum(self.beta) + self.gamma
        if total != 1:
            raise ValueError(
                "alpha, beta, gamma must sum to 1 exactly; "
                f"off by {format_fraction(total - 1)}"
            )

    # -- serialization --------------------------------------------------

    @classmethod
    def from_record(cls, rec: Mapping) -> "TraceParams":
        return cls(
            q=parse_fraction(str(rec["q"])),
            alpha=tuple(parse_fraction(str(a)) for a in rec.get("alpha", ())),
            beta=tuple(parse_fraction(str(b)) for b in rec.get("beta", ())),
            gamma=parse_fraction(str(rec.get("gamma", "0"))),
        )

    @classmethod
    def from_json(cls, text: str) -> "TraceParams":
        return cls.from_record(json.loads(text))

    def to_record(self) -> dict:
        return {
            "q": format_fraction(self.q),
            "alpha": [format_fraction(a) for a in self.alpha],
            "beta": [format_fraction(b) for b in self.beta],
            "gamma": format_fraction(self.gamma),
        }


@dataclass(frozen=True)
class WeightFunction:
    """Weights a_i on nonzero integer indices: a_j = alpha_j for j > 0 and
    a_{-j} = beta_j for j > 0, zero-weight indices dropped.  Only defined
    for gamma = 0, where sum(a_i) = 1."""

    weights: Mapping[int, Fraction]
    support: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "weights", dict(self.weights))
        if any(i == 0 for i in self.weights):
            raise ValueError("index 0 is not allowed")
        if any(a < 0 for a in self.weights.values()):
            raise ValueError("weights must be nonnegative")
        object.__setattr__(self, "support", tuple(sorted(self.weights)))

    @classmethod
    def from_params(cls, params: TraceParams) -> "WeightFunction":
        if params.gamma != 0:
            raise ValueError("weight functions require gamma = 0")
        weights: dict[int, Fraction] = {}
        for j, a in enumerate(params.alpha, start=1):
            if a != 0:
                weights[j] = a
        for j, b in enumerate(params.beta, start=1):
            if b != 0:
                weights[-j] = b
        return cls(weights)

    def __call__(self, i: int) -> Fraction:
        return self.weights.get(i, Fraction(0))


# ---------------------------------------------------------------------------
# super-Newton sums and the partition-sum formula


def super_newton(k: int, params: TraceParams) -> Fraction:
    """p_k(alpha, beta) = sum(alpha_i^k) + (-1)^(k+1) sum(beta_i^k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    sign = 1 if k % 2 == 1 else -1
    return sum((a**k for a in params.alpha), Fraction(0)) + sign * sum(
        (b**k for b in params.beta), Fraction(0)
    )


def enumerate_multiplicities(m: int) -> Iterator[dict[int, int]]:
    """All finitely supported multiplicity vectors {k: mu_k} with
    sum(k * mu_k) = m, i.e. the partitions of m; each exactly once."""
    if m < 1:
        raise ValueError("m must be >= 1")

    def rec(remaining: int, largest: int) -> Iterator[dict[int, int]]:
        if remaining == 0:
            yield {}
            return
        for k in range(min(remaining, largest), 0, -1):
            for count in range(remaining // k, 0, -1):
                for rest in rec(remaining - k * count, k - 1):
                    yield {k: count, **rest}

    return rec(m, m)


def zeta_trace(m: int, params: TraceParams) -> Fraction:
    """Trace value on the m-cycle element zeta_m by the partition-sum
    formula; q = 1 is rejected (use thoma_trace there)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    q = params.q
    if q == 1:
        raise ValueError("q = 1 has a removable singularity; use thoma_trace")
    total = Fraction(0)
    newton = {k: super_newton(k, params) for k in range(2, m + 1)}
    for mu in enumerate_multiplicities(m):
        term = Fraction(1)
        for k, count in mu.items():
            term *= (q**k - 1) ** count
            term /= Fraction(k**count * factorial(count))
            if k >= 2:
                term *= newton[k] ** count
        total += term
    return total / (q - 1)


def partition_trace(parts: Sequence[int], params: TraceParams) -> Fraction:
    """Trace value on a product of disjoint cycle blocks: the product of
    the single-block values (traces in this family are multiplicative over
    blocks)."""
    out = Fraction(1)
    for p in parts:
        out *= zeta_trace(p, params)
    return out


def thoma_trace(m: int, params: TraceParams) -> Fraction:
    """The q = 1 degeneration: 1 for m = 1 and p_m(alpha, beta) for m >= 2
    (the classical character value of the infinite symmetric group)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return Fraction(1)
    return super_newton(m, params)


# ---------------------------------------------------------------------------
# generating function


def generating_series(params: TraceParams, order: int) -> PowerSeries:
    """The product formula for G(z), expanded exactly to the given order.

    Well defined for every q > 0 including q = 1, where all factors cancel
    and G is the constant series 1.
    """
    if params.gamma != 0:
        raise ValueError("the generating function requires gamma = 0")
    q = params.q
    out = PowerSeries.one(order)
    for b in params.beta:
        if b != 0:
            out = series_mul(out, series_linear_fraction(b * q, b, order))
    for a in params.alpha:
        if a != 0:
            out = series_mul(out, series_linear_fraction(-a, -a * q, order))
    return out


def series_from_traces(params: TraceParams, order: int) -> PowerSeries:
    """G(z) rebuilt from trace values:
    1 + (q-1) (z + sum_{m>=2} chi(zeta_m) z^m), truncated at the order.

    Must agree with generating_series coefficientwise; the test suites
    assert this identity."""
    if params.gamma != 0:
        raise ValueError("the trace series requires gamma = 0")
    q = params.q
    coeffs = [Fraction(1)]
    for m in range(1, order + 1):
        coeffs.append((q - 1) * zeta_trace(m, params))
    return PowerSeries(order, coeffs)


# ---------------------------------------------------------------------------
# diagonal-operator route


def delta_eigenvalue(indices: Sequence[int], q: Rat) -> Fraction:
    """Eigenvalue of the chained diagonal operators on the basis tensor
    labelled by a nondecreasing tuple of nonzero integers.

    With u distinct negative entries of multiplicities mu_1..mu_u and v
    distinct positive entries of multiplicities nu_1..nu_v, the value is

        (-1)^(sum(mu_k - 1)) * q^(sum(nu_l - 1)) * (q-1)^(u + v - 1).
    """
    indices = tuple(indices)
    if not indices:
        raise ValueError("need at least one index")
    if any(i == 0 for i in indices):
        raise ValueError("indices must be nonzero")
    if any(indices[i] > indices[i + 1] for i in range(len(indices) - 1)):
        raise ValueError("indices must be nondecreasing")
    q = Fraction(q)
    neg_mult: dict[int, int] = {}
    pos_mult: dict[int, int] = {}
    for i in indices:
        (neg_mult if i < 0 else pos_mult)[i] = (
            (neg_mult if i < 0 else pos_mult).get(i, 0) + 1
        )
    sign = -1 if sum(c - 1 for c in neg_mult.values()) % 2 else 1
    qpow = q ** sum(c - 1 for c in pos_mult.values())
    blocks = len(neg_mult) + len(pos_mult)
    return sign * qpow * (q - 1) ** (blocks - 1)


def _nondecreasing_tuples(support: Sequence[int], m: int) -> Iterator[tuple[int, ...]]:
    def rec(start: int, left: int) -> Iterator[tuple[int, ...]]:
        if left == 0:
            yield ()
            return
        for pos in range(start, len(support)):
            for rest in rec(pos, left - 1):
                yield (support[pos],) + rest

    return rec(0, m)


def _compositions(total: int, slots: int) -> Iterator[tuple[int, ...]]:
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


def _zeta_by_tuples(m: int, weights: WeightFunction, q: Fraction) -> Fraction:
    total = Fraction(0)
    for tup in _nondecreasing_tuples(weights.support, m):
        prod = Fraction(1)
        for i in tup:
            prod *= weights(i)
        total += delta_eigenvalue(tup, q) * prod
    return total


def _zeta_by_exponents(m: int, params: TraceParams, q: Fraction) -> Fraction:
    """Grouped form of the same sum: exponent vectors phi over the nonzero
    beta entries and psi over the nonzero alpha entries, sum(phi) +
    sum(psi) = m; each nonzero exponent block contributes
    (-beta_i)^phi_i (1-q) resp. (q alpha_j)^psi_j (1 - 1/q)."""
    betas = [b for b in params.beta if b != 0]
    alphas = [a for a in params.alpha if a != 0]
    slots = len(betas) + len(alphas)
    total = Fraction(0)
    for combo in _compositions(m, slots):
        phi, psi = combo[: len(betas)], combo[len(betas):]
        term = Fraction(1)
        for b, e in zip(betas, phi):
            if e:
                term *= (-b) ** e * (1 - q)
        for a, e in zip(alphas, psi):
            if e:
                term *= (q * a) ** e * (1 - 1 / q)
        total += term
    return total / (q - 1)


def zeta_trace_diagonal(m: int, params: TraceParams) -> Fraction:
    """Trace value on zeta_m by the diagonal-eigenvalue sum, evaluated by
    both summation strategies (per-tuple and grouped-by-exponents); any
    disagreement between the two is a hard failure, not a usage error."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if params.gamma != 0:
        raise ValueError("the diagonal route requires gamma = 0")
    q = params.q
    if q == 1:
        raise ValueError("q = 1 has a removable singularity; use thoma_trace")
    weights = WeightFunction.from_params(params)
    by_tuples = _zeta_by_tuples(m, weights, q)
    by_exponents = _zeta_by_exponents(m, params, q)
    if by_tuples != by_exponents:
        raise CrossCheckError(
            f"diagonal sum strategies disagree at m={m}: "
            f"{by_tuples} (tuples) vs {by_exponents} (exponents)"
        )
    return by_tuples
