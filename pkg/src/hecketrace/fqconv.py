"""Borel-bi-invariant functions on GL(n, F_p) under convolution.

This is the concrete double-coset model of the Hecke algebra: the group
GL(n, F_p) decomposes into n! Bruhat cells B w B indexed by permutations
(B the invertible upper-triangular subgroup), the indicator functions of
the cells form a basis of the bi-invariant functions, and convolution

    (f * g)(x) = |B|^{-1} sum_y f(y) g(y^{-1} x)

makes the cell indicator of B the unit and the cell indicators sigma_m of
the simple transpositions satisfy the Hecke relations at q = p.  The
normalization by |B| (indicator unit rather than probability measures) is
what makes sigma_m^2 = (p-1) sigma_m + p come out exactly.

Everything is enumerated directly at desk scale: matrices are tuples of
tuples of residues, groups are explicit lists, and a size guard rejects
parameter pairs beyond p^(n^2) <= 10^7.  Function values are exact
Fractions.  The pairwise structure-constant verification switches to an
integer product-counting path (numpy) when the group is too large for the
dictionary convolution, which keeps the opt-in (3,3) case tractable; both
paths are exact and are cross-checked against each other in the tests.

Only prime fields are supported; prime powers would need extension-field
arithmetic without exercising anything new.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as _cartesian
from typing import Mapping

import numpy as np

from .hecke import HeckeElement, mul as hecke_mul
from .permutations import Perm, all_perms, format_perm, length
from .report import CheckResult

Matrix = tuple[tuple[int, ...], ...]

SIZE_GUARD = 10**7
_DICT_CONV_LIMIT = 2 * 10**6  # max |G|^2 for the dictionary convolution route

__all__ = [
    "FqFunction",
    "enumerate_gl",
    "borel_subgroup",
    "general_linear_order",
    "borel_order",
    "convolve",
    "unit_function",
    "cell_indicator",
    "sigma_element",
    "bruhat_table",
    "expand_in_cells",
    "is_biinvariant",
    "format_matrix",
    "function_dump",
    "structure_constants_check",
    "mat_mul",
    "mat_inv",
    "perm_matrix",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _check_np(n: int, p: int):
    if not _is_prime(p):
        raise ValueError(f"p = {p} is not prime (prime fields only)")
    if p ** (n * n) > SIZE_GUARD:
        raise ValueError(
            f"size guard exceeded: p^(n^2) = {p ** (n * n)} > {SIZE_GUARD}"
        )


# ---------------------------------------------------------------------------
# matrices over F_p


def mat_mul(a: Matrix, b: Matrix, p: int) -> Matrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) % p for col in bt) for row in a
    )


def mat_identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _det_mod(a: Matrix, p: int) -> int:
    n = len(a)
    m = [list(row) for row in a]
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] % p), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        inv = pow(m[col][col], p - 2, p)
        det = det * m[col][col] % p
        for r in range(col + 1, n):
            f = m[r][col] * inv % p
            if f:
                for c in range(col, n):
                    m[r][c] = (m[r][c] - f * m[col][c]) % p
    return det % p


def mat_inv(a: Matrix, p: int) -> Matrix:
    n = len(a)
    m = [list(row) + [1 if i == r else 0 for i in range(n)] for r, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] % p), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        inv = pow(m[col][col], p - 2, p)
        m[col] = [x * inv % p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def perm_matrix(w: Perm) -> Matrix:
    n = len(w)
    return tuple(
        tuple(1 if w[j] == i + 1 else 0 for j in range(n)) for i in range(n)
    )


# ---------------------------------------------------------------------------
# group enumeration


def general_linear_order(n: int, p: int) -> int:
    """|GL(n, p)| = prod_{k=0}^{n-1} (p^n - p^k)."""
    out = 1
    for k in range(n):
        out *= p**n - p**k
    return out


def borel_order(n: int, p: int) -> int:
    """|B| = (p-1)^n p^(n(n-1)/2)."""
    return (p - 1) ** n * p ** (n * (n - 1) // 2)


@lru_cache(maxsize=None)
def enumerate_gl(n: int, p: int) -> tuple[Matrix, ...]:
    """Every invertible n x n matrix over F_p exactly once; the count is
    asserted against the closed-form group order."""
    _check_np(n, p)
    out = []
    for entries in _cartesian(range(p), repeat=n * n):
        m = tuple(entries[i * n : (i + 1) * n] for i in range(n))
        if _det_mod(m, p) != 0:
            out.append(m)
    expected = general_linear_order(n, p)
    if len(out) != expected:
        raise RuntimeError(
            f"enumeration of GL({n},{p}) found {len(out)} elements, expected {expected}"
        )
    return tuple(out)


@lru_cache(maxsize=None)
def borel_subgroup(n: int, p: int) -> tuple[Matrix, ...]:
    """All invertible upper-triangular matrices, enumerated directly from
    their free coordinates."""
    _check_np(n, p)
    above = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []
    for diag in _cartesian(range(1, p), repeat=n):
        for uppr in _cartesian(range(p), repeat=len(above)):
            m = [[0] * n for _ in range(n)]
            for i in range(n):
                m[i][i] = diag[i]
            for (i, j), v in zip(above, uppr):
                m[i][j] = v
            out.append(tuple(tuple(row) for row in m))
    if len(out) != borel_order(n, p):
        raise RuntimeError("Borel enumeration does not match the closed formula")
    return tuple(out)


# ---------------------------------------------------------------------------
# bi-invariant functions


class FqFunction:
    """Finitely supported Fraction-valued function on GL(n, F_p); the
    bi-invariant ones are exactly those constant on Bruhat cells."""

    __slots__ = ("n", "p", "values")

    def __init__(self, n: int, p: int, values: Mapping[Matrix, Fraction] = ()):
        self.n = n
        self.p = p
        self.values: dict[Matrix, Fraction] = {
            g: Fraction(v) for g, v in dict(values).items() if v != 0
        }

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FqFunction)
            and (self.n, self.p) == (other.n, other.p)
            and self.values == other.values
        )

    def __add__(self, other: "FqFunction") -> "FqFunction":
        self._check(other)
        out = dict(self.values)
        for g, v in other.values.items():
            out[g] = out.get(g, Fraction(0)) + v
        return FqFunction(self.n, self.p, out)

    def scale(self, c) -> "FqFunction":
        return FqFunction(self.n, self.p, {g: v * c for g, v in self.values.items()})

    def __sub__(self, other: "FqFunction") -> "FqFunction":
        return self + other.scale(-1)

    def _check(self, other: "FqFunction"):
        if (self.n, self.p) != (other.n, other.p):
            raise ValueError(
                f"mismatched groups: GL({self.n},{self.p}) vs GL({other.n},{other.p})"
            )

    def __mul__(self, other: "FqFunction") -> "FqFunction":
        return convolve(self, other)

    def __repr__(self):
        return f"FqFunction<GL({self.n},{self.p}), support {len(self.values)}>"


def convolve(f: FqFunction, g: FqFunction) -> FqFunction:
    """(f * g)(x) = |B|^{-1} sum_y f(y) g(y^{-1} x), accumulated over the
    supports as (f * g)(y z) += f(y) g(z) / |B|."""
    f._check(g)
    n, p = f.n, f.p
    norm = Fraction(1, borel_order(n, p))
    out: dict[Matrix, Fraction] = {}
    for y, fv in f.values.items():
        for z, gv in g.values.items():
            x = mat_mul(y, z, p)
            out[x] = out.get(x, Fraction(0)) + fv * gv * norm
    return FqFunction(n, p, out)


def unit_function(n: int, p: int) -> FqFunction:
    """The indicator of B, the unit of the convolution algebra."""
    return FqFunction(n, p, {b: Fraction(1) for b in borel_subgroup(n, p)})


@lru_cache(maxsize=None)
def bruhat_table(n: int, p: int) -> dict[Perm, frozenset]:
    """The Bruhat cells B w B, one per permutation, computed by direct
    enumeration of products b1 (perm matrix) b2.  Asserts that the cells
    are disjoint, exhaust the group, and have sizes p^length(w) |B|."""
    borel = borel_subgroup(n, p)
    cells: dict[Perm, frozenset] = {}
    seen: set[Matrix] = set()
    for w in all_perms(n):
        pw = perm_matrix(w)
        left = [mat_mul(b, pw, p) for b in borel]
        cell = {mat_mul(m, b, p) for m in left for b in borel}
        expected = p ** length(w) * len(borel)
        if len(cell) != expected:
            raise RuntimeError(
                f"cell of {format_perm(w)} has size {len(cell)}, expected {expected}"
            )
        if cell & seen:
            raise RuntimeError(f"cell of {format_perm(w)} overlaps another cell")
        seen |= cell
        cells[w] = frozenset(cell)
    if len(seen) != general_linear_order(n, p):
        raise RuntimeError("Bruhat cells do not exhaust the group")
    return cells


def cell_indicator(w: Perm, n: int, p: int) -> FqFunction:
    return FqFunction(
        n, p, {g: Fraction(1) for g in bruhat_table(n, p)[w]}
    )


def sigma_element(m: int, n: int, p: int) -> FqFunction:
    """The generator sigma_m: the indicator of the cell of the simple
    transposition s_m."""
    if not 1 <= m <= n - 1:
        raise ValueError(f"generator index {m} out of range for rank {n}")
    w = tuple(m + 1 if k == m else m if k == m + 1 else k for k in range(1, n + 1))
    return cell_indicator(w, n, p)


def expand_in_cells(f: FqFunction, check_constancy: bool = True) -> dict[Perm, Fraction]:
    """Coefficients of f in the cell-indicator basis; raises if f is not
    constant on some cell or supported outside the group."""
    table = bruhat_table(f.n, f.p)
    coeffs: dict[Perm, Fraction] = {}
    remaining = dict(f.values)
    for w, cell in table.items():
        rep = next(iter(cell))
        value = remaining.get(rep, Fraction(0))
        if check_constancy:
            for g in cell:
                if remaining.pop(g, Fraction(0)) != value:
                    raise ValueError(
                        f"function is not constant on the cell of {format_perm(w)}"
                    )
        if value != 0:
            coeffs[w] = value
    if check_constancy and remaining:
        raise ValueError("function supported outside the enumerated group")
    return coeffs


def is_biinvariant(f: FqFunction) -> bool:
    try:
        expand_in_cells(f)
    except ValueError:
        return False
    return True


def format_matrix(m: Matrix) -> str:
    """Row-major digit string, e.g. "[[1,0],[1,1]]"."""
    return "[" + ",".join("[" + ",".join(str(x) for x in row) + "]" for row in m) + "]"


def function_dump(f: FqFunction) -> list[str]:
    """Serialize a bi-invariant function cell by cell: one line per cell
    with nonzero coefficient, identified by its Bruhat representative."""
    table = bruhat_table(f.n, f.p)
    coeffs = expand_in_cells(f)
    out = []
    for w in sorted(coeffs):
        rep = min(table[w])
        out.append(f"cell={format_perm(w)} rep={format_matrix(rep)} coeff={coeffs[w]}")
    return out


# ---------------------------------------------------------------------------
# structure constants against the abstract Hecke algebra


def _hecke_coeffs_at(w1: Perm, w2: Perm, p: int) -> dict[Perm, Fraction]:
    prod = hecke_mul(HeckeElement.basis(w1), HeckeElement.basis(w2))
    return {w: c(Fraction(p)) for w, c in prod.terms.items()}


def _encode_batch(mats: np.ndarray, p: int) -> np.ndarray:
    """Base-p integer ids of a (k, n, n) batch of matrices."""
    k, n, _ = mats.shape
    flat = mats.reshape(k, n * n)
    weights = (p ** np.arange(n * n, dtype=np.int64))[::-1]
    return flat @ weights


def _cell_products_fast(n: int, p: int) -> dict[tuple[Perm, Perm], dict[Perm, Fraction]]:
    """Structure constants by counting products y z over cell pairs with
    numpy integers (exact); verifies constancy on every output cell."""
    table = bruhat_table(n, p)
    perms = sorted(table)
    idspace = p ** (n * n)
    cell_of_id = np.full(idspace, -1, dtype=np.int64)
    mats = {}
    for ci, w in enumerate(perms):
        arr = np.array(sorted(table[w]), dtype=np.int64)
        mats[w] = arr
        cell_of_id[_encode_batch(arr, p)] = ci
    norm = borel_order(n, p)
    out: dict[tuple[Perm, Perm], dict[Perm, Fraction]] = {}
    chunk = max(1, 10**6 // max(1, len(max(mats.values(), key=len))))
    for w1 in perms:
        a = mats[w1]
        for w2 in perms:
            b = mats[w2]
            dense = np.zeros(idspace, dtype=np.int64)
            for lo in range(0, len(a), chunk):
                prods = (a[lo : lo + chunk, None] @ b[None, :]) % p
                ids = _encode_batch(prods.reshape(-1, n, n), p)
                dense += np.bincount(ids, minlength=idspace)
            coeffs: dict[Perm, Fraction] = {}
            for ci, w3 in enumerate(perms):
                ids3 = _encode_batch(mats[w3], p)
                vals = dense[ids3]
                if (vals != vals[0]).any():
                    raise RuntimeError(
                        f"product of cells {format_perm(w1)} {format_perm(w2)} "
                        f"is not constant on the cell of {format_perm(w3)}"
                    )
                if vals[0]:
                    coeffs[w3] = Fraction(int(vals[0]), norm)
            total = int(dense.sum())
            covered = sum(
                int(dense[_encode_batch(mats[w3], p)][0]) * len(mats[w3])
                for w3 in coeffs
            )
            if total != covered:
                raise RuntimeError("cell product supported outside the group")
            out[(w1, w2)] = coeffs
    return out


def structure_constants_check(n: int, p: int) -> list[CheckResult]:
    """Expand every product of cell indicators in the cell basis and
    compare, coefficient by coefficient, with the abstract T-basis product
    evaluated at q = p."""
    _check_np(n, p)
    order = general_linear_order(n, p)
    results = []
    if order * order <= _DICT_CONV_LIMIT:
        table = bruhat_table(n, p)
        perms = sorted(table)
        indicators = {w: cell_indicator(w, n, p) for w in perms}
        pairs = {}
        for w1 in perms:
            for w2 in perms:
                pairs[(w1, w2)] = expand_in_cells(
                    convolve(indicators[w1], indicators[w2])
                )
    else:
        pairs = _cell_products_fast(n, p)
    for (w1, w2), got in sorted(pairs.items()):
        expected = _hecke_coeffs_at(w1, w2, p)
        name = f"structure.gl({n},{p}).{format_perm(w1)}*{format_perm(w2)}"
        if got == expected:
            results.append(CheckResult(name, True))
        else:
            results.append(
                CheckResult(
                    name,
                    False,
                    f"cells gave {_fmt_coeffs(got)}, T-basis gave {_fmt_coeffs(expected)}",
                )
            )
    return results


def _fmt_coeffs(coeffs: dict[Perm, Fraction]) -> str:
    return (
        "{"
        + ", ".join(f"{format_perm(w)}: {coeffs[w]}" for w in sorted(coeffs))
        + "}"
    )
