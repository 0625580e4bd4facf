"""Linear-code analytics: weight distributions, classification, pairing.

Weight distributions come from three independent routes that are checked
against each other in the test suite:

* exhaustive enumeration of all q^k codewords (table-driven numpy, chunked);
* the MacWilliams transform of a known distribution;
* the closed-form NMDS distribution seeded with the minimum-weight count.

Counts are exact Python integers throughout; the MacWilliams transform
runs on exact rationals and asserts integrality of every coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .errors import BudgetExceededError, NmdskitError
from .gf import FieldSpec
from .linalg import Matrix, matrix_from_json, matrix_from_rows, null_space, rank

DEFAULT_ENUM_BUDGET = 2 ** 24

MDS = "mds"
AMDS = "amds"
NMDS = "nmds"
OTHER = "other"


class CodeError(NmdskitError):
    pass


@dataclass(frozen=True)
class WeightDistribution:
    n: int
    counts: tuple[int, ...]  # A_0 .. A_n

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise CodeError("need exactly n+1 weight counts")
        if any(c < 0 for c in self.counts):
            raise CodeError("negative weight count")

    def total(self) -> int:
        return sum(self.counts)

    def min_distance(self) -> int:
        for i in range(1, self.n + 1):
            if self.counts[i] > 0:
                return i
        raise CodeError("zero code has no minimum distance")

    def to_json(self) -> list[str]:
        return [str(c) for c in self.counts]


def min_distance(W: WeightDistribution) -> int:
    return W.min_distance()


@dataclass(frozen=True)
class CodeClass:
    kind: str  # mds | amds | nmds | other
    d: int
    d_dual: int


@dataclass(frozen=True)
class LinearCode:
    generator: Matrix
    family: str | None = None

    def __post_init__(self):
        if self.generator.rows > self.generator.cols:
            raise CodeError("generator has more rows than columns")
        if rank(self.generator) != self.generator.rows:
            raise CodeError("generator matrix is not full row rank")

    @property
    def field(self) -> FieldSpec:
        return self.generator.field

    @property
    def n(self) -> int:
        return self.generator.cols

    @property
    def k(self) -> int:
        return self.generator.rows

    def to_json(self) -> dict:
        obj = self.generator.to_json()
        obj["family"] = self.family
        obj["k"] = self.k
        return obj


def code_from_json(obj: dict) -> LinearCode:
    return LinearCode(matrix_from_json(obj), family=obj.get("family"))


def dual_code(C: LinearCode) -> LinearCode:
    basis = null_space(C.generator)
    if len(basis) != C.n - C.k:
        raise CodeError("kernel dimension mismatch")  # pragma: no cover
    return LinearCode(matrix_from_rows(C.field, [list(v) for v in basis]))


# ---------------------------------------------------------------------------
# table-driven exhaustive enumeration

_TABLE_CACHE: dict[tuple, tuple[np.ndarray, np.ndarray]] = {}


def _np_tables(f: FieldSpec) -> tuple[np.ndarray, np.ndarray]:
    key = (f.p, f.m, f.modulus)
    if key not in _TABLE_CACHE:
        q = f.q
        if q > 4096:
            raise BudgetExceededError(f"enumeration tables for q = {q} are out of scope")
        dtype = np.uint8 if q <= 256 else np.uint16
        add = np.empty((q, q), dtype=dtype)
        mul = np.empty((q, q), dtype=dtype)
        for a in range(q):
            for b in range(q):
                add[a, b] = f.add(a, b)
                mul[a, b] = f.mul(a, b)
        _TABLE_CACHE[key] = (add, mul)
    return _TABLE_CACHE[key]


def _codeword_chunks(C: LinearCode, chunk_target: int = 1 << 18):
    """Yield numpy arrays that together cover every codeword exactly once."""
    f = C.field
    q = f.q
    add, mul = _np_tables(f)
    G = np.array(C.generator.row_lists(), dtype=add.dtype)
    k, n = C.k, C.n
    k2 = 0
    while k2 < k and q ** (k2 + 1) <= chunk_target:
        k2 += 1
    block = np.zeros((1, n), dtype=add.dtype)
    for r in range(k - k2, k):
        multiples = mul[:, G[r]]  # (q, n): every scalar multiple of the row
        block = add[block[:, None, :], multiples[None, :, :]].reshape(-1, n)
    for prefix_index in range(q ** (k - k2)):
        prefix = np.zeros(n, dtype=add.dtype)
        rem = prefix_index
        for r in range(k - k2):
            coeff = rem % q
            rem //= q
            if coeff:
                prefix = add[prefix, mul[coeff, G[r]]]
        yield add[prefix, block]


def weight_distribution_exhaustive(C: LinearCode,
                                   budget: int = DEFAULT_ENUM_BUDGET) -> WeightDistribution:
    """Exact A_0..A_n by enumerating all q^k codewords."""
    total = C.field.q ** C.k
    if total > budget:
        raise BudgetExceededError(f"q^k = {total} exceeds enumeration budget {budget}")
    counts = np.zeros(C.n + 1, dtype=np.int64)
    for chunk in _codeword_chunks(C):
        wts = np.count_nonzero(chunk, axis=1)
        counts += np.bincount(wts, minlength=C.n + 1)
    return WeightDistribution(C.n, tuple(int(c) for c in counts))


def supports_of_weight(C: LinearCode, w: int,
                       budget: int = DEFAULT_ENUM_BUDGET) -> dict[frozenset, int]:
    """Multiset of supports of weight-w codewords, as support -> multiplicity.

    Coordinates are 1-based.
    """
    total = C.field.q ** C.k
    if total > budget:
        raise BudgetExceededError(f"q^k = {total} exceeds enumeration budget {budget}")
    supports: dict[frozenset, int] = {}
    for chunk in _codeword_chunks(C):
        wts = np.count_nonzero(chunk, axis=1)
        for i in np.flatnonzero(wts == w):
            supp = frozenset(int(j) + 1 for j in np.flatnonzero(chunk[i]))
            supports[supp] = supports.get(supp, 0) + 1
    return supports


# ---------------------------------------------------------------------------
# MacWilliams transform and the closed NMDS distribution

def _krawtchouk(n: int, q: int, j: int, i: int) -> int:
    return sum((-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s)
               for s in range(j + 1))


def macwilliams_dual_distribution(W: WeightDistribution, n: int, k: int,
                                  q: int) -> WeightDistribution:
    """Dual weight distribution via the MacWilliams transform."""
    if W.n != n:
        raise CodeError("length mismatch")
    if W.total() != q ** k:
        raise CodeError(f"inconsistent distribution: sums to {W.total()} != q^k")
    qk = q ** k
    dual = []
    for j in range(n + 1):
        val = Fraction(sum(W.counts[i] * _krawtchouk(n, q, j, i) for i in range(n + 1)), qk)
        if val.denominator != 1 or val < 0:
            raise CodeError(f"MacWilliams transform gave invalid A_{j}^perp = {val}")
        dual.append(int(val))
    out = WeightDistribution(n, tuple(dual))
    if out.total() != q ** (n - k):
        raise CodeError("dual distribution does not sum to q^(n-k)")
    return out


def nmds_distribution(n: int, k: int, q: int,
                      A_min: int) -> tuple[WeightDistribution, WeightDistribution]:
    """Closed-form distributions of an [n, k, n-k] NMDS code and its dual,
    seeded with A_min = A_{n-k} = A_k^perp."""
    if A_min < 0:
        raise CodeError("A_min must be nonnegative")
    primal = [0] * (n + 1)
    primal[0] = 1
    primal[n - k] = A_min
    for t in range(1, k + 1):
        val = comb(n, k - t) * sum((-1) ** j * comb(n - k + t, j) * (q ** (t - j) - 1)
                                   for j in range(t))
        val += (-1) ** t * comb(k, t) * A_min
        if val < 0:
            raise CodeError(f"negative A_{n - k + t} = {val}: invalid A_min")
        primal[n - k + t] = val
    dual = [0] * (n + 1)
    dual[0] = 1
    dual[k] = A_min
    for t in range(1, n - k + 1):
        val = comb(n, k + t) * sum((-1) ** j * comb(k + t, j) * (q ** (t - j) - 1)
                                   for j in range(t))
        val += (-1) ** t * comb(n - k, t) * A_min
        if val < 0:
            raise CodeError(f"negative A_{k + t}^perp = {val}: invalid A_min")
        dual[k + t] = val
    Wp = WeightDistribution(n, tuple(primal))
    Wd = WeightDistribution(n, tuple(dual))
    if Wp.total() != q ** k or Wd.total() != q ** (n - k):
        raise CodeError("closed-form distributions have wrong totals")
    return Wp, Wd


def classify(C: LinearCode, W: WeightDistribution | None = None,
             budget: int = DEFAULT_ENUM_BUDGET) -> CodeClass:
    """MDS / AMDS / NMDS / other, from the primal distribution plus MacWilliams."""
    if W is None:
        W = weight_distribution_exhaustive(C, budget=budget)
    n, k, q = C.n, C.k, C.field.q
    d = W.min_distance()
    d_dual = macwilliams_dual_distribution(W, n, k, q).min_distance()
    if d == n - k + 1:
        kind = MDS
    elif d == n - k and d_dual == k:
        kind = NMDS
    elif d == n - k:
        kind = AMDS
    else:
        kind = OTHER
    return CodeClass(kind, d, d_dual)


def verify_minweight_pairing(C: LinearCode, budget: int = DEFAULT_ENUM_BUDGET) -> bool:
    """Check the minimum-weight pairing between an NMDS code and its dual.

    Requires A_{n-k} = A_k^perp and that the supports of minimum-weight
    codewords of C are exactly the set complements of the minimum-weight
    dual supports (so disjoint-support pairing is a bijection).
    """
    n, k, q = C.n, C.k, C.field.q
    W = weight_distribution_exhaustive(C, budget=budget)
    if classify(C, W).kind != NMDS:
        raise CodeError("pairing check requires an NMDS code")
    primal = supports_of_weight(C, n - k, budget=budget)
    dual = supports_of_weight(dual_code(C), k, budget=budget)
    for supps in (primal, dual):
        for supp, mult in supps.items():
            if mult != q - 1:
                raise CodeError(f"support {sorted(supp)} has multiplicity {mult} != q-1")
    if len(primal) != len(dual):
        return False
    points = frozenset(range(1, n + 1))
    return {points - s for s in primal} == set(dual)
