"""Minimum-weight supports as design blocks, and t-design verification.

Blocks are canonical sorted 1-based index tuples.  Two extraction routes
exist: enumerating codewords (when q^k is within budget) and the
structural column-dependency search, which scales to dual dimensions far
beyond enumeration.  The column search exploits that for the g3/g4
matrices a k-column submatrix is singular iff the field elements indexing
its unit columns sum to zero (omitted-row Vandermonde factorization), but
the generic rank path works for any NMDS generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .code import LinearCode, supports_of_weight
from .errors import BudgetExceededError, NmdskitError
from .linalg import matrix_from_rows, null_space

DEFAULT_SUBSET_BUDGET = 10 ** 7


class DesignError(NmdskitError):
    pass


@dataclass(frozen=True)
class Design:
    v: int  # points are 1..v
    w: int  # block size
    blocks: frozenset  # of sorted index tuples

    def __post_init__(self):
        for b in self.blocks:
            if len(b) != self.w or not all(1 <= x <= self.v for x in b):
                raise DesignError(f"bad block {b}")
            if tuple(sorted(b)) != tuple(b):
                raise DesignError(f"block {b} is not sorted")

    @property
    def b(self) -> int:
        return len(self.blocks)

    def complement_blocks(self) -> "Design":
        pts = set(range(1, self.v + 1))
        comp = frozenset(tuple(sorted(pts - set(b))) for b in self.blocks)
        return Design(self.v, self.v - self.w, comp)

    def to_json(self, t: int | None = None, lam: int | None = None) -> dict:
        obj = {"points": self.v, "block_size": self.w,
               "blocks": sorted(list(b) for b in self.blocks)}
        if t is not None:
            obj["t"] = t
        if lam is not None:
            obj["lambda"] = lam
        return obj


@dataclass(frozen=True)
class DesignParams:
    t: int
    v: int
    w: int
    lam: int
    b: int

    def __post_init__(self):
        if comb(self.v, self.t) * self.lam != comb(self.w, self.t) * self.b:
            raise DesignError("C(v,t) lambda != C(w,t) b")


@dataclass(frozen=True)
class DesignFailure:
    """A witness t-subset whose block count differs from the rest."""
    witness: tuple[int, ...]
    count: int
    expected: int


def make_design(v: int, w: int, blocks) -> Design:
    return Design(v, w, frozenset(tuple(sorted(b)) for b in blocks))


def _kernel_vector(code: LinearCode, cols: list[int]):
    """(rank defect, kernel vector) of the k x |cols| column submatrix."""
    sub = code.generator.submatrix_columns(cols)
    basis = null_space(sub)
    return len(basis), (basis[0] if basis else None)


def g3_g4_singular_test(C: LinearCode):
    """Fast singularity predicate for g3/g4 column subsets.

    The determinant of any k columns factors as a Vandermonde product
    times the sum of the field elements indexing the unit columns (the
    extra g4 column contributes a cofactor expansion step), so a subset
    is singular iff those elements sum to zero.
    """
    if C.family not in ("g3", "g4"):
        raise DesignError("singular shortcut only applies to families g3/g4")
    f = C.field
    units = f.units()
    n_units = len(units)

    def test(cols: tuple[int, ...]) -> bool:
        s = 0
        for j in cols:
            if j < n_units:
                s = f.add(s, units[j])
        return s == 0

    return test


def dual_min_blocks(C: LinearCode, budget: int = DEFAULT_SUBSET_BUDGET,
                    singular_test=None) -> Design:
    """Supports of weight-k dual codewords, by column-dependency search.

    A k-subset of columns is a block iff the submatrix has rank k-1 and
    its kernel vector has no zero coordinate; larger rank defects mean
    the code is not NMDS and are rejected.
    """
    n, k = C.n, C.k
    if comb(n, k) > budget:
        raise BudgetExceededError(f"C({n},{k}) exceeds subset budget {budget}")
    blocks = []
    for cols in combinations(range(n), k):
        if singular_test is not None and not singular_test(cols):
            continue
        defect, kernel = _kernel_vector(C, list(cols))
        if defect == 0:
            continue
        if defect > 1:
            raise DesignError(f"columns {cols} have rank defect {defect}: not NMDS")
        if all(x != 0 for x in kernel):
            blocks.append(tuple(j + 1 for j in cols))
    return make_design(n, k, blocks)


def primal_min_blocks(C: LinearCode, budget: int = DEFAULT_SUBSET_BUDGET,
                      singular_test=None) -> Design:
    """Supports of weight-(n-k) codewords of an NMDS code, structurally.

    A codeword vanishing on a k-subset S exists iff the S-submatrix has a
    left kernel; it has weight exactly n-k iff that kernel vector is
    nonorthogonal to every column outside S, making complement(S) a block.
    """
    n, k = C.n, C.k
    if comb(n, k) > budget:
        raise BudgetExceededError(f"C({n},{k}) exceeds subset budget {budget}")
    f = C.field
    cols_all = [[C.generator.at(i, j) for i in range(k)] for j in range(n)]
    blocks = []
    for cols in combinations(range(n), k):
        if singular_test is not None and not singular_test(cols):
            continue
        sub_t = matrix_from_rows(f, [cols_all[j] for j in cols])  # transpose of submatrix
        basis = null_space(sub_t)
        if not basis:
            continue
        if len(basis) > 1:
            raise DesignError(f"columns {cols} have rank defect {len(basis)}: not NMDS")
        a = basis[0]
        in_s = set(cols)
        support = []
        full_weight = True
        for j in range(n):
            if j in in_s:
                continue
            dot = 0
            for ai, gij in zip(a, cols_all[j]):
                if ai and gij:
                    dot = f.add(dot, f.mul(ai, gij))
            if dot == 0:
                full_weight = False
                break
            support.append(j + 1)
        if full_weight:
            blocks.append(tuple(support))
    return make_design(n, n - k, blocks)


def blocks_from_codewords(C: LinearCode, w: int, budget: int = 2 ** 24) -> Design:
    """Scaled support set of weight-w codewords, via exhaustive enumeration.

    Every distinct support must occur exactly q-1 times (scalar multiples);
    anything else means the scaled multiset is not a simple block set.
    """
    supports = supports_of_weight(C, w, budget=budget)
    q = C.field.q
    for supp, mult in supports.items():
        if mult != q - 1:
            raise DesignError(
                f"support {sorted(supp)} occurs {mult} times, not q-1 = {q - 1}: "
                "not a simple design")
    return make_design(C.n, w, [tuple(sorted(s)) for s in supports])


def verify_t_design(D: Design, t: int):
    """Check that every t-subset of points lies in the same number of blocks.

    Returns DesignParams on success and a DesignFailure witness otherwise.
    """
    if not 1 <= t <= D.w:
        raise DesignError(f"t = {t} out of range 1..{D.w}")
    counts: dict[tuple, int] = {}
    for block in D.blocks:
        for sub in combinations(block, t):
            counts[sub] = counts.get(sub, 0) + 1
    total_t = comb(D.v, t)
    if not counts:
        return DesignFailure(witness=tuple(range(1, t + 1)), count=0, expected=-1)
    lam = next(iter(counts.values()))
    if len(counts) < total_t:
        covered = set(counts)
        for sub in combinations(range(1, D.v + 1), t):
            if sub not in covered:
                return DesignFailure(witness=sub, count=0, expected=lam)
    for sub, c in counts.items():
        if c != lam:
            return DesignFailure(witness=sub, count=c, expected=lam)
    return DesignParams(t=t, v=D.v, w=D.w, lam=lam, b=D.b)


def lambda_from_counts(v: int, w: int, t: int, A_w: int, q: int) -> Fraction:
    """lambda = C(w,t) A_w / ((q-1) C(v,t)); integral iff a design is claimed."""
    if min(v, w, t, q) < 1 or A_w < 0:
        raise DesignError("inputs must be positive")
    return Fraction(comb(w, t) * A_w, (q - 1) * comb(v, t))


def complement_design(D: Design, t: int, lam: int) -> tuple[Design, Fraction]:
    """Block-complement design and its lambda, verified against a recount."""
    params = verify_t_design(D, t)
    if not isinstance(params, DesignParams) or params.lam != lam:
        raise DesignError("input is not a verified t-design with the given lambda")
    lam_c = lam * Fraction(comb(D.v - t, D.w), comb(D.v - t, D.w - t))
    comp = D.complement_blocks()
    cparams = verify_t_design(comp, t)
    if not isinstance(cparams, DesignParams) or cparams.lam != lam_c:
        raise DesignError(f"complement recount {cparams} disagrees with lambda^c = {lam_c}")
    return comp, lam_c


def predicted_lambda(family: str, m: int, k: int) -> tuple[int, int, int]:
    """(t, lambda, lambda^c) claimed for the g3 (t=2) and g4 (t=3) designs."""
    q = 2 ** m
    if family == "g3":
        if not 3 <= k <= q - 4:
            raise DesignError(f"k = {k} out of range 3..{q - 4} for g3 designs")
        j = k // 2
        bracket = comb(q - 3, k - 2) + (-1) ** (k + j) * Fraction(
            k * (k - 1), 2 * j) * comb(q // 2 - 2, j - 1)
        lam_c = Fraction(bracket, q)
        lam = Fraction((q - 1 - k) * (q - 2 - k), q * k * (k - 1)) * bracket
        t = 2
    elif family == "g4":
        if k % 2 != 0:
            raise DesignError("no design claim for odd k in family g4")
        if not 4 <= k <= q - 4:
            raise DesignError(f"k = {k} out of range 4..{q - 4} for g4 designs")
        bracket = comb(q - 3, k - 3) + (-1) ** (k // 2) * (k - 1) * comb(q // 2 - 2, k // 2 - 2)
        lam = Fraction((q - k) * (q - k - 1) * (q - k - 2), q * k * (k - 1) * (k - 2)) * bracket
        lam_c = Fraction(bracket, q)
        t = 3
    else:
        raise DesignError(f"no design claim for family {family!r}")
    for x in (lam, lam_c):
        if x.denominator != 1:
            raise DesignError(f"non-integral predicted lambda {x}")
    return t, int(lam), int(lam_c)
