"""Exact counting of k-subsets of GF(q) or GF(q)* with a prescribed sum.

Four routes to N(k, b, D):

* an oracle that counts combinatorially by exact dynamic programming over
  the domain elements (ground truth, independent of every formula below);
* the Li-Wan closed forms for D = GF(q) and D = GF(q)*;
* recurrences for N(k, 0, GF(2^m)*) iterated up from k = 3;
* alternating-sum closed forms for the binary case, both domains.

All formula evaluation uses exact rationals with integrality asserted;
the divisions involved are only integral in combination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import BudgetExceededError, NmdskitError
from .gf import FieldSpec

FULL = "full"
UNITS = "units"

DEFAULT_DP_BUDGET = 10 ** 8


class SubsetSumError(NmdskitError):
    pass


@dataclass(frozen=True)
class CountResult:
    value: int
    method: str  # "oracle" | "liwan" | "recurrence" | "closed_form"

    def __post_init__(self):
        if self.value < 0:
            raise SubsetSumError("negative count")


def _domain_elements(f: FieldSpec, domain: str) -> list[int]:
    if domain == UNITS:
        return list(f.units())
    if domain == FULL:
        return [0] + list(f.units())
    raise SubsetSumError(f"unknown domain {domain!r}")


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise SubsetSumError(f"{what} evaluated to non-integer {x}")
    return int(x)


def oracle_count(f: FieldSpec, domain: str, k: int, b: int = 0,
                 budget: int = DEFAULT_DP_BUDGET) -> CountResult:
    """Count k-subsets of the domain summing to b, by exact DP.

    dp[j][s] tracks the number of j-subsets of the elements processed so
    far whose sum is s; elements are folded in one at a time so each
    subset is counted once.
    """
    elems = _domain_elements(f, domain)
    f.check(b)
    if not 1 <= k <= len(elems):
        raise SubsetSumError(f"k = {k} out of range for |domain| = {len(elems)}")
    if len(elems) * k * f.q > budget:
        raise BudgetExceededError(
            f"oracle DP size {len(elems) * k * f.q} exceeds budget {budget}")
    q = f.q
    add = f.add
    dp = [[0] * q for _ in range(k + 1)]
    dp[0][0] = 1
    for idx, e in enumerate(elems):
        for j in range(min(k, idx + 1), 0, -1):
            prev = dp[j - 1]
            cur = dp[j]
            for s in range(q):
                c = prev[s]
                if c:
                    cur[add(s, e)] += c
    return CountResult(dp[k][b], "oracle")


def enumerate_count(f: FieldSpec, domain: str, k: int, b: int = 0,
                    budget: int = 10 ** 7) -> CountResult:
    """Plain k-subset enumeration; small-case cross-check for the DP oracle."""
    elems = _domain_elements(f, domain)
    f.check(b)
    if not 1 <= k <= len(elems):
        raise SubsetSumError(f"k = {k} out of range for |domain| = {len(elems)}")
    if comb(len(elems), k) > budget:
        raise BudgetExceededError("too many subsets to enumerate")
    add = f.add
    count = 0
    for subset in combinations(elems, k):
        s = 0
        for x in subset:
            s = add(s, x)
        if s == b:
            count += 1
    return CountResult(count, "oracle")


def liwan_count(q: int, p: int, domain: str, k: int, b_is_zero: bool) -> CountResult:
    """The Li-Wan formulas, with v(b) = q-1 when b = 0 and -1 otherwise."""
    if q % p != 0 or p < 2:
        raise SubsetSumError("q must be a power of the characteristic p")
    v = q - 1 if b_is_zero else -1
    if domain == FULL:
        if not 1 <= k <= q:
            raise SubsetSumError(f"k = {k} out of range 1..{q}")
        val = Fraction(comb(q, k), q)
        if k % p == 0:
            val += (-1) ** (k + k // p) * Fraction(v, q) * comb(q // p, k // p)
    elif domain == UNITS:
        if not 1 <= k <= q - 1:
            raise SubsetSumError(f"k = {k} out of range 1..{q - 1}")
        val = Fraction(comb(q - 1, k), q)
        val += (-1) ** (k + k // p) * Fraction(v, q) * comb(q // p - 1, k // p)
    else:
        raise SubsetSumError(f"unknown domain {domain!r}")
    return CountResult(_as_int(val, "Li-Wan count"), "liwan")


def _check_binary_range(m: int, k: int) -> int:
    q = 2 ** m
    if not 3 <= k < q - 1:
        raise SubsetSumError(f"k = {k} out of range 3..{q - 2} for m = {m}")
    return q


def binary_recurrence_count(m: int, k: int) -> CountResult:
    """N(k, 0, GF(2^m)*) by iterating the odd/even recurrences from k = 3.

    Odd  k = 2l+1:  N(2l+1) = C(2^m, 2l+1)/2^m - ((2^m-2l)/(2l)) N(2l-1)
    Even k = 2l:    N(2l)   = ((2^m-2l)/(2l)) N(2l-1)
    """
    q = _check_binary_range(m, k)
    n_odd = Fraction(comb(q, 3), q)  # N(3, 0, GF(2^m)*)
    _as_int(n_odd, "N(3)")
    if k == 3:
        return CountResult(int(n_odd), "recurrence")
    value = n_odd
    for kk in range(4, k + 1):
        ell = kk // 2
        coef = Fraction(q - 2 * ell, 2 * ell)
        if kk % 2 == 0:
            value = coef * n_odd
        else:
            value = Fraction(comb(q, kk), q) - coef * n_odd
            n_odd = value
        _as_int(value, f"N({kk})")
    return CountResult(int(value), "recurrence")


def _units_odd_sum(q: int, ell: int) -> Fraction:
    # sum_{t=0}^{ell-1} (-1)^t (prod_{j<t} (q-2(ell-j))/(2(ell-j))) C(q, 2ell+1-2t)
    total = Fraction(0)
    prod = Fraction(1)
    for t in range(ell):
        total += (-1) ** t * prod * comb(q, 2 * ell + 1 - 2 * t)
        prod *= Fraction(q - 2 * (ell - t), 2 * (ell - t))
    return total


def binary_closed_form(m: int, k: int, domain: str) -> CountResult:
    """Alternating-sum closed forms for N(k, 0, .) over GF(2^m)."""
    q = _check_binary_range(m, k)
    ell = k // 2
    if domain == UNITS:
        if k % 2 == 1:
            val = _units_odd_sum(q, ell) / q
        else:
            # ((q-2l)/(2^{m+1} l)) times the odd sum at l-1
            val = Fraction(q - 2 * ell, 2 * q * ell) * _units_odd_sum(q, ell - 1)
    elif domain == FULL:
        if k % 2 == 1:
            val = Fraction(comb(q, k), q)
        else:
            val = Fraction(_units_odd_sum(q, ell - 1), 2 * ell)
    else:
        raise SubsetSumError(f"unknown domain {domain!r}")
    return CountResult(_as_int(val, "closed form"), "closed_form")


def verify_identity(m: int, ell: int) -> bool:
    """Alternating-sum identity equating the two closed-form routes."""
    if ell < 1 or 2 * ell + 1 >= 2 ** m - 1:
        raise SubsetSumError(f"ell = {ell} out of range for m = {m}")
    q = 2 ** m
    lhs = _units_odd_sum(q, ell)
    rhs = comb(q - 1, 2 * ell + 1) + (-1) ** (ell + 1) * (q - 1) * comb(q // 2 - 1, ell)
    return lhs == rhs


def check_divisibility(m: int, k: int) -> bool:
    """Divisibility of the zero-sum counts by design-parameter denominators.

    Part (i), any 3 <= k <= 2^m-4:  (2^m-1)(2^m-2)/(k(k-1)) | N(k,0,GF(2^m)*).
    Part (ii), even such k >= 4: 2^m(2^m-1)(2^m-2)/(k(k-1)(k-2)) | N(k,0,GF(2^m)).
    """
    q = 2 ** m
    if not 3 <= k <= q - 4:
        raise SubsetSumError(f"k = {k} out of range 3..{q - 4} for m = {m}")
    n_units = binary_closed_form(m, k, UNITS).value
    ok = (n_units * k * (k - 1)) % ((q - 1) * (q - 2)) == 0
    if k % 2 == 0 and k >= 4:
        n_full = binary_closed_form(m, k, FULL).value
        ok = ok and (n_full * k * (k - 1) * (k - 2)) % (q * (q - 1) * (q - 2)) == 0
    return ok
