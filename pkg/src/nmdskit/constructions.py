"""Builders for the four generator-matrix families g1..g4.

Columns are ordered canonically: the nonzero field elements in primitive-
power order first, then each family's extra columns in a fixed order, so a
serialized matrix is reproducible and comparable against worked examples.

Every family also comes with the closed-form prediction for its number of
minimum-weight codewords and the claimed parameter ranges, so the builders
can be cross-checked against exhaustive enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .code import MDS, NMDS, LinearCode
from .errors import NmdskitError
from .gf import FieldSpec
from .linalg import Matrix, matrix_from_rows

FAMILIES = ("g1", "g2", "g3", "g4")


class ConstructionError(NmdskitError):
    pass


@dataclass(frozen=True)
class ConstructionReport:
    family: str
    q: int
    k: int
    n: int
    predicted_class: str  # "nmds" | "mds"
    predicted_min_weight_count: int
    needs_review: bool = False  # dimension at the edge of the stated range


def _check_family(family: str) -> str:
    if family not in FAMILIES:
        raise ConstructionError(f"unknown family {family!r}")
    return family


def family_length(family: str, q: int) -> int:
    return {"g1": q + 1, "g2": q + 2, "g3": q - 1, "g4": q}[_check_family(family)]


def char_of(q: int) -> int:
    """The characteristic of GF(q); errors unless q is a prime power."""
    if q < 2:
        raise ConstructionError(f"q = {q} is not a prime power")
    p = 2
    while q % p != 0:
        p += 1
    v = q
    while v % p == 0:
        v //= p
    if v != 1:
        raise ConstructionError(f"q = {q} is not a prime power")
    return p


def valid_k_range(family: str, q: int) -> tuple[int, int]:
    """Inclusive dimension range for which the NMDS claim is stated."""
    _check_family(family)
    p = char_of(q)
    if family == "g1":
        return (4, q - 3) if p == 2 else (3, q - 2)
    if family == "g2":
        return (4, q - 2) if p == 2 else (3, q)
    if p != 2:
        raise ConstructionError(f"family {family} requires characteristic 2")
    return (3, q - 4) if family == "g3" else (3, q - 3)


def is_mds_exception(family: str, q: int, k: int) -> bool:
    """Dimensions where the construction collapses to an MDS code."""
    _check_family(family)
    p = char_of(q)
    if family == "g1":
        if p == 2:
            return k in (3, q - 2, q - 1)
        return k in (2, q - 1)
    if family == "g2":
        return p == 2 and k in (3, q - 1)
    return False


def build_generator(f: FieldSpec, family: str, k: int) -> Matrix:
    """The family's generator matrix over the canonical unit ordering.

    Dimensions slightly outside the NMDS range are accepted so the MDS
    exception cases can be built and tested.
    """
    _check_family(family)
    q = f.q
    n = family_length(family, q)
    if family in ("g3", "g4") and f.p != 2:
        raise ConstructionError(f"family {family} requires characteristic 2")
    if not 2 <= k <= min(n - 1, q):
        raise ConstructionError(f"k = {k} out of buildable range for {family}, q = {q}")
    lo, hi = valid_k_range(family, q)
    if not (lo <= k <= hi or is_mds_exception(family, q, k)):
        raise ConstructionError(
            f"k = {k} is outside [{lo}, {hi}] for {family} over GF({q}) "
            "and is not an MDS exception case")
    units = f.units()
    rows: list[list[int]] = []
    if family in ("g1", "g2"):
        # rows of descending powers k-1 .. 1, 0; extra unit columns on rows 1, 2
        for i in range(k):
            power = k - 1 - i
            row = [f.pow(u, power) for u in units]
            if family == "g2":
                row.append(1 if power == 0 else 0)  # column hitting the all-ones row
            row.append(1 if i == 0 else 0)
            row.append(1 if i == 1 else 0)
            rows.append(row)
    else:
        # rows of ascending powers 0 .. k-2, then k
        powers = list(range(k - 1)) + [k]
        for power in powers:
            row = [f.pow(u, power) for u in units]
            if family == "g4":
                row.append(1 if power == 0 else 0)
            rows.append(row)
    M = matrix_from_rows(f, rows)
    assert (M.rows, M.cols) == (k, n)
    return M


def build_code(f: FieldSpec, family: str, k: int) -> LinearCode:
    return LinearCode(build_generator(f, family, k), family=family)


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ConstructionError(f"{what} evaluated to non-integer {x}")
    return int(x)


def predicted_min_weight_count(family: str, q: int, k: int) -> int:
    """Closed-form A_{n-k} for the family; equals (q-1) N(., 0, .)."""
    _check_family(family)
    p = char_of(q)
    if family == "g1":
        j = (k - 1) // p
        val = Fraction(q - 1, q) * comb(q - 1, k - 1)
        val += (-1) ** (k - 1 + j) * Fraction((q - 1) ** 2, q) * comb(q // p - 1, j)
    elif family == "g2":
        val = Fraction(q - 1, q) * comb(q, k - 1)
        if (k - 1) % p == 0:
            j = (k - 1) // p
            val += (-1) ** ((k - 1) * (p + 1) // p) * Fraction((q - 1) ** 2, q) * comb(q // p, j)
    elif family == "g3":
        if p != 2:
            raise ConstructionError("family g3 requires characteristic 2")
        j = k // 2
        val = Fraction((q - 1) ** 2, q) * (
            Fraction(comb(q - 2, k - 1), k) + (-1) ** (k + j) * comb(q // 2 - 1, j))
    else:
        if p != 2:
            raise ConstructionError("family g4 requires characteristic 2")
        if k % 2 == 1:
            val = Fraction(q - 1, q) * comb(q, k)
        else:
            val = Fraction((q - 1) ** 2, q) * (
                Fraction(q * comb(q - 2, k - 2), k * (k - 1))
                + (-1) ** (3 * k // 2) * comb(q // 2, k // 2))
    count = _as_int(val, f"predicted minimum-weight count for {family}")
    if count < 0:
        raise ConstructionError("negative predicted count")
    return count


def construction_report(f: FieldSpec, family: str, k: int) -> ConstructionReport:
    q, p = f.q, f.p
    n = family_length(family, q)
    lo, hi = valid_k_range(family, q)
    if is_mds_exception(family, q, k):
        predicted_class = MDS
    elif lo <= k <= hi:
        predicted_class = NMDS
    else:
        raise ConstructionError(
            f"no parameter claim for {family} with q = {q}, k = {k}")
    # the stated g2 range reaches k = q for odd characteristic; flag the edge
    needs_review = family == "g2" and p != 2 and k in (q - 1, q)
    return ConstructionReport(
        family=family, q=q, k=k, n=n,
        predicted_class=predicted_class,
        predicted_min_weight_count=predicted_min_weight_count(family, q, k),
        needs_review=needs_review)
