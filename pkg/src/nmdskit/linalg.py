"""Dense exact linear algebra over GF(q).

Everything works on immutable :class:`Matrix` values and is exact: the
zero tests that drive rank / kernel decisions never involve tolerances.
Also provides the omitted-row Vandermonde determinant (product of pairwise
differences times an elementary symmetric polynomial), with an explicit
matrix construction kept around as the independent cross-check path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NmdskitError
from .gf import FieldSpec


class MatrixError(NmdskitError):
    pass


@dataclass(frozen=True)
class Matrix:
    field: FieldSpec
    rows: int
    cols: int
    entries: tuple[int, ...]  # row-major

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise MatrixError("entry count does not match rows*cols")
        for e in self.entries:
            self.field.check(e)

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        ent = tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows))
        return Matrix(self.field, self.cols, self.rows, ent)

    def submatrix_columns(self, cols: list[int]) -> "Matrix":
        ent = tuple(self.at(i, j) for i in range(self.rows) for j in cols)
        return Matrix(self.field, self.rows, len(cols), ent)

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "rows": self.rows,
            "cols": self.cols,
            "entries": [list(self.row(i)) for i in range(self.rows)],
        }


def matrix_from_rows(field: FieldSpec, rows: list[list[int]]) -> Matrix:
    r = len(rows)
    c = len(rows[0]) if rows else 0
    if any(len(row) != c for row in rows):
        raise MatrixError("ragged rows")
    return Matrix(field, r, c, tuple(x for row in rows for x in row))


def matrix_from_json(obj: dict) -> Matrix:
    from .gf import field_from_json

    f = field_from_json(obj["field"])
    return matrix_from_rows(f, [list(r) for r in obj["entries"]])


def _row_echelon(f: FieldSpec, rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = f.inv(rows[r][c])
        if inv != 1:
            rows[r] = [f.mul(inv, x) for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(M: Matrix) -> int:
    _, pivots = _row_echelon(M.field, M.row_lists())
    return len(pivots)


def determinant(M: Matrix) -> int:
    if M.rows != M.cols:
        raise MatrixError("determinant of a non-square matrix")
    f = M.field
    rows = M.row_lists()
    n = M.rows
    det = 1
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = f.neg(det)
        det = f.mul(det, rows[c][c])
        inv = f.inv(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                factor = f.mul(rows[i][c], inv)
                rows[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(rows[i], rows[c])]
    return det


def null_space(M: Matrix) -> list[tuple[int, ...]]:
    """Basis of the right kernel; empty iff rank == cols."""
    f = M.field
    rows, pivots = _row_echelon(f, M.row_lists())
    free = [c for c in range(M.cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * M.cols
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = f.neg(rows[r][fc])
        basis.append(tuple(vec))
    return basis


def elementary_symmetric(f: FieldSpec, xs: list[int], r: int) -> int:
    """e_r(xs) via the standard one-element-at-a-time product recurrence."""
    if not 0 <= r <= len(xs):
        raise MatrixError(f"r = {r} out of range for {len(xs)} values")
    e = [1] + [0] * r
    for x in xs:
        for j in range(r, 0, -1):
            e[j] = f.add(e[j], f.mul(e[j - 1], x))
    return e[r]


def power_matrix_with_omitted_row(f: FieldSpec, xs: list[int], i: int) -> Matrix:
    """k x k matrix whose rows are xs**d for d = 0..k with degree i omitted."""
    k = len(xs)
    if not 0 <= i <= k:
        raise MatrixError(f"omitted degree {i} out of range 0..{k}")
    degrees = [d for d in range(k + 1) if d != i]
    return matrix_from_rows(f, [[f.pow(x, d) for x in xs] for d in degrees])


def omitted_row_vandermonde_det(f: FieldSpec, xs: list[int], i: int) -> int:
    """prod_{a<b}(x_b - x_a) * e_{k-i}(xs) for pairwise distinct xs."""
    k = len(xs)
    if len(set(xs)) != k:
        raise MatrixError("xs must be pairwise distinct")
    if not 0 <= i <= k:
        raise MatrixError(f"omitted degree {i} out of range 0..{k}")
    prod = 1
    for a in range(k):
        for b in range(a + 1, k):
            prod = f.mul(prod, f.sub(xs[b], xs[a]))
    return f.mul(prod, elementary_symmetric(f, xs, k - i))
