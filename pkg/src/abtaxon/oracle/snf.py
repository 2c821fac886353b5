"""Exact integer matrices and Smith normal form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples of Python ints

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry grid does not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = None) -> IntegerMatrix:
        grid = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        return cls(len(grid), cols, grid)

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntegerMatrix(
            self.rows,
            other.cols,
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.entries),
        )

    def diagonal(self) -> tuple:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def is_diagonal(self) -> bool:
        return all(v == 0 for i, r in enumerate(self.entries) for j, v in enumerate(r) if i != j)

    def determinant(self) -> int:
        """Bareiss fraction-free elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        m = [list(r) for r in self.entries]
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class SnfResult:
    u: IntegerMatrix
    s: IntegerMatrix
    v: IntegerMatrix


def _pivot(a, t):
    """Smallest |entry| in the trailing block, first in row-major order."""
    best = None
    for i in range(t, len(a)):
        row = a[i]
        for j in range(t, len(row)):
            x = row[j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
    return best


def smith_normal_form(a: IntegerMatrix) -> SnfResult:
    """Return u, s, v with u @ a @ v == s, u and v unimodular.

    ``s`` is diagonal with nonnegative entries s[0] | s[1] | ...
    """
    m, n = a.rows, a.cols
    U, A, V = _smith([list(r) for r in a.entries], m, n, track=True)
    return SnfResult(
        IntegerMatrix.from_rows(U, m),
        IntegerMatrix.from_rows(A, n),
        IntegerMatrix.from_rows(V, n),
    )


def invariant_factors(rows, ncols: int) -> list:
    """Diagonal of the Smith form only (no transforms), for quotient computations."""
    A = [list(r) for r in rows]
    _, A, _ = _smith(A, len(A), ncols, track=False)
    return [A[i][i] for i in range(min(len(A), ncols))]


def _smith(A, m, n, track):
    U = [[int(i == j) for j in range(m)] for i in range(m)] if track else None
    V = [[int(i == j) for j in range(n)] for i in range(n)] if track else None
    row_mats = (A, U) if track else (A,)
    col_mats = (A, V) if track else (A,)

    def swap_rows(i, k):
        for M in row_mats:
            M[i], M[k] = M[k], M[i]

    def swap_cols(j, k):
        for M in col_mats:
            for r in M:
                r[j], r[k] = r[k], r[j]

    def add_row(dst, src, q):  # row dst += q * row src
        for M in row_mats:
            rd, rs = M[dst], M[src]
            for j in range(len(rd)):
                rd[j] += q * rs[j]

    def add_col(dst, src, q):  # col dst += q * col src
        for M in col_mats:
            for r in M:
                r[dst] += q * r[src]

    for t in range(min(m, n)):
        found = _pivot(A, t)
        if found is None:
            break
        while True:
            _, i, j = found
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            dirty = any(A[i][t] for i in range(t + 1, m)) or any(A[t][j] for j in range(t + 1, n))
            if not dirty:
                bad = next(
                    (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                add_row(t, bad, 1)
            found = _pivot_in_line(A, t)
        if A[t][t] < 0:
            for M in row_mats:
                M[t] = [-x for x in M[t]]
    return U, A, V


def _pivot_in_line(A, t):
    """Smallest nonzero in row t / column t of the trailing block (row-major)."""
    best = None
    for i in range(t, len(A)):
        x = A[i][t]
        if x and (best is None or abs(x) < best[0]):
            best = (abs(x), i, t)
    for j in range(t + 1, len(A[t])):
        x = A[t][j]
        if x and (best is None or abs(x) < best[0]):
            best = (abs(x), t, j)
    return best
