"""Exact rational dense matrices with rank, nullity and kernel bases.

Every cohomology dimension in the package reduces to the two operations
here: rank/nullity and a kernel basis, both computed by plain rational
Gaussian elimination with no pivot tolerance.  Scalars are stdlib
``fractions.Fraction`` values, which already guarantee lowest terms and a
positive denominator.
"""

from __future__ import annotations

from fractions import Fraction

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def vec_zero(n: int) -> list[Fraction]:
    return [ZERO] * n


def vec_basis(n: int, i: int) -> list[Fraction]:
    v = [ZERO] * n
    v[i] = ONE
    return v


def vec_add(u: list[Fraction], v: list[Fraction]) -> list[Fraction]:
    return [a + b for a, b in zip(u, v)]


def vec_sub(u: list[Fraction], v: list[Fraction]) -> list[Fraction]:
    return [a - b for a, b in zip(u, v)]


def vec_scale(c: Fraction, v: list[Fraction]) -> list[Fraction]:
    if not c:
        return [ZERO] * len(v)
    return [c * a for a in v]


def vec_is_zero(v) -> bool:
    return all(not a for a in v)


class Matrix:
    """Dense rows x cols matrix of Fractions, immutable after construction."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: list[list[Fraction]]):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("matrix data shape mismatch")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [vec_basis(n, i) for i in range(n)])

    @classmethod
    def from_rows(cls, data) -> "Matrix":
        data = [[Fraction(x) for x in row] for row in data]
        rows = len(data)
        cols = len(data[0]) if data else 0
        return cls(rows, cols, data)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})"

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      [vec_add(a, b) for a, b in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      [vec_sub(a, b) for a, b in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [[-x for x in r] for r in self.data])

    def scale(self, c: Fraction) -> "Matrix":
        return Matrix(self.rows, self.cols, [vec_scale(Fraction(c), r) for r in self.data])

    def _same_shape(self, other: "Matrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("matrix shape mismatch")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("matrix shapes incompatible for product")
        out = [[ZERO] * other.cols for _ in range(self.rows)]
        for i, row in enumerate(self.data):
            acc = out[i]
            for k, a in enumerate(row):
                if not a:
                    continue
                brow = other.data[k]
                for j, b in enumerate(brow):
                    if b:
                        acc[j] += a * b
        return Matrix(self.rows, other.cols, out)

    def apply(self, v: list[Fraction]) -> list[Fraction]:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        out = [ZERO] * self.rows
        for i, row in enumerate(self.data):
            s = ZERO
            for a, x in zip(row, v):
                if a and x:
                    s += a * x
            out[i] = s
        return out

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def is_zero(self) -> bool:
        return all(vec_is_zero(r) for r in self.data)


def _row_echelon(data: list[list[Fraction]], cols: int, reduced: bool = False):
    """In-place echelon form; returns the list of pivot columns."""
    pivots = []
    r = 0
    nrows = len(data)
    for c in range(cols):
        pivot_row = None
        for i in range(r, nrows):
            if data[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        data[r], data[pivot_row] = data[pivot_row], data[r]
        inv = ONE / data[r][c]
        if inv != ONE:
            data[r] = [x * inv for x in data[r]]
        span = range(nrows) if reduced else range(r + 1, nrows)
        for i in span:
            if i == r:
                continue
            f = data[i][c]
            if f:
                data[i] = [x - f * y for x, y in zip(data[i], data[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rank_nullity(m: Matrix) -> tuple[int, int]:
    """Exact (rank, nullity); rank + nullity == cols always."""
    work = [list(row) for row in m.data]
    pivots = _row_echelon(work, m.cols)
    rank = len(pivots)
    return rank, m.cols - rank


def kernel_basis(m: Matrix) -> list[list[Fraction]]:
    """Basis of the exact null space; length equals the nullity."""
    work = [list(row) for row in m.data]
    pivots = _row_echelon(work, m.cols, reduced=True)
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free_cols:
        v = vec_zero(m.cols)
        v[f] = ONE
        for r, c in enumerate(pivots):
            v[c] = -work[r][f]
        basis.append(v)
    return basis
