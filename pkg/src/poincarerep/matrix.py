"""Dense-semantics exact matrices over RadicalScalar entries.

Entries are held sparsely (zeros dropped) so products of the very sparse
spin matrices stay cheap, but the interface is an ordinary rows x cols
matrix and serialization emits the full row-major grid.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .radical import ZERO, RadicalScalar, RationalLike, _coerce


class Matrix:
    __slots__ = ("rows", "cols", "_rows")

    def __init__(self, rows: int, cols: int):
        if rows <= 0 or cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        self.rows = rows
        self.cols = cols
        self._rows: dict[int, dict[int, RadicalScalar]] = {}

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        return cls(rows, rows if cols is None else cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        m = cls(n, n)
        one = RadicalScalar.from_rational(1)
        for i in range(n):
            m.set(i, i, one)
        return m

    @classmethod
    def from_entries(
        cls, rows: int, cols: int, entries: dict[tuple[int, int], RadicalScalar]
    ) -> "Matrix":
        m = cls(rows, cols)
        for (i, j), v in entries.items():
            m.set(i, j, v)
        return m

    # -- element access -------------------------------------------------

    def get(self, i: int, j: int) -> RadicalScalar:
        self._check(i, j)
        return self._rows.get(i, {}).get(j, ZERO)

    def set(self, i: int, j: int, value: RadicalScalar | RationalLike) -> None:
        self._check(i, j)
        value = _coerce(value)
        row = self._rows.setdefault(i, {})
        if value.is_zero():
            row.pop(j, None)
            if not row:
                del self._rows[i]
        else:
            row[j] = value

    def add_to(self, i: int, j: int, value: RadicalScalar) -> None:
        self.set(i, j, self.get(i, j) + value)

    def _check(self, i: int, j: int) -> None:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i},{j}) outside {self.rows}x{self.cols} matrix")

    def _same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __getitem__(self, ij: tuple[int, int]) -> RadicalScalar:
        return self.get(*ij)

    def nonzero_items(self) -> Iterator[tuple[int, int, RadicalScalar]]:
        for i in sorted(self._rows):
            for j in sorted(self._rows[i]):
                yield i, j, self._rows[i][j]

    def nnz(self) -> int:
        return sum(len(r) for r in self._rows.values())

    # -- algebra ----------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        out = Matrix(self.rows, self.cols)
        out._rows = {i: dict(r) for i, r in self._rows.items()}
        for i, row in other._rows.items():
            orow = out._rows.setdefault(i, {})
            for j, v in row.items():
                s = orow.get(j, ZERO) + v
                if s.is_zero():
                    orow.pop(j, None)
                else:
                    orow[j] = s
            if not orow:
                del out._rows[i]
        return out

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        out = Matrix(self.rows, self.cols)
        out._rows = {i: {j: -v for j, v in r.items()} for i, r in self._rows.items()}
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = Matrix(self.rows, other.cols)
        for i, arow in self._rows.items():
            acc: dict[int, RadicalScalar] = {}
            for k, aval in arow.items():
                brow = other._rows.get(k)
                if not brow:
                    continue
                for j, bval in brow.items():
                    prev = acc.get(j)
                    prod = aval * bval
                    acc[j] = prod if prev is None else prev + prod
            acc = {j: v for j, v in acc.items() if not v.is_zero()}
            if acc:
                out._rows[i] = acc
        return out

    def scale(self, factor: RadicalScalar | RationalLike) -> "Matrix":
        factor = _coerce(factor)
        if factor.is_zero():
            return Matrix(self.rows, self.cols)
        out = Matrix(self.rows, self.cols)
        out._rows = {
            i: {j: v * factor for j, v in r.items()} for i, r in self._rows.items()
        }
        return out

    def times_i(self) -> "Matrix":
        out = Matrix(self.rows, self.cols)
        out._rows = {
            i: {j: v.times_i() for j, v in r.items()} for i, r in self._rows.items()
        }
        return out

    def conjugate_transpose(self) -> "Matrix":
        out = Matrix(self.cols, self.rows)
        for i, row in self._rows.items():
            for j, v in row.items():
                out.set(j, i, v.conjugate())
        return out

    def is_zero(self) -> bool:
        return not self._rows

    def first_nonzero(self) -> tuple[int, int, RadicalScalar] | None:
        for item in self.nonzero_items():
            return item
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self._rows == other._rows
        )

    def __hash__(self):
        raise TypeError("Matrix is not hashable")

    # -- block helpers ------------------------------------------------------

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        out = Matrix(r1 - r0, c1 - c0)
        for i, row in self._rows.items():
            if not (r0 <= i < r1):
                continue
            for j, v in row.items():
                if c0 <= j < c1:
                    out.set(i - r0, j - c0, v)
        return out

    def paste(self, other: "Matrix", r0: int, c0: int) -> None:
        for i, j, v in other.nonzero_items():
            self.set(r0 + i, c0 + j, v)

    # -- export ---------------------------------------------------------------

    def to_lists(self) -> list[list[RadicalScalar]]:
        return [[self.get(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def to_numpy(self) -> np.ndarray:
        arr = np.zeros((self.rows, self.cols), dtype=complex)
        for i, j, v in self.nonzero_items():
            arr[i, j] = v.to_complex()
        return arr

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, nnz={self.nnz()})"

    def __str__(self) -> str:
        cells = [[str(self.get(i, j)) for j in range(self.cols)] for i in range(self.rows)]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product with row-major (outer a, inner b) index order."""
    out = Matrix(a.rows * b.rows, a.cols * b.cols)
    for i, j, av in a.nonzero_items():
        for k, l, bv in b.nonzero_items():
            out.set(i * b.rows + k, j * b.cols + l, av * bv)
    return out


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    out = Matrix(a.rows + b.rows, a.cols + b.cols)
    out.paste(a, 0, 0)
    out.paste(b, a.rows, a.cols)
    return out


def commutator(m: Matrix, n: Matrix) -> Matrix:
    """M @ N - N @ M for square matrices of equal dimension."""
    if m.rows != m.cols or n.rows != n.cols or m.rows != n.rows:
        raise ValueError("commutator needs square matrices of equal dimension")
    return (m @ n) - (n @ m)


def anticommutator(m: Matrix, n: Matrix) -> Matrix:
    if m.rows != m.cols or n.rows != n.cols or m.rows != n.rows:
        raise ValueError("anticommutator needs square matrices of equal dimension")
    return (m @ n) + (n @ m)


def scalar_diag(n: int, value: RadicalScalar) -> Matrix:
    out = Matrix(n, n)
    for i in range(n):
        out.set(i, i, value)
    return out
