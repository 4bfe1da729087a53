"""Exact dense linear algebra over the integers.

Provides column-style Hermite normal form, Smith normal form with recorded
unimodular transforms, lattice saturation, and an exact integer linear
solver.  Arbitrary-precision ``int`` throughout; matrices stay at desk scale
so the elementary reduction algorithms are fast enough and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .rational import RatMatrix


def _int(x) -> int:
    if isinstance(x, bool):
        raise TypeError("matrix entries must be integers, not bool")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return int(x, 10)
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    raise TypeError(f"cannot interpret {x!r} as an integer")


class IntMatrix:
    """Dense matrix of arbitrary-precision integers."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Iterable[Iterable]):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        table = tuple(tuple(_int(x) for x in row) for row in data)
        if len(table) != rows or any(len(r) != cols for r in table):
            raise ValueError(f"expected {rows}x{cols} data, got {[len(r) for r in table]}")
        self.rows = rows
        self.cols = cols
        self._data = table

    @classmethod
    def from_rows(cls, data: Sequence[Sequence], cols: Optional[int] = None) -> "IntMatrix":
        rows = len(data)
        if rows == 0 and cols is None:
            cols = 0
        if cols is None:
            cols = len(data[0])
        return cls(rows, cols, data)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, ((0,) * cols,) * rows)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def __getitem__(self, key: tuple) -> int:
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def entries(self) -> tuple:
        return self._data

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._data == other._data
        )

    def __hash__(self) -> int:
        return hash(("IntMatrix", self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols}, {[list(r) for r in self._data]})"

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, ((-x for x in r) for r in self._data))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix addition")
        return IntMatrix(
            self.rows,
            self.cols,
            ((a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = tuple(other.column(j) for j in range(other.cols))
        return IntMatrix(
            self.rows,
            other.cols,
            ((sum(a * b for a, b in zip(r, c)) for c in cols) for r in self._data),
        )

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, (self.column(j) for j in range(self.cols)))

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return IntMatrix(
            self.rows, self.cols + other.cols, (r + s for r, s in zip(self._data, other._data))
        )

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch in vstack")
        return IntMatrix(self.rows + other.rows, self.cols, self._data + other._data)

    def take_columns(self, indices: Sequence[int]) -> "IntMatrix":
        return IntMatrix(self.rows, len(indices), (tuple(r[j] for j in indices) for r in self._data))

    def take_rows(self, indices: Sequence[int]) -> "IntMatrix":
        return IntMatrix(len(indices), self.cols, (self._data[i] for i in indices))

    def to_rational(self) -> RatMatrix:
        return RatMatrix(self.rows, self.cols, self._data)


@dataclass(frozen=True)
class SnfDecomposition:
    """Smith normal form ``U * A * V = D`` with unimodular ``U`` and ``V``."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    def diagonal(self) -> tuple:
        return tuple(self.D[i, i] for i in range(min(self.D.rows, self.D.cols)))

    def rank(self) -> int:
        return sum(1 for d in self.diagonal() if d != 0)


def block_diag(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    top = a.hstack(IntMatrix.zero(a.rows, b.cols))
    bottom = IntMatrix.zero(b.rows, a.cols).hstack(b)
    return top.vstack(bottom)


def det(a: IntMatrix) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    if a.rows != a.cols:
        raise ValueError("determinant requires a square matrix")
    n = a.rows
    if n == 0:
        return 1
    m = [list(r) for r in a.entries()]
    sign = 1
    prev = 1
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
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_unimodular(u: IntMatrix) -> bool:
    if u.rows != u.cols:
        raise ValueError("unimodularity is defined for square matrices")
    return det(u) in (1, -1)


def hnf(a: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Column-style Hermite normal form: ``A * U = H`` with unimodular ``U``.

    Pivot entries are positive, entries to the right of a pivot are zero, and
    entries to the left of a pivot (in the pivot's row) are reduced into
    ``[0, pivot)``.  Zero columns trail.
    """
    h = [list(r) for r in a.entries()]
    u = [list(r) for r in IntMatrix.identity(a.cols).entries()]

    def col_addmul(dst: int, src: int, q: int) -> None:
        for i in range(a.rows):
            h[i][dst] += q * h[i][src]
        for i in range(a.cols):
            u[i][dst] += q * u[i][src]

    def col_swap(i: int, j: int) -> None:
        if i == j:
            return
        for r in h:
            r[i], r[j] = r[j], r[i]
        for r in u:
            r[i], r[j] = r[j], r[i]

    def col_negate(j: int) -> None:
        for r in h:
            r[j] = -r[j]
        for r in u:
            r[j] = -r[j]

    pivot_col = 0
    for r in range(a.rows):
        if pivot_col >= a.cols:
            break
        # Euclid on the row entries at columns >= pivot_col.
        while True:
            nonzero = [j for j in range(pivot_col, a.cols) if h[r][j] != 0]
            if not nonzero:
                break
            jmin = min(nonzero, key=lambda j: abs(h[r][j]))
            col_swap(pivot_col, jmin)
            if h[r][pivot_col] < 0:
                col_negate(pivot_col)
            done = True
            for j in range(pivot_col + 1, a.cols):
                if h[r][j] != 0:
                    q = h[r][j] // h[r][pivot_col]
                    col_addmul(j, pivot_col, -q)
                    if h[r][j] != 0:
                        done = False
            if done:
                break
        if h[r][pivot_col] != 0:
            piv = h[r][pivot_col]
            for j in range(pivot_col):
                q = h[r][j] // piv
                if q != 0:
                    col_addmul(j, pivot_col, -q)
            pivot_col += 1
    return IntMatrix(a.rows, a.cols, h), IntMatrix(a.cols, a.cols, u)


def snf(a: IntMatrix) -> SnfDecomposition:
    """Smith normal form by elementary reduction with minimal-pivot selection."""
    d = [list(r) for r in a.entries()]
    u = [list(r) for r in IntMatrix.identity(a.rows).entries()]
    v = [list(r) for r in IntMatrix.identity(a.cols).entries()]
    nr, nc = a.rows, a.cols

    def row_addmul(dst: int, src: int, q: int) -> None:
        d[dst] = [x + q * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def col_addmul(dst: int, src: int, q: int) -> None:
        for i in range(nr):
            d[i][dst] += q * d[i][src]
        for i in range(nc):
            v[i][dst] += q * v[i][src]

    def row_swap(i: int, j: int) -> None:
        if i != j:
            d[i], d[j] = d[j], d[i]
            u[i], u[j] = u[j], u[i]

    def col_swap(i: int, j: int) -> None:
        if i != j:
            for r in d:
                r[i], r[j] = r[j], r[i]
            for r in v:
                r[i], r[j] = r[j], r[i]

    def row_negate(i: int) -> None:
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    for s in range(min(nr, nc)):
        while True:
            best = None
            for i in range(s, nr):
                for j in range(s, nc):
                    if d[i][j] != 0 and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            row_swap(s, best[0])
            col_swap(s, best[1])
            if d[s][s] < 0:
                row_negate(s)
            piv = d[s][s]
            clean = True
            for i in range(s + 1, nr):
                if d[i][s] != 0:
                    row_addmul(i, s, -(d[i][s] // piv))
                    if d[i][s] != 0:
                        clean = False
            for j in range(s + 1, nc):
                if d[s][j] != 0:
                    col_addmul(j, s, -(d[s][j] // piv))
                    if d[s][j] != 0:
                        clean = False
            if not clean:
                continue
            # Divisibility pass: fold a non-divisible entry into the pivot row.
            piv = d[s][s]
            offender = None
            for i in range(s + 1, nr):
                for j in range(s + 1, nc):
                    if d[i][j] % piv != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_addmul(s, offender, 1)
    return SnfDecomposition(
        D=IntMatrix(nr, nc, d), U=IntMatrix(nr, nr, u), V=IntMatrix(nc, nc, v)
    )


def inverse_unimodular(u: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular integer matrix."""
    from .rational import invert

    inv = invert(u.to_rational())
    if any(x.denominator != 1 for r in inv.entries() for x in r):
        raise ValueError("matrix is not unimodular")
    return IntMatrix(u.rows, u.cols, ((x.numerator for x in r) for r in inv.entries()))


def solve_right(a: IntMatrix, b: IntMatrix) -> Optional[tuple[IntMatrix, IntMatrix]]:
    """Solve ``a * X = b`` over the integers via the Smith form.

    Returns ``(X0, N)`` with an integral particular solution and a basis of
    the integer kernel, or ``None`` if no integral solution exists.
    """
    if a.rows != b.rows:
        raise ValueError("solve_right: row mismatch between A and B")
    dec = snf(a)
    r = dec.rank()
    y = dec.U * b
    coeffs = []
    for i in range(a.cols):
        if i < r:
            di = dec.D[i, i]
            row = []
            for k in range(b.cols):
                q, rem = divmod(y[i, k], di)
                if rem != 0:
                    return None
                row.append(q)
            coeffs.append(row)
        else:
            coeffs.append([0] * b.cols)
    for i in range(r, a.rows):
        if any(x != 0 for x in y.row(i)):
            return None
    x0 = dec.V * IntMatrix(a.cols, b.cols, coeffs)
    return x0, kernel_basis(a)


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """Basis of the integer kernel; spans a saturated sublattice by construction."""
    h, u = hnf(a)
    zero_cols = [j for j in range(a.cols) if all(h[i, j] == 0 for i in range(a.rows))]
    return u.take_columns(zero_cols)


def column_content(a: IntMatrix, j: int) -> int:
    g = 0
    for i in range(a.rows):
        g = gcd(g, a[i, j])
    return g


def saturate(l: IntMatrix, ambient_rank: int) -> IntMatrix:
    """Saturation of the column span of ``l`` inside ``Z^ambient_rank``.

    The result is the canonical (column Hermite form) basis of the smallest
    pure sublattice containing the span.  Columns of ``l`` must be linearly
    independent over the rationals.
    """
    if l.rows != ambient_rank:
        raise ValueError("ambient rank does not match the number of rows")
    dec = snf(l)
    r = dec.rank()
    if r != l.cols:
        raise ValueError("saturate requires rationally independent columns")
    uinv = inverse_unimodular(dec.U)
    basis = uinv.take_columns(range(r))
    h, _ = hnf(basis)
    return h.take_columns(range(r))


def saturation_projection(a: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Split ``Z^rows`` along the saturation of the column span of ``a``.

    Returns ``(basis, proj)``: a basis of the saturation and a surjection
    ``proj`` onto the complementary coordinates with ``proj * a == 0``.  The
    pair is the integer analogue of a complement projection; it presents the
    torsion-free quotient by the image of ``a``.
    """
    dec = snf(a)
    r = dec.rank()
    uinv = inverse_unimodular(dec.U)
    basis = uinv.take_columns(range(r))
    proj = dec.U.take_rows(range(r, a.rows))
    return basis, proj
