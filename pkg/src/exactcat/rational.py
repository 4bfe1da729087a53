"""Exact dense linear algebra over the rationals.

Matrices are immutable, stored row-major as tuples of ``fractions.Fraction``
entries.  Zero-dimensional matrices (0 x n, n x 0) are legal values; they are
needed to represent maps in and out of the zero object.  No floating point is
used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Scalar = Union[int, str, Fraction]


def _frac(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("matrix entries must be numbers, not bool")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class RatMatrix:
    """Dense matrix of arbitrary-precision rationals."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Iterable[Iterable[Scalar]]):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        table = tuple(tuple(_frac(x) for x in row) for row in data)
        if len(table) != rows or any(len(r) != cols for r in table):
            raise ValueError(f"expected {rows}x{cols} data, got {[len(r) for r in table]}")
        self.rows = rows
        self.cols = cols
        self._data = table

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[Scalar]], cols: Optional[int] = None) -> "RatMatrix":
        rows = len(data)
        if rows == 0 and cols is None:
            cols = 0
        if cols is None:
            cols = len(data[0])
        return cls(rows, cols, data)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, ((0,) * cols,) * rows)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def __getitem__(self, key: tuple) -> Fraction:
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
            isinstance(other, RatMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._data == other._data
        )

    def __hash__(self) -> int:
        return hash(("RatMatrix", self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        return f"RatMatrix({self.rows}x{self.cols}, {[[str(x) for x in r] for r in self._data]})"

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, ((-x for x in r) for r in self._data))

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix addition")
        return RatMatrix(
            self.rows,
            self.cols,
            ((a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + (-other)

    def __mul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = tuple(other.column(j) for j in range(other.cols))
        return RatMatrix(
            self.rows,
            other.cols,
            ((sum(a * b for a, b in zip(r, c)) for c in cols) for r in self._data),
        )

    def scale(self, k: Scalar) -> "RatMatrix":
        k = _frac(k)
        return RatMatrix(self.rows, self.cols, ((k * x for x in r) for r in self._data))

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows, (self.column(j) for j in range(self.cols)))

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return RatMatrix(
            self.rows, self.cols + other.cols, (r + s for r, s in zip(self._data, other._data))
        )

    def vstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch in vstack")
        return RatMatrix(self.rows + other.rows, self.cols, self._data + other._data)

    def take_columns(self, indices: Sequence[int]) -> "RatMatrix":
        return RatMatrix(self.rows, len(indices), (tuple(r[j] for j in indices) for r in self._data))

    def take_rows(self, indices: Sequence[int]) -> "RatMatrix":
        return RatMatrix(len(indices), self.cols, (self._data[i] for i in indices))


def block_diag(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    top = a.hstack(RatMatrix.zero(a.rows, b.cols))
    bottom = RatMatrix.zero(b.rows, a.cols).hstack(b)
    return top.vstack(bottom)


def rref(m: RatMatrix) -> tuple[RatMatrix, tuple[int, ...], RatMatrix]:
    """Reduced row echelon form.

    Returns ``(R, pivots, T)`` where ``R`` is the RREF of ``m``, ``pivots``
    lists the pivot column indices in increasing order, and ``T`` is the
    invertible transform with ``T * m == R`` exactly.
    """
    work = [list(r) for r in m.entries()]
    trans = [list(r) for r in RatMatrix.identity(m.rows).entries()]
    pivots: list[int] = []
    pr = 0
    for pc in range(m.cols):
        pivot_row = None
        for i in range(pr, m.rows):
            if work[i][pc] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != pr:
            work[pr], work[pivot_row] = work[pivot_row], work[pr]
            trans[pr], trans[pivot_row] = trans[pivot_row], trans[pr]
        inv = 1 / work[pr][pc]
        work[pr] = [x * inv for x in work[pr]]
        trans[pr] = [x * inv for x in trans[pr]]
        for i in range(m.rows):
            if i != pr and work[i][pc] != 0:
                factor = work[i][pc]
                work[i] = [x - factor * y for x, y in zip(work[i], work[pr])]
                trans[i] = [x - factor * y for x, y in zip(trans[i], trans[pr])]
        pivots.append(pc)
        pr += 1
        if pr == m.rows:
            break
    return (
        RatMatrix(m.rows, m.cols, work),
        tuple(pivots),
        RatMatrix(m.rows, m.rows, trans),
    )


def rank(m: RatMatrix) -> int:
    return len(rref(m)[1])


def solve_right(a: RatMatrix, b: RatMatrix) -> Optional[tuple[RatMatrix, RatMatrix]]:
    """Solve ``a * X = b`` exactly.

    Returns ``(X0, N)`` with a particular solution ``X0`` and a kernel basis
    ``N`` (columns), or ``None`` if the system is inconsistent.
    """
    if a.rows != b.rows:
        raise ValueError("solve_right: row mismatch between A and B")
    r, pivots, t = rref(a)
    tb = t * b
    nr = len(pivots)
    for i in range(nr, a.rows):
        if any(x != 0 for x in tb.row(i)):
            return None
    x0 = [[Fraction(0)] * b.cols for _ in range(a.cols)]
    for i, pc in enumerate(pivots):
        x0[pc] = list(tb.row(i))
    return RatMatrix(a.cols, b.cols, x0), kernel_basis(a)


def kernel_basis(a: RatMatrix) -> RatMatrix:
    """Basis of the right kernel, one vector per column."""
    r, pivots, _ = rref(a)
    pivot_set = set(pivots)
    free = [j for j in range(a.cols) if j not in pivot_set]
    vecs = []
    for j in free:
        v = [Fraction(0)] * a.cols
        v[j] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -r[i, j]
        vecs.append(v)
    return RatMatrix(a.cols, len(vecs), zip(*vecs) if vecs else [[] for _ in range(a.cols)])


def image_basis(a: RatMatrix) -> RatMatrix:
    """Basis of the column space: the pivot columns of ``a``."""
    _, pivots, _ = rref(a)
    return a.take_columns(pivots)


def complement_columns(a: RatMatrix) -> RatMatrix:
    """Standard basis vectors spanning a complement of the column space."""
    _, pivots, _ = rref(a.transpose())
    pivot_set = set(pivots)
    others = [j for j in range(a.rows) if j not in pivot_set]
    return RatMatrix(
        a.rows, len(others), (tuple(1 if i == j else 0 for j in others) for i in range(a.rows))
    )


def column_space_complement(a: RatMatrix) -> tuple[RatMatrix, RatMatrix]:
    """Split the ambient space along the column space of ``a``.

    Returns ``(basis, proj)`` where ``basis`` is a column basis of ``col(a)``
    and ``proj`` maps the ambient space onto complementary coordinates, so
    ``proj * a == 0`` and ``proj`` is surjective with ``proj`` of rank
    ``a.rows - rank(a)``.
    """
    basis = image_basis(a)
    full = basis.hstack(complement_columns(a))
    inv = invert(full)
    proj = inv.take_rows(range(basis.cols, a.rows))
    return basis, proj


def invert(a: RatMatrix) -> RatMatrix:
    if a.rows != a.cols:
        raise ValueError("only square matrices can be inverted")
    r, pivots, t = rref(a)
    if len(pivots) != a.rows:
        raise ValueError("matrix is singular")
    return t


def canonical_subspace_basis(basis: RatMatrix) -> RatMatrix:
    """Canonical column basis of the span: transposed RREF with zero rows dropped."""
    r, pivots, _ = rref(basis.transpose())
    return r.take_rows(range(len(pivots))).transpose()


def subspace_contains(space: RatMatrix, vectors: RatMatrix) -> bool:
    """Whether every column of ``vectors`` lies in the column span of ``space``."""
    if vectors.cols == 0:
        return True
    return solve_right(space, vectors) is not None


def kron(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Kronecker product, used to linearize constraints of the form P*X*Q = R."""
    out = []
    for i in range(a.rows):
        for k in range(b.rows):
            out.append(tuple(a[i, j] * b[k, l] for j in range(a.cols) for l in range(b.cols)))
    return RatMatrix(a.rows * b.rows, a.cols * b.cols, out)


def vec(m: RatMatrix) -> RatMatrix:
    """Stack columns into a single column vector (column-major vec)."""
    return RatMatrix(m.rows * m.cols, 1, ([m[i, j]] for j in range(m.cols) for i in range(m.rows)))


def unvec(v: RatMatrix, rows: int, cols: int) -> RatMatrix:
    if v.rows != rows * cols or v.cols != 1:
        raise ValueError("unvec: shape mismatch")
    return RatMatrix(rows, cols, ((v[i + j * rows, 0] for j in range(cols)) for i in range(rows)))
