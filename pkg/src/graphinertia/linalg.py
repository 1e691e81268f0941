"""Dense exact matrices over Python ints and Fractions.

Everything here is exact: characteristic polynomials come from the
Faddeev-LeVerrier recurrence (whose divisions are provably integral),
determinants from fraction-free Bareiss elimination, and inertia of a
symmetric matrix from rational symmetric congruence, which Sylvester's
law makes sign-preserving.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .polynomials import IntPoly

Scalar = Union[int, Fraction]


class Matrix:
    """Immutable dense matrix with int or Fraction entries."""

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, rows: Iterable[Sequence[Scalar]]):
        data = tuple(tuple(row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("ragged rows")
        else:
            width = 0
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", width if data else 0)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def all_ones(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[1] * ncols for _ in range(nrows)])

    @classmethod
    def block(cls, grid: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble a matrix from a grid of conforming blocks."""
        rows: list[list[Scalar]] = []
        for band in grid:
            height = band[0].nrows
            if any(blk.nrows != height for blk in band):
                raise ValueError("block heights disagree within a band")
            for i in range(height):
                row: list[Scalar] = []
                for blk in band:
                    row.extend(blk.data[i])
                rows.append(row)
        return cls(rows)

    # -- access -----------------------------------------------------------

    def __getitem__(self, key: tuple[int, int]) -> Scalar:
        i, j = key
        return self.data[i][j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.data[i]

    def col(self, j: int) -> tuple[Scalar, ...]:
        return tuple(row[j] for row in self.data)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        d = self.data
        return all(d[i][j] == d[j][i] for i in range(self.nrows) for j in range(i))

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:
        return f"Matrix({[list(r) for r in self.data]!r})"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("dimension mismatch in addition")
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("dimension mismatch in subtraction")
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.data])

    def scale(self, c: Scalar) -> "Matrix":
        return Matrix([[c * a for a in row] for row in self.data])

    def __mul__(self, c: Scalar) -> "Matrix":
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(
                f"dimension mismatch in product: {self.nrows}x{self.ncols} @ "
                f"{other.nrows}x{other.ncols}"
            )
        bt = other.transpose().data
        return Matrix(
            [[_dot(ra, cb) for cb in bt] for ra in self.data]
        )

    def matvec(self, v: Sequence[Scalar]) -> tuple[Scalar, ...]:
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch in matrix-vector product")
        return tuple(_dot(row, v) for row in self.data)

    def transpose(self) -> "Matrix":
        return Matrix(
            [[self.data[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        )

    def trace(self) -> Scalar:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum(self.data[i][i] for i in range(self.nrows))

    def to_fractions(self) -> "Matrix":
        return Matrix([[Fraction(a) for a in row] for row in self.data])

    def to_json(self) -> list[list[str]]:
        """Rows of decimal strings (entries may exceed 64-bit range)."""
        return [[str(a) for a in row] for row in self.data]


def _dot(a: Sequence[Scalar], b: Sequence[Scalar]) -> Scalar:
    s: Scalar = 0
    for x, y in zip(a, b):
        if x:
            s += x * y
    return s


@dataclass(frozen=True)
class Inertia:
    """Signs of the spectrum of a symmetric matrix: (n+, n0, n-)."""

    n_plus: int
    n_zero: int
    n_minus: int

    @property
    def rank(self) -> int:
        return self.n_plus + self.n_minus

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_zero, self.n_minus)

    def to_json(self) -> dict[str, str]:
        return {
            "n_plus": str(self.n_plus),
            "n_zero": str(self.n_zero),
            "n_minus": str(self.n_minus),
        }


def charpoly(m: Matrix) -> IntPoly:
    """det(xI - m) for an integer matrix, by Faddeev-LeVerrier.

    Monic of degree n; every division in the recurrence is exact over
    the integers. Cost grows steeply past n of a few hundred; intended
    sizes are n <= ~150.
    """
    if not m.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.nrows
    for row in m.data:
        for a in row:
            if not isinstance(a, int):
                raise TypeError("charpoly requires integer entries")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    a = [list(row) for row in m.data]
    work = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    rng = range(n)
    for k in range(1, n + 1):
        prod = []
        for i in rng:
            ai = a[i]
            prod.append(
                [sum(ai[t] * work[t][j] for t in rng if ai[t]) for j in rng]
            )
        tr = sum(prod[i][i] for i in rng)
        c, rem = divmod(-tr, k)
        if rem:
            raise ArithmeticError("inexact division in Faddeev-LeVerrier")
        coeffs[n - k] = c
        for i in rng:
            prod[i][i] += c
        work = prod
    return IntPoly(coeffs)


def det(m: Matrix) -> int:
    """Exact determinant of an integer matrix by Bareiss elimination."""
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return 1
    a = [list(row) for row in m.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _row_echelon(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals; returns (rref, pivot cols)."""
    a = [[Fraction(x) for x in row] for row in m.data]
    nrows, ncols = m.nrows, m.ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if a[i][c]), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def rank(m: Matrix) -> int:
    """Exact rank over the rationals."""
    return len(_row_echelon(m)[1])


def kernel_basis(m: Matrix) -> tuple[tuple[int, ...], ...]:
    """Integer basis of the right kernel (denominators cleared per vector)."""
    rref, pivots = _row_echelon(m)
    ncols = m.ncols
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -rref[r][f]
        lcm = 1
        for x in v:
            lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
        basis.append(tuple(int(x * lcm) for x in v))
    return tuple(basis)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def congruence_inertia(m: Matrix) -> Inertia:
    """Inertia of a symmetric matrix by exact symmetric congruence.

    Pivots on a nonzero diagonal entry when one exists; when the whole
    remaining diagonal is zero, a nonzero off-diagonal entry m[i][j]
    gives a 2x2 block [[0, a], [a, 0]], which contributes one positive
    and one negative eigenvalue. A remaining zero block is all nullity.
    """
    if not m.is_symmetric():
        raise ValueError("congruence inertia requires a symmetric matrix")
    a = [[Fraction(x) for x in row] for row in m.data]
    n = m.nrows
    live = list(range(n))
    n_plus = n_minus = 0
    while live:
        pivot = next((i for i in live if a[i][i]), None)
        if pivot is not None:
            d = a[pivot][pivot]
            if d > 0:
                n_plus += 1
            else:
                n_minus += 1
            live.remove(pivot)
            col = {u: a[u][pivot] for u in live}
            for u in live:
                cu = col[u]
                if not cu:
                    continue
                f = cu / d
                au = a[u]
                for v in live:
                    if col[v]:
                        au[v] -= f * col[v]
            continue
        off = None
        for i in live:
            for j in live:
                if j > i and a[i][j]:
                    off = (i, j)
                    break
            if off:
                break
        if off is None:
            break  # remaining block is zero: contributes nullity only
        i, j = off
        piv = a[i][j]
        n_plus += 1
        n_minus += 1
        live.remove(i)
        live.remove(j)
        ci = {u: a[u][i] for u in live}
        cj = {u: a[u][j] for u in live}
        for u in live:
            pu, qu = ci[u], cj[u]
            if not pu and not qu:
                continue
            au = a[u]
            for v in live:
                s = pu * cj[v] + qu * ci[v]
                if s:
                    au[v] -= s / piv
    return Inertia(n_plus=n_plus, n_zero=n - n_plus - n_minus, n_minus=n_minus)
