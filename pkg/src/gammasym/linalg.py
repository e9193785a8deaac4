"""
Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`; matrices are immutable grids of
them. Everything here is exact, nothing is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]


def to_rational(x) -> Fraction:
    """Coerce ints, Fractions and "num/den" strings to a Fraction.

    Floats are refused: they would smuggle rounding into exact code.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError(f"refusing float {x!r}; pass an int, Fraction or 'num/den' string")
    # numbers.Rational (e.g. gmpy2.mpq, sympy.Rational) expose numerator/denominator
    num, den = getattr(x, "numerator", None), getattr(x, "denominator", None)
    if num is None or den is None:
        raise TypeError(f"cannot interpret {x!r} as a rational")
    return Fraction(int(num), int(den))


def vec(*entries) -> Vector:
    if len(entries) == 1 and not isinstance(entries[0], (int, Fraction, str)):
        entries = tuple(entries[0])
    return tuple(to_rational(e) for e in entries)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if k == i else 0) for k in range(n))


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in v)


def vadd(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vscale(c, v: Sequence[Fraction]) -> Vector:
    c = to_rational(c)
    return tuple(c * a for a in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError("length mismatch")
    total = Fraction(0)
    for a, b in zip(u, v):
        if a and b:  # most entries here are zero
            total += a * b
    return total


def lincomb(coeffs: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]], n: int) -> Vector:
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors, strict=True):
        if c:
            for k, x in enumerate(v):
                out[k] += c * x
    return tuple(out)


class Matrix:
    """Immutable dense matrix of Fractions.

    >>> m = Matrix([[1, 2], [3, 4]])
    >>> (m @ Matrix.identity(2)) == m
    True
    >>> m @ (1, 0)
    (Fraction(1, 1), Fraction(3, 1))
    """

    __slots__ = ("_rows", "_shape")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(to_rational(x) for x in r) for r in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("ragged rows")
        else:
            width = ncols or 0
        if ncols is not None and data and width != ncols:
            raise ValueError(f"expected {ncols} columns, got {width}")
        self._rows = data
        self._shape = (len(data), width)

    @classmethod
    def _raw(cls, rows: tuple, ncols: int) -> Matrix:
        # rows already normalized to tuples of Fraction
        m = cls.__new__(cls)
        m._rows = rows
        m._shape = (len(rows), ncols)
        return m

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls._raw(tuple(unit_vector(n, i) for i in range(n)), n)

    @classmethod
    def zeros(cls, r: int, c: int) -> Matrix:
        return cls._raw(tuple(zero_vector(c) for _ in range(r)), c)

    @classmethod
    def diag(cls, *entries) -> Matrix:
        if len(entries) == 1 and not isinstance(entries[0], (int, Fraction, str)):
            entries = tuple(entries[0])
        d = [to_rational(e) for e in entries]
        n = len(d)
        return cls._raw(
            tuple(tuple(d[i] if i == j else Fraction(0) for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> Matrix:
        cols = [vec(c) for c in columns]
        if not cols:
            return cls.zeros(nrows or 0, 0)
        return cls(zip(*cols)) if cols[0] else cls.zeros(0, len(cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self._shape

    @property
    def nrows(self) -> int:
        return self._shape[0]

    @property
    def ncols(self) -> int:
        return self._shape[1]

    @property
    def rows(self) -> tuple[Vector, ...]:
        return self._rows

    @property
    def columns(self) -> tuple[Vector, ...]:
        return tuple(zip(*self._rows)) if self._rows else tuple(() for _ in range(self.ncols))

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._shape == other._shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._shape, self._rows))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._rows)
        return f"Matrix([{body}])"

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    @property
    def T(self) -> Matrix:
        return Matrix._raw(self.columns, self.nrows)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix._raw(tuple(vadd(a, b) for a, b in zip(self._rows, other._rows)), self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix._raw(tuple(vsub(a, b) for a, b in zip(self._rows, other._rows)), self.ncols)

    def __neg__(self) -> Matrix:
        return self.scale(-1)

    def scale(self, c) -> Matrix:
        c = to_rational(c)
        return Matrix._raw(tuple(tuple(c * x for x in r) for r in self._rows), self.ncols)

    def __mul__(self, c) -> Matrix:
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns
            return Matrix._raw(
                tuple(tuple(dot(r, c) for c in cols) for r in self._rows), other.ncols
            )
        v = vec(other)
        if len(v) != self.ncols:
            raise ValueError(f"cannot apply {self.shape} matrix to length-{len(v)} vector")
        return tuple(dot(r, v) for r in self._rows)

    def __pow__(self, k: int) -> Matrix:
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            return self.inverse() ** (-k)
        out, base = Matrix.identity(self.nrows), self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._rows for x in r)

    def is_diagonal(self) -> bool:
        return self.is_square() and all(
            x == 0 for i, r in enumerate(self._rows) for j, x in enumerate(r) if i != j
        )

    def diagonal(self) -> Vector:
        return tuple(self._rows[i][i] for i in range(min(self.shape)))

    def rank(self) -> int:
        return len(_rref_with_pivots(self._rows, self.ncols)[1])

    def det(self) -> Fraction:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        a = [list(r) for r in self._rows]
        n, sign, acc = self.nrows, 1, Fraction(1)
        for k in range(n):
            p = next((i for i in range(k, n) if a[i][k] != 0), None)
            if p is None:
                return Fraction(0)
            if p != k:
                a[k], a[p] = a[p], a[k]
                sign = -sign
            acc *= a[k][k]
            for i in range(k + 1, n):
                f = a[i][k] / a[k][k]
                if f:
                    a[i] = [x - f * y for x, y in zip(a[i], a[k])]
        return sign * acc

    def inverse(self) -> Matrix:
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        aug = [list(r) + list(unit_vector(n, i)) for i, r in enumerate(self._rows)]
        red, piv = _rref_with_pivots(aug, 2 * n)
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix._raw(tuple(tuple(r[n:]) for r in red[:n]), n)

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.nrows

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return Matrix._raw(tuple(tuple(self._rows[i][j] for j in cols) for i in rows), len(cols))

    def vstack(self, other: Matrix) -> Matrix:
        if self.ncols != other.ncols and self.nrows and other.nrows:
            raise ValueError("column count mismatch")
        return Matrix._raw(self._rows + other._rows, max(self.ncols, other.ncols))

    def hstack(self, other: Matrix) -> Matrix:
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return Matrix._raw(
            tuple(a + b for a, b in zip(self._rows, other._rows)), self.ncols + other.ncols
        )


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def _rref_with_pivots(rows: Sequence[Sequence[Fraction]], ncols: int):
    a = [list(r) for r in rows]
    nr = len(a)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        if inv != 1:
            a[r] = [x * inv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rref(m: Matrix) -> Matrix:
    """Reduced row-echelon form; zero rows are kept at the bottom."""
    red, _ = _rref_with_pivots(m.rows, m.ncols)
    return Matrix._raw(tuple(tuple(r) for r in red), m.ncols)


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n held by its canonical (reduced echelon) basis.

    Two Subspaces compare equal exactly when they are the same subspace.
    """

    ambient_dim: int
    basis: Matrix

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
        rows = [vec(v) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise ValueError(f"vector of length {len(v)} in Q^{ambient_dim}")
        red, piv = _rref_with_pivots(rows, ambient_dim)
        return cls(ambient_dim, Matrix._raw(tuple(tuple(r) for r in red[: len(piv)]), ambient_dim))

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n, Matrix.zeros(0, n))

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(n, Matrix.identity(n))

    @classmethod
    def coordinate(cls, indices: Iterable[int], n: int) -> Subspace:
        """Span of the standard basis vectors e_i, i in ``indices`` (0-based)."""
        return cls.span([unit_vector(n, i) for i in indices], n)

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def vectors(self) -> tuple[Vector, ...]:
        return self.basis.rows

    def is_zero(self) -> bool:
        return self.dim == 0

    def contains(self, v: Sequence) -> bool:
        v = vec(v)
        if self.dim == 0:
            return is_zero_vector(v)
        return self.basis.vstack(Matrix([v])).rank() == self.dim

    def contains_subspace(self, other: Subspace) -> bool:
        _check_ambient(self, other)
        return (self + other).dim == self.dim

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def __add__(self, other: Subspace) -> Subspace:
        _check_ambient(self, other)
        return Subspace.span(self.vectors + other.vectors, self.ambient_dim)

    def __and__(self, other: Subspace) -> Subspace:
        return intersect(self, other)

    def annihilator(self) -> Subspace:
        """Vectors w with w . v = 0 for every v in the subspace."""
        if self.dim == 0:
            return Subspace.full(self.ambient_dim)
        return kernel(self.basis)

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of v in this subspace's basis; raises if v is outside."""
        sol = solve_affine(self.basis.T, vec(v))
        if sol is None:
            raise ValueError("vector is not in the subspace")
        return sol.particular

    def image(self, m: Matrix) -> Subspace:
        """The subspace m(U), with m acting on column vectors."""
        return Subspace.span([m @ v for v in self.vectors], m.nrows)


def _check_ambient(u: Subspace, v: Subspace) -> None:
    if u.ambient_dim != v.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {u.ambient_dim} vs {v.ambient_dim}")


def kernel(m: Matrix) -> Subspace:
    """Null space {v : m v = 0}."""
    n = m.ncols
    red, piv = _rref_with_pivots(m.rows, n)
    free = [j for j in range(n) if j not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, p in enumerate(piv):
            v[p] = -red[r][f]
        basis.append(v)
    return Subspace.span(basis, n)


class AffineSolution(NamedTuple):
    particular: Vector
    homogeneous: Subspace


def solve_affine(a: Matrix, b: Sequence) -> AffineSolution | None:
    """Solve a x = b. Returns None when the system is inconsistent."""
    b = vec(b)
    if len(b) != a.nrows:
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {a.nrows} rows")
    n = a.ncols
    aug = [list(r) + [x] for r, x in zip(a.rows, b)]
    red, piv = _rref_with_pivots(aug, n + 1)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for r, p in enumerate(piv):
        x[p] = red[r][n]
    return AffineSolution(tuple(x), kernel(a))


def intersect(u: Subspace, v: Subspace) -> Subspace:
    _check_ambient(u, v)
    ann = u.annihilator().basis.vstack(v.annihilator().basis)
    if ann.nrows == 0:
        return Subspace.full(u.ambient_dim)
    return kernel(ann)


class Signature(NamedTuple):
    positive: int
    negative: int
    null: int

    def __str__(self) -> str:
        return f"({self.positive},{self.negative},{self.null})"


def congruence_diagonalize(s: Matrix) -> tuple[Matrix, Matrix]:
    """Return (d, p) with d = p^T s p diagonal and p invertible.

    Symmetric Gaussian elimination. When every remaining diagonal pivot is
    zero but an off-diagonal entry s[k][j] is not, row and column j are
    added to row and column k, which makes the pivot 2 s[k][j].
    """
    if not s.is_symmetric():
        raise ValueError("congruence_diagonalize needs a symmetric matrix")
    n = s.nrows
    a = [list(r) for r in s.rows]
    p = [list(r) for r in Matrix.identity(n).rows]

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in p:
            row[i], row[j] = row[j], row[i]

    def add(k, j, f):
        # row_k += f row_j, col_k += f col_j, P col_k += f P col_j
        a[k] = [x + f * y for x, y in zip(a[k], a[j])]
        for row in a:
            row[k] += f * row[j]
        for row in p:
            row[k] += f * row[j]

    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if j is not None:
                swap(k, j)
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    continue
                add(k, j, Fraction(1))
        piv = a[k][k]
        for i in range(k + 1, n):
            if a[i][k] != 0:
                add(i, k, -a[i][k] / piv)
    return Matrix(a), Matrix(p)


def signature(s: Matrix) -> Signature:
    d, _ = congruence_diagonalize(s)
    diag = d.diagonal()
    return Signature(
        sum(1 for x in diag if x > 0),
        sum(1 for x in diag if x < 0),
        sum(1 for x in diag if x == 0),
    )


def is_rational_square(q: Fraction) -> bool:
    return rational_sqrt(q) is not None


def rational_sqrt(q) -> Fraction | None:
    """The non-negative rational square root of q, or None if there is none."""
    from math import isqrt

    q = to_rational(q)
    if q < 0:
        return None
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None
