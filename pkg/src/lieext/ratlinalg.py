"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`; vectors are tuples of fractions;
matrices are immutable :class:`Matrix` objects stored row-major.  Every
routine is exact -- there is no floating point anywhere in this module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")

ZERO = Fraction(0)
ONE = Fraction(1)


class DimensionError(ValueError):
    """Shapes of the operands do not fit together."""


def parse_rational(text: str) -> Fraction:
    """Parse ``-?digits(/digits)?`` into a Fraction; the denominator must be positive."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"malformed rational {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vec(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def add(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"cannot add vectors of length {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"cannot subtract vectors of length {len(u)} and {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u: Sequence) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in u)


def lincomb(coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> Vector:
    """Return sum_i coeffs[i] * vectors[i] in Q^n."""
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return tuple(out)


def is_zero(u: Sequence) -> bool:
    return not any(u)


@dataclass(frozen=True)
class Matrix:
    """Dense exact matrix, ``rows x cols``, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple = field(repr=False)

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "Matrix":
        rows = [tuple(r) for r in rows]
        if cols is None:
            if not rows:
                raise DimensionError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged rows")
        return cls(len(rows), cols, tuple(Fraction(a) for r in rows for a in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        columns = [tuple(c) for c in columns]
        for c in columns:
            if len(c) != rows:
                raise DimensionError("column of wrong length")
        return cls(rows, len(columns),
                   tuple(Fraction(columns[j][i]) for i in range(rows) for j in range(len(columns))))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return self.entries[j::self.cols] if self.rows else ()

    def row_list(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def T(self) -> "Matrix":
        return Matrix.from_columns(self.row_list(), self.cols) if self.rows else Matrix.zero(self.cols, 0)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionError(f"matrix with {self.cols} columns applied to vector of length {len(v)}")
        return tuple(sum((a * b for a, b in zip(self.row(i), v) if a and b), ZERO)
                     for i in range(self.rows))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for c in cols:
                out.append(sum((a * b for a, b in zip(r, c) if a and b), ZERO))
        return Matrix(self.rows, other.cols, tuple(out))

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __mul__(self, c) -> "Matrix":
        c = Fraction(c)
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.entries)

    def flatten(self) -> Vector:
        return self.entries

    @classmethod
    def unflatten(cls, v: Sequence, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple(Fraction(a) for a in v))

    def rank(self) -> int:
        return len(rref(self.row_list(), self.cols)[1])

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise DimensionError("hstack needs equal row counts")
        return Matrix.from_rows([self.row(i) + other.row(i) for i in range(self.rows)],
                                self.cols + other.cols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise DimensionError("vstack needs equal column counts")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def stack_rows(blocks: Sequence[Matrix], cols: int) -> Matrix:
    entries = tuple(x for b in blocks for x in b.entries)
    return Matrix(sum(b.rows for b in blocks), cols, entries)


def rref(rows: Sequence[Sequence], ncols: int):
    """Reduced row echelon form by Gauss-Jordan elimination.

    Returns ``(reduced_rows, pivot_columns)`` where ``reduced_rows`` holds only
    the nonzero rows, each with a leading 1 at its pivot column.
    """
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            inv = 1 / piv
            m[r] = [a * inv for a in m[r]]
        pr = m[r]
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f:
                    row = m[i]
                    m[i] = [a - f * b if b else a for a, b in zip(row, pr)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in m[:r]], pivots


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^ambient_dim with a canonical (RREF) basis.

    Two ``Subspace`` objects compare equal iff they are the same subspace.
    """

    ambient_dim: int
    basis: tuple

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vectors = [tuple(Fraction(a) for a in v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in Q^{ambient_dim}")
        rows, _ = rref(vectors, ambient_dim)
        return cls(ambient_dim, tuple(rows))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple(unit_vector(ambient_dim, i) for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list:
        return [next(i for i, a in enumerate(b) if a) for b in self.basis]

    def coordinates(self, v: Sequence) -> Optional[Vector]:
        """Coordinates of ``v`` in the stored basis, or None when ``v`` is outside."""
        v = tuple(Fraction(a) for a in v)
        if len(v) != self.ambient_dim:
            raise DimensionError(f"vector of length {len(v)} in Q^{self.ambient_dim}")
        coords = tuple(v[p] for p in self.pivots)
        if lincomb(coords, self.basis, self.ambient_dim) != v:
            return None
        return coords

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(b in self for b in other.basis)

    def matrix(self) -> Matrix:
        """Basis vectors as the columns of an ``ambient_dim x dim`` matrix."""
        return Matrix.from_columns(self.basis, self.ambient_dim)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.basis + other.basis, self.ambient_dim)


def kernel(A: Matrix) -> Subspace:
    """Null space {v : A v = 0}."""
    rows, pivots = rref(A.row_list(), A.cols)
    free = [c for c in range(A.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * A.cols
        v[f] = ONE
        for r, p in zip(rows, pivots):
            v[p] = -r[f]
        basis.append(v)
    return Subspace.span(basis, A.cols)


def image(A: Matrix) -> Subspace:
    """Column space of ``A``."""
    return Subspace.span(A.columns(), A.rows)


def rank(A: Matrix) -> int:
    return A.rank()


def solve(A: Matrix, y: Sequence):
    """Solve ``A x = y`` exactly.

    Returns ``(x, kernel(A))`` for a particular solution ``x`` (free variables
    set to zero), or None when the system is inconsistent.
    """
    if len(y) != A.rows:
        raise DimensionError(f"right-hand side of length {len(y)} for {A.rows} equations")
    aug = [A.row(i) + (Fraction(y[i]),) for i in range(A.rows)]
    rows, pivots = rref(aug, A.cols + 1)
    if pivots and pivots[-1] == A.cols:
        return None
    x = [ZERO] * A.cols
    for r, p in zip(rows, pivots):
        x[p] = r[A.cols]
    return tuple(x), kernel(A)


@dataclass(frozen=True)
class Quotient:
    """Q^n / sub, with representatives completing ``sub.basis`` to a basis of Q^n."""

    sub: Subspace
    representatives: tuple
    complement_indices: tuple

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def project(self, v: Sequence) -> Vector:
        v = tuple(Fraction(a) for a in v)
        if len(v) != self.sub.ambient_dim:
            raise DimensionError(f"vector of length {len(v)} in Q^{self.sub.ambient_dim}")
        r = list(v)
        for b, p in zip(self.sub.basis, self.sub.pivots):
            c = r[p]
            if c:
                for k, a in enumerate(b):
                    if a:
                        r[k] -= c * a
        return tuple(r[i] for i in self.complement_indices)

    def lift(self, coords: Sequence) -> Vector:
        return lincomb(coords, self.representatives, self.sub.ambient_dim)

    def projection_matrix(self) -> Matrix:
        n = self.sub.ambient_dim
        return Matrix.from_columns([self.project(unit_vector(n, i)) for i in range(n)], self.dim)

    def lift_matrix(self) -> Matrix:
        return Matrix.from_columns(self.representatives, self.sub.ambient_dim)


def quotient(ambient_dim: int, sub: Subspace) -> Quotient:
    """Quotient of Q^ambient_dim by ``sub``.

    Representatives are the unit vectors at the non-pivot positions of the
    echelon basis of ``sub``.  ``project`` subtracts the echelon components and
    reads off the remaining non-pivot entries, so it kills ``sub`` and sends
    the i-th representative to the i-th unit coordinate.
    """
    if sub.ambient_dim != ambient_dim:
        raise DimensionError(f"subspace of Q^{sub.ambient_dim} in Q^{ambient_dim}")
    piv = set(sub.pivots)
    comp = tuple(i for i in range(ambient_dim) if i not in piv)
    reps = tuple(unit_vector(ambient_dim, i) for i in comp)
    return Quotient(sub, reps, comp)


def relative_quotient(outer: Subspace, inner: Subspace):
    """Representatives of outer/inner as vectors of the ambient space.

    Returns ``(representatives, project)`` where ``project`` maps a vector of
    ``outer`` to quotient coordinates.
    """
    if not outer.contains_subspace(inner):
        raise ValueError("inner subspace is not contained in outer subspace")
    inner_coords = Subspace.span([outer.coordinates(b) for b in inner.basis], outer.dim)
    q = quotient(outer.dim, inner_coords)
    reps = tuple(lincomb(r, outer.basis, outer.ambient_dim) for r in q.representatives)

    def project(v: Sequence) -> Vector:
        c = outer.coordinates(v)
        if c is None:
            raise ValueError("vector is not in the outer subspace")
        return q.project(c)

    return reps, project


def inverse(A: Matrix) -> Matrix:
    if A.rows != A.cols:
        raise DimensionError("inverse of a non-square matrix")
    n = A.rows
    aug = [A.row(i) + unit_vector(n, i) for i in range(n)]
    rows, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(rows) < n:
        raise ValueError("matrix is singular")
    return Matrix.from_rows([r[n:] for r in rows], n)

