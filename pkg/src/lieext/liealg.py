"""Finite-dimensional Lie algebras given by structure constants.

A :class:`LieAlgebra` stores ``[e_i, e_j] = sum_k c^k_ij e_k`` only for
``i < j``; antisymmetry is therefore structural.  The rest of the module
computes the invariants the extension theory consumes: center, adjoint
representation, derivations, inner derivations, the outer derivation algebra
``der(h)/ad(h)`` with its action on the center, and quotient algebras.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Optional, Sequence

from .ratlinalg import (
    ZERO,
    DimensionError,
    Matrix,
    Subspace,
    Vector,
    commutator,
    kernel,
    lincomb,
    quotient,
    solve,
    stack_rows,
    unit_vector,
    zero_vector,
)


class JacobiError(ValueError):
    """Structure constants violate the Jacobi identity."""

    def __init__(self, algebra_name, triples):
        self.triples = triples
        super().__init__(f"Jacobi identity fails for {algebra_name} at basis triples {triples}")


class NotAnIdealError(ValueError):
    pass


class LieAlgebra:
    """Lie algebra over Q on a labeled basis.

    ``brackets`` maps index pairs ``(i, j)`` with ``i < j`` to a mapping
    ``k -> coefficient`` (or a dense coefficient vector).  Pairs not listed
    bracket to zero.  The Jacobi identity is verified unless ``check=False``.
    """

    def __init__(self, name: str, basis_labels: Sequence[str],
                 brackets: Optional[Mapping] = None, check: bool = True):
        labels = tuple(basis_labels)
        if len(set(labels)) != len(labels):
            raise ValueError(f"basis labels of {name} are not distinct: {labels}")
        n = len(labels)
        self.name = name
        self.basis_labels = labels
        self.dim = n
        table = [[zero_vector(n)] * n for _ in range(n)]
        for (i, j), coeffs in (brackets or {}).items():
            if not (0 <= i < j < n):
                raise ValueError(f"bracket key ({i},{j}) of {name} must satisfy 0 <= i < j < {n}")
            if isinstance(coeffs, Mapping):
                v = [ZERO] * n
                for k, c in coeffs.items():
                    if not 0 <= k < n:
                        raise ValueError(f"coefficient index {k} out of range in {name}")
                    v[k] += Fraction(c)
                v = tuple(v)
            else:
                v = tuple(Fraction(c) for c in coeffs)
                if len(v) != n:
                    raise DimensionError(f"bracket vector of length {len(v)} in {name}")
            table[i][j] = v
            table[j][i] = tuple(-a for a in v)
        self._table = tuple(tuple(r) for r in table)
        if check:
            bad = check_jacobi(self)
            if bad:
                raise JacobiError(name, bad)

    @classmethod
    def from_bracket(cls, name, basis_labels, fn, check=True) -> "LieAlgebra":
        """Build from a function ``fn(i, j) -> vector`` evaluated on ``i < j``."""
        n = len(basis_labels)
        return cls(name, basis_labels,
                   {(i, j): fn(i, j) for i, j in combinations(range(n), 2)}, check=check)

    @property
    def structure(self) -> dict:
        """Nonzero structure constants ``{(i, j): {k: c}}`` for ``i < j``."""
        out = {}
        for i, j in combinations(range(self.dim), 2):
            v = self._table[i][j]
            if any(v):
                out[(i, j)] = {k: c for k, c in enumerate(v) if c}
        return out

    def basis_bracket(self, i: int, j: int) -> Vector:
        return self._table[i][j]

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise DimensionError(f"bracket in {self.name} needs vectors of length {n}")
        out = [ZERO] * n
        for i, a in enumerate(x):
            if not a:
                continue
            row = self._table[i]
            for j, b in enumerate(y):
                if b and i != j:
                    ab = a * b
                    for k, c in enumerate(row[j]):
                        if c:
                            out[k] += ab * c
        return tuple(out)

    def index(self, label: str) -> int:
        try:
            return self.basis_labels.index(label)
        except ValueError:
            raise KeyError(f"unknown basis label {label!r} in {self.name}") from None

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def is_abelian(self) -> bool:
        return not self.structure

    def same_table(self, other: "LieAlgebra") -> bool:
        return self.dim == other.dim and self._table == other._table

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.name, self.basis_labels, self._table) == (
            other.name, other.basis_labels, other._table)

    def __hash__(self):
        return hash((self.name, self.basis_labels, self._table))

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim})"


def bracket(L: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    return L.bracket(x, y)


def check_jacobi(L: LieAlgebra) -> list:
    """Basis triples ``(i, j, k)``, ``i < j < k``, where the cyclic Jacobi sum is nonzero."""
    bad = []
    for i, j, k in combinations(range(L.dim), 3):
        ei, ej, ek = (L.basis_vector(t) for t in (i, j, k))
        s = [ZERO] * L.dim
        for a, b, c in ((ei, ej, ek), (ej, ek, ei), (ek, ei, ej)):
            for t, v in enumerate(L.bracket(L.bracket(a, b), c)):
                s[t] += v
        if any(s):
            bad.append((i, j, k))
    return bad


def is_homomorphism(A: LieAlgebra, B: LieAlgebra, f: Matrix) -> bool:
    """Whether the linear map ``f: A -> B`` (``B.dim x A.dim`` matrix) preserves brackets."""
    if f.shape != (B.dim, A.dim):
        raise DimensionError(f"map of shape {f.shape} between {A.name} and {B.name}")
    cols = f.columns()
    for i, j in combinations(range(A.dim), 2):
        if f.apply(A.basis_bracket(i, j)) != B.bracket(cols[i], cols[j]):
            return False
    return True


@dataclass(frozen=True)
class LinearMap:
    """A linear map between based spaces, stored as a ``codomain x domain`` matrix."""

    matrix: Matrix

    @property
    def domain_dim(self) -> int:
        return self.matrix.cols

    @property
    def codomain_dim(self) -> int:
        return self.matrix.rows

    def __call__(self, v: Sequence) -> Vector:
        return self.matrix.apply(v)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """``self o other``."""
        return LinearMap(self.matrix @ other.matrix)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.matrix + other.matrix)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.matrix - other.matrix)

    def __neg__(self) -> "LinearMap":
        return LinearMap(-self.matrix)

    @classmethod
    def zero(cls, domain_dim: int, codomain_dim: int) -> "LinearMap":
        return cls(Matrix.zero(codomain_dim, domain_dim))

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(Matrix.identity(n))


@dataclass(frozen=True)
class Representation:
    """A Lie-algebra homomorphism ``algebra -> gl(space_dim)``, one matrix per basis element."""

    algebra: LieAlgebra
    space_dim: int
    action: tuple
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        action = tuple(self.action)
        object.__setattr__(self, "action", action)
        if len(action) != self.algebra.dim:
            raise DimensionError(
                f"{len(action)} action matrices for {self.algebra.name} of dim {self.algebra.dim}")
        for m in action:
            if m.shape != (self.space_dim, self.space_dim):
                raise DimensionError(f"action matrix of shape {m.shape} on a {self.space_dim}-dim space")
        if self.check:
            bad = representation_defects(self.algebra, action)
            if bad:
                raise ValueError(f"action of {self.algebra.name} is not a homomorphism at pairs {bad}")

    def act(self, x: Sequence) -> Matrix:
        """Matrix by which the algebra element ``x`` acts."""
        out = Matrix.zero(self.space_dim, self.space_dim)
        for c, m in zip(x, self.action):
            if c:
                out = out + m * c
        return out

    @classmethod
    def trivial(cls, algebra: LieAlgebra, space_dim: int) -> "Representation":
        z = Matrix.zero(space_dim, space_dim)
        return cls(algebra, space_dim, (z,) * algebra.dim)

    def conjugate(self, P: Matrix, P_inv: Matrix) -> "Representation":
        return Representation(self.algebra, self.space_dim,
                              tuple(P @ m @ P_inv for m in self.action))


def representation_defects(L: LieAlgebra, action: Sequence[Matrix]) -> list:
    """Basis pairs ``(i, j)`` where ``action([e_i, e_j]) != [action(e_i), action(e_j)]``."""
    bad = []
    m = action[0].rows if action else 0
    for i, j in combinations(range(L.dim), 2):
        lhs = Matrix.zero(m, m)
        for k, c in enumerate(L.basis_bracket(i, j)):
            if c:
                lhs = lhs + action[k] * c
        if lhs != commutator(action[i], action[j]):
            bad.append((i, j))
    return bad


def ad_matrix(L: LieAlgebra, x: Sequence) -> Matrix:
    """Matrix of ``[x, .]`` on ``L``."""
    return Matrix.from_columns([L.bracket(x, L.basis_vector(j)) for j in range(L.dim)], L.dim)


def adjoint(L: LieAlgebra) -> Representation:
    return Representation(L, L.dim, tuple(ad_matrix(L, L.basis_vector(i)) for i in range(L.dim)),
                          check=False)


def ad_map(L: LieAlgebra) -> Matrix:
    """The linear map ``h -> gl(h)``, ``x -> ad_x``, as a ``dim^2 x dim`` matrix (row-major flattening)."""
    return Matrix.from_columns([ad_matrix(L, L.basis_vector(i)).flatten() for i in range(L.dim)],
                               L.dim * L.dim)


def center(L: LieAlgebra) -> Subspace:
    """``{z : [z, e_i] = 0 for all i}`` as the kernel of the stacked adjoint matrices."""
    n = L.dim
    # row block i is the matrix of z -> [e_i, z]
    blocks = [ad_matrix(L, L.basis_vector(i)) for i in range(n)]
    return kernel(stack_rows(blocks, n)) if n else Subspace.zero(0)


def derivation_defect(L: LieAlgebra, D: Matrix) -> list:
    """Basis pairs where ``D[x,y] != [Dx,y] + [x,Dy]``."""
    bad = []
    cols = D.columns()
    for i, j in combinations(range(L.dim), 2):
        lhs = D.apply(L.basis_bracket(i, j))
        rhs = tuple(a + b for a, b in zip(L.bracket(cols[i], L.basis_vector(j)),
                                          L.bracket(L.basis_vector(i), cols[j])))
        if lhs != rhs:
            bad.append((i, j))
    return bad


def is_derivation(L: LieAlgebra, D: Matrix) -> bool:
    return D.shape == (L.dim, L.dim) and not derivation_defect(L, D)


def derivations(L: LieAlgebra) -> Subspace:
    """der(L) inside the ``dim^2``-dimensional space of matrices flattened row-major.

    Unknown ``D[r][c]`` sits at coordinate ``r*n + c``.  One equation per
    ``(i < j, k)``: ``(D[e_i,e_j])_k - ([De_i,e_j])_k - ([e_i,De_j])_k = 0``.
    """
    n = L.dim
    N = n * n
    rows = []
    for i, j in combinations(range(n), 2):
        cij = L.basis_bracket(i, j)
        for k in range(n):
            row = [ZERO] * N
            # (D c_ij)_k = sum_m D[k][m] c^m_ij
            for m, c in enumerate(cij):
                if c:
                    row[k * n + m] += c
            # [D e_i, e_j]_k = sum_m D[m][i] c^k_mj
            for m in range(n):
                c = L.basis_bracket(m, j)[k]
                if c:
                    row[m * n + i] -= c
                c = L.basis_bracket(i, m)[k]
                if c:
                    row[m * n + j] -= c
            rows.append(row)
    if not rows:
        return Subspace.full(N)
    return kernel(Matrix.from_rows(rows, N))


def inner_derivations(L: LieAlgebra) -> Subspace:
    """ad(L) inside the flattened matrix space."""
    n = L.dim
    return Subspace.span([ad_matrix(L, L.basis_vector(i)).flatten() for i in range(n)], n * n)


def restrict_to_subspace(D: Matrix, W: Subspace) -> Matrix:
    """Matrix of ``D`` restricted to an invariant subspace ``W``, in ``W``'s stored basis."""
    cols = []
    for b in W.basis:
        c = W.coordinates(D.apply(b))
        if c is None:
            raise ValueError("subspace is not invariant under the map")
        cols.append(c)
    return Matrix.from_columns(cols, W.dim)


class OuterAlgebra:
    """The outer derivation algebra ``out(h) = der(h)/ad(h)``.

    Derivations are coordinatized by the echelon basis of :func:`derivations`
    (``der_dim`` coordinates).  ``inner`` is ad(h) in those coordinates,
    ``quotient_dim`` the dimension of out(h), ``bracket_table`` the induced Lie
    algebra, ``lift`` the ``der_dim x quotient_dim`` matrix sending out-coordinates
    to the echelon representatives, and ``center_action`` the action of out(h)
    on Z(h) (coordinates in the echelon basis of the center).
    """

    def __init__(self, source: LieAlgebra):
        self.source = source
        self.der = derivations(source)
        self.der_dim = self.der.dim
        inner_flat = inner_derivations(source)
        self.inner = Subspace.span([self.der.coordinates(v) for v in inner_flat.basis], self.der_dim)
        self._q = quotient(self.der_dim, self.inner)
        self.quotient_dim = self._q.dim
        self.lift = LinearMap(self._q.lift_matrix())
        self.center = center(source)

        reps = [self.derivation_matrix(self.lift(unit_vector(self.quotient_dim, a)))
                for a in range(self.quotient_dim)]
        inner_mats = [self.derivation_matrix(b) for b in self.inner.basis]
        for D in reps:
            for A in inner_mats:
                if self.der.coordinates(commutator(D, A).flatten()) not in self.inner:
                    raise AssertionError("ad(h) is not an ideal of der(h)")

        def out_bracket(a, b):
            return self.project(commutator(reps[a], reps[b]))

        labels = [f"o{a + 1}" for a in range(self.quotient_dim)]
        self.bracket_table = LieAlgebra.from_bracket(f"out({source.name})", labels, out_bracket)
        self.center_action = Representation(
            self.bracket_table, self.center.dim,
            tuple(restrict_to_subspace(D, self.center) for D in reps))
        for A in inner_mats:
            if not restrict_to_subspace(A, self.center).is_zero():
                raise AssertionError("inner derivation acts nontrivially on the center")

    def derivation_matrix(self, der_coords: Sequence) -> Matrix:
        n = self.source.dim
        return Matrix.unflatten(lincomb(der_coords, self.der.basis, n * n), n, n)

    def der_coordinates(self, D: Matrix) -> Vector:
        c = self.der.coordinates(D.flatten())
        if c is None:
            raise ValueError(f"matrix is not a derivation of {self.source.name}")
        return c

    def project(self, D: Matrix) -> Vector:
        """Class of the derivation ``D`` in out-coordinates."""
        return self._q.project(self.der_coordinates(D))

    def lift_matrix(self, out_coords: Sequence) -> Matrix:
        """The stored echelon lift of an out(h) element, as a derivation matrix."""
        return self.derivation_matrix(self.lift(out_coords))

    def center_matrix(self, out_coords: Sequence) -> Matrix:
        return self.center_action.act(out_coords)

    @property
    def dim(self) -> int:
        return self.quotient_dim

    def __repr__(self):
        return (f"OuterAlgebra({self.source.name}: der {self.der_dim}, "
                f"inner {self.inner.dim}, out {self.quotient_dim})")


def outer(L: LieAlgebra) -> OuterAlgebra:
    return OuterAlgebra(L)


def is_ideal(L: LieAlgebra, W: Subspace) -> bool:
    for w in W.basis:
        for i in range(L.dim):
            if L.bracket(L.basis_vector(i), w) not in W:
                return False
    return True


def subalgebra(L: LieAlgebra, W: Subspace, name: Optional[str] = None, labels=None):
    """The subalgebra on ``W`` in its echelon basis, with the inclusion map."""
    for a, b in combinations(W.basis, 2):
        if L.bracket(a, b) not in W:
            raise ValueError("subspace is not closed under the bracket")
    if labels is None:
        labels = [f"w{t + 1}" for t in range(W.dim)]
    S = LieAlgebra.from_bracket(name or f"sub({L.name})", labels,
                                lambda i, j: W.coordinates(L.bracket(W.basis[i], W.basis[j])))
    return S, LinearMap(W.matrix())


def quotient_algebra(L: LieAlgebra, ideal: Subspace, name: Optional[str] = None):
    """``L / ideal`` with basis the non-pivot unit vectors, and the projection map.

    Quotient basis labels are the labels of the representative basis vectors.
    """
    if ideal.ambient_dim != L.dim:
        raise DimensionError("ideal lives in the wrong space")
    if not is_ideal(L, ideal):
        raise NotAnIdealError(f"subspace is not an ideal of {L.name}")
    q = quotient(L.dim, ideal)
    labels = [L.basis_labels[i] for i in q.complement_indices]
    Q = LieAlgebra.from_bracket(
        name or f"{L.name}/ideal", labels,
        lambda a, b: q.project(L.bracket(q.representatives[a], q.representatives[b])))
    return Q, LinearMap(q.projection_matrix())


def direct_sum(A: LieAlgebra, B: LieAlgebra, name: Optional[str] = None) -> LieAlgebra:
    labels = list(A.basis_labels) + list(B.basis_labels)
    if len(set(labels)) != len(labels):
        labels = [f"{l}_1" for l in A.basis_labels] + [f"{l}_2" for l in B.basis_labels]
    br = {}
    for (i, j), c in A.structure.items():
        br[(i, j)] = c
    for (i, j), c in B.structure.items():
        br[(A.dim + i, A.dim + j)] = {A.dim + k: v for k, v in c.items()}
    return LieAlgebra(name or f"{A.name}+{B.name}", labels, br)


def solve_ad(L: LieAlgebra, target: Matrix, complement: bool = True) -> Optional[Vector]:
    """Some ``v`` with ``ad_v = target``, or None.

    With ``complement`` the solution has zero component along the center, i.e.
    it is a combination of the quotient representatives of ``L/Z(L)``.
    """
    n = L.dim
    A = ad_map(L)
    if complement:
        q = quotient(n, center(L))
        R = q.lift_matrix()
        res = solve(A @ R, target.flatten())
        return None if res is None else R.apply(res[0])
    res = solve(A, target.flatten())
    return None if res is None else res[0]
