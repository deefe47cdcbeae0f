"""Alternating cochains on a Lie algebra and the operators acting on them.

A degree-p cochain ``phi: Lambda^p g -> V`` is stored by its values on
strictly increasing index tuples, in ``itertools.combinations`` order.
Operators:

* :func:`chevalley_d` -- the bracket-contraction part of the differential,
  ``dphi(X_0..X_p) = sum_{i<j} (-1)^(i+j) phi([X_i,X_j], X_0..^i..^j..X_p)``
* :func:`alpha_wedge` -- ``sum_i (-1)^i alpha_{X_i} phi(X_0..^i..X_p)``
* :func:`delta` -- their sum, the covariant exterior differential
* :func:`wedge_bracket` -- the graded bracket of Lie-algebra-valued cochains

An *action* is anything with one ``space_dim x space_dim`` matrix per basis
element of g: a :class:`~lieext.liealg.Representation`, or a raw sequence of
matrices that need not be a homomorphism.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Callable, Sequence, Union

from .liealg import LieAlgebra, LinearMap, Representation
from .ratlinalg import ZERO, DimensionError, Matrix, Vector, lincomb, zero_vector

ActionSpec = Union[Representation, Sequence[Matrix]]


@lru_cache(maxsize=None)
def tuples(n: int, p: int) -> tuple:
    return tuple(combinations(range(n), p))


@lru_cache(maxsize=None)
def tuple_index(n: int, p: int) -> dict:
    return {t: k for k, t in enumerate(tuples(n, p))}


def sort_with_sign(idx: Sequence[int]):
    """Sort ``idx``; return ``(sign, sorted_tuple)``, sign 0 on a repeated index."""
    idx = list(idx)
    sign = 1
    # insertion sort, counting transpositions
    for a in range(1, len(idx)):
        b = a
        while b > 0 and idx[b - 1] > idx[b]:
            idx[b - 1], idx[b] = idx[b], idx[b - 1]
            sign = -sign
            b -= 1
    for a in range(1, len(idx)):
        if idx[a] == idx[a - 1]:
            return 0, None
    return sign, tuple(idx)


@dataclass(frozen=True)
class SkewCochain:
    """An alternating ``degree``-linear map from Q^source_dim to Q^target_dim."""

    degree: int
    source_dim: int
    target_dim: int
    values: tuple

    def __post_init__(self):
        vals = tuple(tuple(Fraction(a) for a in v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != comb(self.source_dim, self.degree):
            raise DimensionError(
                f"{len(vals)} values for a degree-{self.degree} cochain on dim {self.source_dim}")
        for v in vals:
            if len(v) != self.target_dim:
                raise DimensionError(f"value of length {len(v)}, expected {self.target_dim}")

    @classmethod
    def zero(cls, degree: int, source_dim: int, target_dim: int) -> "SkewCochain":
        return cls(degree, source_dim, target_dim,
                   (zero_vector(target_dim),) * comb(source_dim, degree))

    @classmethod
    def from_function(cls, degree: int, source_dim: int, target_dim: int,
                      fn: Callable[[tuple], Sequence]) -> "SkewCochain":
        """Tabulate ``fn`` on increasing index tuples."""
        return cls(degree, source_dim, target_dim, tuple(fn(t) for t in tuples(source_dim, degree)))

    @classmethod
    def from_dict(cls, degree, source_dim, target_dim, entries: dict) -> "SkewCochain":
        """From ``{index_tuple: vector}``; tuples in any order, alternating extension applied."""
        vals = [list(zero_vector(target_dim)) for _ in range(comb(source_dim, degree))]
        index = tuple_index(source_dim, degree)
        for t, v in entries.items():
            sign, st = sort_with_sign(t)
            if sign == 0:
                if any(v):
                    raise ValueError(f"nonzero value on repeated-index tuple {t}")
                continue
            row = vals[index[st]]
            for k, a in enumerate(v):
                row[k] += sign * Fraction(a)
        return cls(degree, source_dim, target_dim, tuple(tuple(r) for r in vals))

    @classmethod
    def from_vector(cls, degree, source_dim, target_dim, flat: Sequence) -> "SkewCochain":
        m = target_dim
        return cls(degree, source_dim, target_dim,
                   tuple(tuple(flat[k * m:(k + 1) * m]) for k in range(comb(source_dim, degree))))

    @classmethod
    def from_linear_map(cls, b: Union[LinearMap, Matrix]) -> "SkewCochain":
        """A linear map g -> V viewed as a 1-cochain."""
        M = b.matrix if isinstance(b, LinearMap) else b
        return cls(1, M.cols, M.rows, tuple(M.column(j) for j in range(M.cols)))

    def to_linear_map(self) -> LinearMap:
        if self.degree != 1:
            raise ValueError("only 1-cochains are linear maps")
        return LinearMap(Matrix.from_columns(self.values, self.target_dim))

    def as_vector(self) -> Vector:
        return tuple(a for v in self.values for a in v)

    def __call__(self, *idx: int) -> Vector:
        """Value on basis elements ``e_idx[0], ..., e_idx[p-1]`` (any order, repeats give 0)."""
        if len(idx) != self.degree:
            raise DimensionError(f"degree-{self.degree} cochain evaluated on {len(idx)} arguments")
        sign, st = sort_with_sign(idx)
        if sign == 0:
            return zero_vector(self.target_dim)
        v = self.values[tuple_index(self.source_dim, self.degree)[st]]
        return v if sign == 1 else tuple(-a for a in v)

    def evaluate(self, vectors: Sequence[Sequence]) -> Vector:
        """Value on arbitrary vectors by multilinear expansion."""
        if len(vectors) != self.degree:
            raise DimensionError(f"degree-{self.degree} cochain evaluated on {len(vectors)} vectors")
        out = [ZERO] * self.target_dim

        def rec(pos, coeff, idx):
            if pos == self.degree:
                sign, st = sort_with_sign(idx)
                if sign:
                    v = self.values[tuple_index(self.source_dim, self.degree)[st]]
                    c = coeff * sign
                    for k, a in enumerate(v):
                        if a:
                            out[k] += c * a
                return
            for i, a in enumerate(vectors[pos]):
                if a and i not in idx:
                    rec(pos + 1, coeff * a, idx + (i,))

        rec(0, Fraction(1), ())
        return tuple(out)

    def _check_compatible(self, other):
        if (self.degree, self.source_dim, self.target_dim) != (
                other.degree, other.source_dim, other.target_dim):
            raise DimensionError("cochains of different shapes")

    def __add__(self, other: "SkewCochain") -> "SkewCochain":
        self._check_compatible(other)
        return SkewCochain(self.degree, self.source_dim, self.target_dim,
                           tuple(tuple(a + b for a, b in zip(u, v))
                                 for u, v in zip(self.values, other.values)))

    def __sub__(self, other: "SkewCochain") -> "SkewCochain":
        return self + (-other)

    def __neg__(self) -> "SkewCochain":
        return self.scale(-1)

    def scale(self, c) -> "SkewCochain":
        c = Fraction(c)
        return SkewCochain(self.degree, self.source_dim, self.target_dim,
                           tuple(tuple(c * a for a in v) for v in self.values))

    def map_values(self, M: Matrix) -> "SkewCochain":
        """Compose with a linear map of the target space."""
        if M.cols != self.target_dim:
            raise DimensionError("target map does not fit the cochain")
        return SkewCochain(self.degree, self.source_dim, M.rows,
                           tuple(M.apply(v) for v in self.values))

    def is_zero(self) -> bool:
        return not any(any(v) for v in self.values)


def random_cochain(rng: random.Random, degree: int, source_dim: int, target_dim: int,
                   low: int = -2, high: int = 2) -> SkewCochain:
    """Entries drawn uniformly from the integers ``low..high``."""
    return SkewCochain.from_function(
        degree, source_dim, target_dim,
        lambda t: tuple(Fraction(rng.randint(low, high)) for _ in range(target_dim)))


def action_matrices(alpha: ActionSpec) -> tuple:
    if isinstance(alpha, Representation):
        return alpha.action
    return tuple(alpha)


def chevalley_d(g: LieAlgebra, phi: SkewCochain) -> SkewCochain:
    """Bracket-contraction part of the Chevalley differential (no action term)."""
    if phi.source_dim != g.dim:
        raise DimensionError(f"cochain on dim {phi.source_dim}, algebra {g.name} has dim {g.dim}")
    p = phi.degree
    m = phi.target_dim

    def value(t):
        out = [ZERO] * m
        for a, b in combinations(range(p + 1), 2):
            rest = t[:a] + t[a + 1:b] + t[b + 1:]
            sign = -1 if (a + b) % 2 else 1
            for k, c in enumerate(g.basis_bracket(t[a], t[b])):
                if c and k not in rest:
                    v = phi(k, *rest)
                    sc = sign * c
                    for r, x in enumerate(v):
                        if x:
                            out[r] += sc * x
        return tuple(out)

    return SkewCochain.from_function(p + 1, g.dim, m, value)


def alpha_wedge(alpha: ActionSpec, phi: SkewCochain) -> SkewCochain:
    """``(alpha ^ phi)(X_0..X_p) = sum_i (-1)^i alpha_{X_i} phi(X_0..^i..X_p)``."""
    mats = action_matrices(alpha)
    if len(mats) != phi.source_dim:
        raise DimensionError(f"{len(mats)} action matrices for a cochain on dim {phi.source_dim}")
    for M in mats:
        if M.shape != (phi.target_dim, phi.target_dim):
            raise DimensionError(f"action matrix of shape {M.shape} on target dim {phi.target_dim}")
    p = phi.degree

    def value(t):
        out = zero_vector(phi.target_dim)
        for i in range(p + 1):
            w = mats[t[i]].apply(phi(*(t[:i] + t[i + 1:])))
            out = tuple(a - b for a, b in zip(out, w)) if i % 2 else tuple(
                a + b for a, b in zip(out, w))
        return out

    return SkewCochain.from_function(p + 1, phi.source_dim, phi.target_dim, value)


def delta(g: LieAlgebra, alpha: ActionSpec, phi: SkewCochain) -> SkewCochain:
    """Covariant exterior differential ``alpha ^ phi + d phi``."""
    return alpha_wedge(alpha, phi) + chevalley_d(g, phi)


@lru_cache(maxsize=None)
def shuffles(n: int, p: int) -> tuple:
    """``(sign, first, rest)`` for every (p, n-p)-shuffle of positions ``0..n-1``."""
    out = []
    for first in combinations(range(n), p):
        rest = tuple(i for i in range(n) if i not in first)
        sign, _ = sort_with_sign(first + rest)
        out.append((sign, first, rest))
    return tuple(out)


def wedge_bracket(phi: SkewCochain, psi: SkewCochain, target: LieAlgebra) -> SkewCochain:
    """Graded bracket ``[phi, psi]`` of cochains valued in the Lie algebra ``target``.

    The defining sum over all permutations with weight ``1/(p! q!)`` collapses
    to a signed sum over (p, q)-shuffles because both arguments alternate.
    """
    if phi.source_dim != psi.source_dim:
        raise DimensionError("cochains on different source algebras")
    if phi.target_dim != target.dim or psi.target_dim != target.dim:
        raise DimensionError(f"cochain targets do not match {target.name}")
    p, q = phi.degree, psi.degree
    sh = shuffles(p + q, p)

    def value(t):
        out = zero_vector(target.dim)
        for sign, first, rest in sh:
            a = phi(*(t[i] for i in first))
            b = psi(*(t[i] for i in rest))
            w = target.bracket(a, b)
            out = tuple(x + y for x, y in zip(out, w)) if sign > 0 else tuple(
                x - y for x, y in zip(out, w))
        return out

    return SkewCochain.from_function(p + q, phi.source_dim, target.dim, value)


def wedge_bracket_bruteforce(phi: SkewCochain, psi: SkewCochain, target: LieAlgebra) -> SkewCochain:
    """The permutation-sum definition, evaluated literally. Slow; used as a test oracle."""
    from itertools import permutations

    p, q = phi.degree, psi.degree
    norm = Fraction(1, factorial(p) * factorial(q))

    def value(t):
        out = [ZERO] * target.dim
        for perm in permutations(range(p + q)):
            sign, _ = sort_with_sign(perm)
            a = phi(*(t[perm[i]] for i in range(p)))
            b = psi(*(t[perm[i]] for i in range(p, p + q)))
            for k, x in enumerate(target.bracket(a, b)):
                out[k] += sign * norm * x
        return tuple(out)

    return SkewCochain.from_function(p + q, phi.source_dim, target.dim, value)


def operator_matrix(op: Callable[[SkewCochain], SkewCochain], degree: int,
                    source_dim: int, target_dim: int) -> Matrix:
    """Matrix of a linear cochain operator in flattened (tuple-major) coordinates."""
    N = comb(source_dim, degree) * target_dim
    cols = []
    for k in range(N):
        e = tuple(Fraction(1) if i == k else ZERO for i in range(N))
        cols.append(op(SkewCochain.from_vector(degree, source_dim, target_dim, e)).as_vector())
    rows = comb(source_dim, degree + 1) * target_dim
    return Matrix.from_columns(cols, rows)


def delta_matrix(g: LieAlgebra, alpha: ActionSpec, degree: int) -> Matrix:
    """Matrix of ``delta_alpha`` from degree ``degree`` to ``degree + 1``."""
    mats = action_matrices(alpha)
    m = mats[0].rows if mats else (alpha.space_dim if isinstance(alpha, Representation) else 0)
    return operator_matrix(lambda phi: delta(g, mats, phi), degree, g.dim, m)


def combine(coeffs: Sequence, cochains: Sequence[SkewCochain], degree, source_dim, target_dim):
    flat = lincomb(coeffs, [c.as_vector() for c in cochains], comb(source_dim, degree) * target_dim)
    return SkewCochain.from_vector(degree, source_dim, target_dim, flat)
