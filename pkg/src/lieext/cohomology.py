"""Chevalley-Eilenberg cohomology ``H^n(g; V)`` for a genuine module ``V``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Optional

from .cochains import SkewCochain, delta, delta_matrix
from .liealg import Representation
from .ratlinalg import Matrix, image, kernel, relative_quotient, solve


class NotACocycleError(ValueError):
    pass


def _require_module(module) -> Representation:
    if not isinstance(module, Representation):
        raise TypeError("cohomology needs a Representation; a raw action family has no complex")
    return module


def _delta(module: Representation, n: int) -> Matrix:
    """delta_n: C^n -> C^{n+1}; the zero map for n < 0."""
    g, m = module.algebra, module.space_dim
    if n < 0:
        return Matrix.zero(comb(g.dim, 0) * m, 0)
    return delta_matrix(g, module, n)


@dataclass(frozen=True)
class CochainComplexSlice:
    module: Representation
    degree: int
    delta_n: Matrix
    delta_prev: Matrix

    def __post_init__(self):
        if self.delta_n.cols != self.delta_prev.rows:
            raise ValueError("differentials do not compose")
        if not (self.delta_n @ self.delta_prev).is_zero():
            raise ValueError(f"delta o delta != 0 in degree {self.degree}")

    @classmethod
    def at(cls, module: Representation, n: int) -> "CochainComplexSlice":
        module = _require_module(module)
        return cls(module, n, _delta(module, n), _delta(module, n - 1))


class Cohomology:
    """``H^n(g; V)``: cocycles, coboundaries and reproducible class representatives."""

    def __init__(self, module: Representation, degree: int):
        if degree < 0:
            raise ValueError("negative degree")
        self.module = _require_module(module)
        self.degree = degree
        self.slice = CochainComplexSlice.at(module, degree)
        self.cocycles = kernel(self.slice.delta_n)
        self.coboundaries = image(self.slice.delta_prev)
        reps, self._project = relative_quotient(self.cocycles, self.coboundaries)
        g = module.algebra
        self.representatives = tuple(
            SkewCochain.from_vector(degree, g.dim, module.space_dim, r) for r in reps)

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def is_cocycle(self, phi: SkewCochain) -> bool:
        return phi.as_vector() in self.cocycles

    def coordinates(self, phi: SkewCochain):
        """Coordinates of the class of ``phi`` against ``representatives``."""
        if not self.is_cocycle(phi):
            raise NotACocycleError(f"cochain is not a {self.degree}-cocycle")
        return self._project(phi.as_vector())

    def klass(self, phi: SkewCochain) -> "CohomologyClass":
        return CohomologyClass(self.module, self.degree, phi)


def cohomology(module: Representation, n: int) -> Cohomology:
    return Cohomology(module, n)


def cohomology_dim(module: Representation, n: int) -> int:
    s = CochainComplexSlice.at(module, n)
    return kernel(s.delta_n).dim - image(s.delta_prev).dim


def solve_coboundary(module: Representation, phi: SkewCochain) -> Optional[SkewCochain]:
    """Some psi with ``delta psi = phi``, or None. No cocycle precondition."""
    module = _require_module(module)
    p = phi.degree
    g = module.algebra
    if p == 0:
        return None
    res = solve(_delta(module, p - 1), phi.as_vector())
    if res is None:
        return None
    return SkewCochain.from_vector(p - 1, g.dim, module.space_dim, res[0])


def is_coboundary(module: Representation, phi: SkewCochain) -> Optional[SkewCochain]:
    """Witness ``psi`` of degree p-1 with ``delta psi = phi``, or None when ``[phi] != 0``.

    Degree-0 cocycles are never coboundaries except zero, which has no
    degree -1 witness; None is returned for every degree-0 input.
    """
    module = _require_module(module)
    if not delta(module.algebra, module, phi).is_zero():
        raise NotACocycleError("cochain is not a cocycle")
    return solve_coboundary(module, phi)


@dataclass(frozen=True)
class CohomologyClass:
    module: Representation
    degree: int
    representative: SkewCochain

    def __post_init__(self):
        if self.representative.degree != self.degree:
            raise ValueError("representative has the wrong degree")
        if not delta(self.module.algebra, self.module, self.representative).is_zero():
            raise NotACocycleError("class representative is not a cocycle")

    def is_zero(self) -> bool:
        if self.representative.is_zero():
            return True
        return solve_coboundary(self.module, self.representative) is not None

    @cached_property
    def space(self) -> Cohomology:
        return Cohomology(self.module, self.degree)


def class_equal(c1: CohomologyClass, c2: CohomologyClass) -> bool:
    if c1.module != c2.module or c1.degree != c2.degree:
        raise ValueError("classes live in different cohomology spaces")
    diff = c1.representative - c2.representative
    return diff.is_zero() or solve_coboundary(c1.module, diff) is not None
