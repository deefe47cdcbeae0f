"""Standard small Lie algebras and seeded random generators for property tests."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional, Sequence

from .cochains import SkewCochain, random_cochain
from .cohomology import Cohomology
from .extensions import ExtensionData, center_module, transform
from .liealg import LieAlgebra, LinearMap, Representation, center, derivations, direct_sum
from .ratlinalg import Matrix, inverse, lincomb


def abelian(n: int, labels: Optional[Sequence[str]] = None) -> LieAlgebra:
    if labels is None:
        labels = [f"a{i + 1}" for i in range(n)]
    return LieAlgebra(f"A{n}", labels)


def heis3() -> LieAlgebra:
    """``[x, y] = z``."""
    return LieAlgebra("heis3", ["x", "y", "z"], {(0, 1): {2: 1}})


def sl2() -> LieAlgebra:
    """``[h,e] = 2e, [h,f] = -2f, [e,f] = h`` on the basis (h, e, f)."""
    return LieAlgebra("sl2", ["h", "e", "f"],
                      {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}})


def aff2() -> LieAlgebra:
    """The nonabelian 2-dimensional algebra ``[x, y] = y``."""
    return LieAlgebra("aff2", ["x", "y"], {(0, 1): {1: 1}})


def gl2() -> LieAlgebra:
    return direct_sum(sl2(), LieAlgebra("A1", ["c"]), name="gl2")


def standard_rep_sl2() -> Representation:
    H = Matrix.from_rows([[1, 0], [0, -1]])
    E = Matrix.from_rows([[0, 1], [0, 0]])
    F = Matrix.from_rows([[0, 0], [1, 0]])
    return Representation(sl2(), 2, (H, E, F))


def random_rational(rng: random.Random, low: int = -2, high: int = 2) -> Fraction:
    return Fraction(rng.randint(low, high))


def random_matrix(rng: random.Random, rows: int, cols: int) -> Matrix:
    return Matrix(rows, cols, tuple(random_rational(rng) for _ in range(rows * cols)))


def random_invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        P = random_matrix(rng, n, n)
        if P.rank() == n:
            return P


def random_linear_map(rng: random.Random, domain: int, codomain: int) -> LinearMap:
    return LinearMap(random_matrix(rng, codomain, domain))


def random_derivation(rng: random.Random, h: LieAlgebra) -> Matrix:
    der = derivations(h)
    coeffs = [random_rational(rng) for _ in range(der.dim)]
    return Matrix.unflatten(lincomb(coeffs, der.basis, h.dim * h.dim), h.dim, h.dim)


def random_homomorphism(rng: random.Random, g: LieAlgebra, h: LieAlgebra,
                        candidates: Sequence[Sequence[Matrix]] = ()) -> tuple:
    """A homomorphism ``g -> der(h)``.

    For abelian g: random multiples of a single random derivation (these
    commute).  Otherwise one of ``candidates`` (conjugated by a random
    invertible matrix when h is abelian), or zero.
    """
    if g.is_abelian():
        D = random_derivation(rng, h)
        return tuple(D * random_rational(rng) for _ in range(g.dim))
    options = [tuple(Matrix.zero(h.dim, h.dim) for _ in range(g.dim))] + [tuple(c) for c in candidates]
    choice = options[rng.randrange(len(options))]
    if h.is_abelian() and h.dim:
        P = random_invertible(rng, h.dim)
        Pi = inverse(P)
        choice = tuple(P @ M @ Pi for M in choice)
    return choice


def random_valid_data(rng: random.Random, g: LieAlgebra, h: LieAlgebra,
                      candidates: Sequence[Sequence[Matrix]] = ()) -> ExtensionData:
    """Random valid data: a homomorphism, a random central 2-cocycle, then a random section change."""
    alpha = random_homomorphism(rng, g, h, candidates)
    Z = center(h)
    module = center_module(g, h, alpha, Z)
    Z2 = Cohomology(module, 2).cocycles
    coeffs = [random_rational(rng) for _ in range(Z2.dim)]
    flat = lincomb(coeffs, Z2.basis, Z2.ambient_dim)
    mu = SkewCochain.from_vector(2, g.dim, Z.dim, flat)
    rho = mu.map_values(Z.matrix())
    d = ExtensionData(g, h, alpha, rho)
    return transform(d, random_linear_map(rng, g.dim, h.dim))


def random_section_shift(rng: random.Random, g_dim: int, h_dim: int) -> LinearMap:
    return random_linear_map(rng, g_dim, h_dim)


__all__ = [
    "abelian", "heis3", "sl2", "aff2", "gl2", "standard_rep_sl2", "random_cochain",
    "random_matrix", "random_invertible", "random_linear_map", "random_derivation",
    "random_homomorphism", "random_valid_data", "random_section_shift",
]
