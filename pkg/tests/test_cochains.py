from fractions import Fraction
from itertools import combinations

import pytest

from lieext import fixtures as fx
from lieext.cochains import (
    SkewCochain,
    alpha_wedge,
    chevalley_d,
    delta,
    random_cochain,
    wedge_bracket,
    wedge_bracket_bruteforce,
)
from lieext.extensions import solve_curvature
from lieext.liealg import Representation, adjoint
from lieext.ratlinalg import Matrix, unit_vector

G_NAMES = ["A2", "A3", "heis3", "sl2", "aff2", "gl2"]


def naive_d(g, alpha, phi):
    """Covariant differential evaluated literally on basis vectors (test oracle)."""
    n, p = g.dim, phi.degree
    m = phi.target_dim
    E = [unit_vector(n, i) for i in range(n)]

    def value(t):
        X = [E[i] for i in t]
        out = [Fraction(0)] * m
        for i in range(p + 1):
            rest = X[:i] + X[i + 1:]
            w = alpha[t[i]].apply(phi.evaluate(rest)) if alpha is not None else (0,) * m
            for k in range(m):
                out[k] += (-1) ** i * w[k]
        for i, j in combinations(range(p + 1), 2):
            rest = [g.bracket(X[i], X[j])] + [X[k] for k in range(p + 1) if k not in (i, j)]
            w = phi.evaluate(rest)
            for k in range(m):
                out[k] += (-1) ** (i + j) * w[k]
        return tuple(out)

    return SkewCochain.from_function(p + 1, n, m, value)


def test_cochain_alternates(rng):
    phi = random_cochain(rng, 3, 4, 2)
    assert phi(0, 1, 2) == tuple(-a for a in phi(1, 0, 2))
    assert phi(2, 0, 1) == phi(0, 1, 2)
    assert not any(phi(0, 0, 3))


@pytest.mark.parametrize("name", ["A2", "A3"])
def test_d_vanishes_on_abelian(algebras, name, rng):
    g = algebras[name]
    for p in range(g.dim + 1):
        assert chevalley_d(g, random_cochain(rng, p, g.dim, 2)).is_zero()


def test_d_example_sl2(algebras):
    sl2 = algebras["sl2"]
    e_star = SkewCochain.from_dict(1, 3, 1, {(1,): (1,)})
    # dphi(h,e) = (-1)^(0+1) phi([h,e]) = -2
    assert chevalley_d(sl2, e_star)(0, 1) == (-2,)


def test_d_degree_zero_is_zero(algebras):
    assert chevalley_d(algebras["sl2"], SkewCochain.from_vector(0, 3, 2, (1, 5))).is_zero()


def test_alpha_wedge_examples():
    zero = (Matrix.zero(1, 1), Matrix.zero(1, 1))
    phi = SkewCochain.from_dict(1, 2, 1, {(1,): (1,)})
    assert alpha_wedge(zero, phi).is_zero()
    alpha = (Matrix.from_rows([[1]]), Matrix.zero(1, 1))
    assert alpha_wedge(alpha, phi)(0, 1) == (1,)
    v = SkewCochain.from_vector(0, 2, 1, (3,))
    assert alpha_wedge(alpha, v).values == ((3,), (0,))


@pytest.mark.parametrize("name", G_NAMES)
def test_delta_matches_literal_formula(algebras, name, rng):
    g = algebras[name]
    alpha = tuple(fx.random_matrix(rng, 2, 2) for _ in range(g.dim))
    for p in range(min(g.dim, 3) + 1):
        phi = random_cochain(rng, p, g.dim, 2)
        assert chevalley_d(g, phi) == naive_d(g, None, phi)
        assert delta(g, alpha, phi) == naive_d(g, alpha, phi)


@pytest.mark.parametrize("name", G_NAMES)
def test_d_squared_zero(algebras, name, rng):
    g = algebras[name]
    for p in range(g.dim - 1):
        for _ in range(5):
            phi = random_cochain(rng, p, g.dim, 2)
            assert chevalley_d(g, chevalley_d(g, phi)).is_zero()


@pytest.mark.parametrize("module", ["adjoint_sl2", "std_sl2", "adjoint_heis3", "adjoint_gl2"])
def test_delta_squared_zero_for_representations(algebras, module, rng):
    rep = {
        "adjoint_sl2": lambda: adjoint(algebras["sl2"]),
        "std_sl2": fx.standard_rep_sl2,
        "adjoint_heis3": lambda: adjoint(algebras["heis3"]),
        "adjoint_gl2": lambda: adjoint(algebras["gl2"]),
    }[module]()
    g = rep.algebra
    for p in range(g.dim - 1):
        for _ in range(5):
            phi = random_cochain(rng, p, g.dim, rep.space_dim)
            assert delta(g, rep, delta(g, rep, phi)).is_zero()


def test_wedge_bracket_of_one_cochain(algebras, rng):
    h = algebras["sl2"]
    b = random_cochain(rng, 1, 2, 3)
    bb = wedge_bracket(b, b, h)
    assert bb(0, 1) == tuple(2 * c for c in h.bracket(b(0), b(1)))


def test_wedge_bracket_abelian_target_is_zero(algebras, rng):
    h = algebras["A2"]
    assert wedge_bracket(random_cochain(rng, 1, 3, 2), random_cochain(rng, 2, 3, 2), h).is_zero()


@pytest.mark.parametrize("p, q", [(p, q) for p in range(5) for q in range(5) if p + q <= 4])
def test_wedge_bracket_graded_antisymmetry_and_oracle(algebras, p, q, rng):
    h = algebras["sl2"]
    n = 4
    phi = random_cochain(rng, p, n, 3)
    psi = random_cochain(rng, q, n, 3)
    lhs = wedge_bracket(phi, psi, h)
    assert lhs == wedge_bracket_bruteforce(phi, psi, h)
    assert lhs == wedge_bracket(psi, phi, h).scale(-(-1) ** (p * q))


def _curvature_cases(algebras, rng):
    """(g, h, alpha, rho) with ad rho(X,Y) = [alpha_X,alpha_Y] - alpha_[X,Y]."""
    cases = []
    for hname in ["sl2", "aff2"]:
        h = algebras[hname]
        for gname in G_NAMES:
            g = algebras[gname]
            alpha = tuple(fx.random_derivation(rng, h) for _ in range(g.dim))
            cases.append((g, h, alpha, solve_curvature(g, h, alpha)))
    for gname, hname in [("A2", "heis3"), ("sl2", "A2"), ("A1", "heis3")]:
        d = fx.random_valid_data(rng, algebras[gname], algebras[hname])
        cases.append((d.g, d.h, d.alpha, d.rho))
    return cases


def test_delta_squared_is_curvature_bracket(algebras, rng):
    for g, h, alpha, rho in _curvature_cases(algebras, rng):
        for p in range(min(g.dim, 3) + 1):
            for _ in range(3):
                phi = random_cochain(rng, p, g.dim, h.dim)
                if p + 2 > g.dim:
                    continue
                lhs = delta(g, alpha, delta(g, alpha, phi))
                assert lhs == wedge_bracket(rho, phi, h), (g.name, h.name, p)


def test_cochain_linear_map_round_trip(rng):
    b = fx.random_linear_map(rng, 3, 2)
    phi = SkewCochain.from_linear_map(b)
    assert phi.to_linear_map() == b
    assert phi(1) == b.matrix.column(1)


def test_representation_accepted_as_action(rng):
    rep = fx.standard_rep_sl2()
    phi = random_cochain(rng, 1, 3, 2)
    assert delta(rep.algebra, rep, phi) == delta(rep.algebra, rep.action, phi)
    assert isinstance(rep, Representation)
