from fractions import Fraction

import pytest

from lieext import fixtures as fx
from lieext.cochains import SkewCochain, delta, wedge_bracket
from lieext.extensions import (
    ExtensionData,
    InvalidDataError,
    OuterAction,
    UndecidableError,
    build,
    central_class,
    check_data,
    enumerate_extensions,
    equivalence_witness,
    equivalent,
    extension_from_ideal,
    extract,
    from_outer_centerless,
    induced_outer_action,
    obstruction,
    pullback,
    pullback_embedding,
    section_isomorphism,
    semidirect,
    transform,
    verify_split,
    decide_split_abelian,
    zero_rho,
)
from lieext.liealg import LieAlgebra, LinearMap, center, check_jacobi, is_homomorphism, outer
from lieext.ratlinalg import Matrix

ONE = Matrix.identity(1)
Z11 = Matrix.zero(1, 1)


def heis_data(algebras):
    g, h = algebras["A2"], algebras["A1"]
    return ExtensionData(g, h, (Z11, Z11), SkewCochain.from_dict(2, 2, 1, {(0, 1): (1,)}))


def zero_data(g, h):
    return ExtensionData(g, h, (Matrix.zero(h.dim, h.dim),) * g.dim, zero_rho(g, h))


# check_data ---------------------------------------------------------------

def test_check_data_examples(algebras):
    assert check_data(zero_data(algebras["sl2"], algebras["heis3"])) == []
    assert check_data(heis_data(algebras)) == []
    # every matrix is a derivation of an abelian algebra, so break one over heis3
    g, h = algebras["A1"], algebras["heis3"]
    bad = Matrix.from_rows([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    rho = zero_rho(g, h)
    report = check_data(ExtensionData(g, h, (bad,), rho))
    assert report and report[0].startswith("derivation")


def test_check_data_reports_curvature_and_bianchi(algebras):
    # over abelian h the curvature identity only asks alpha to be a homomorphism;
    # rho(h, c) = z on gl2 has d rho(h, e, c) != 0
    g, h = algebras["A2"], algebras["A1"]
    gl2 = algebras["gl2"]
    rho = SkewCochain.from_dict(2, 4, 1, {(0, 3): (1,)})
    report = check_data(ExtensionData(gl2, h, (Z11,) * 4, rho))
    assert any(r.startswith("bianchi") for r in report)
    hh = algebras["sl2"]
    rho = SkewCochain.from_dict(2, 2, 3, {(0, 1): (1, 0, 0)})
    report = check_data(ExtensionData(g, hh, (Matrix.zero(3, 3),) * 2, rho))
    assert any(r.startswith("curvature") for r in report)


# build ----------------------------------------------------------------------

def test_build_direct_sum(algebras):
    a = LieAlgebra("A1", ["t"])
    ext = build(zero_data(algebras["A1"], a))
    assert ext.e.dim == 2 and ext.e.is_abelian()


def test_build_heisenberg(algebras):
    ext = build(heis_data(algebras))
    assert ext.e.same_table(algebras["heis3"])
    assert center(ext.e).dim == 1


def test_build_identity_action(algebras):
    A1 = algebras["A1"]
    ext = build(ExtensionData(A1, LieAlgebra("A1", ["t"]), (ONE,), zero_rho(A1, A1)))
    assert ext.e.same_table(algebras["aff2"])


def test_build_rejects_invalid(algebras):
    g, h = algebras["A1"], algebras["heis3"]
    bad = Matrix.from_rows([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    with pytest.raises(InvalidDataError) as info:
        build(ExtensionData(g, h, (bad,), zero_rho(g, h)))
    assert info.value.report


# extract ------------------------------------------------------------------

def test_extract_canonical_round_trip(algebras, rng):
    for _ in range(5):
        d = fx.random_valid_data(rng, algebras["A2"], algebras["heis3"])
        assert extract(build(d)) == d


def test_extract_heis3_over_center(algebras):
    heis = algebras["heis3"]
    Z = center(heis)
    s = LinearMap(Matrix.from_columns([(1, 0, 0), (0, 1, 0)], 3))
    ext = extension_from_ideal(heis, Z, s)
    d = extract(ext)
    assert all(M.is_zero() for M in d.alpha)
    assert d.rho(0, 1) == (1,)
    s2 = LinearMap(Matrix.from_columns([(1, 0, 1), (0, 1, 0)], 3))
    assert extract(ext, s2) == d


def test_extract_rejects_non_section(algebras):
    ext = build(heis_data(algebras))
    with pytest.raises(ValueError, match="not a section"):
        extract(ext, LinearMap(Matrix.from_columns([(1, 0, 0), (1, 0, 0)], 3)))


def test_section_isomorphism_is_homomorphism(algebras, rng):
    d = fx.random_valid_data(rng, algebras["A1"], algebras["heis3"])
    ext = build(d)
    s = LinearMap(ext.section.matrix + ext.inclusion.matrix @ fx.random_matrix(rng, 3, 1))
    d2 = extract(ext, s)
    assert check_data(d2) == []
    phi = section_isomorphism(ext, s)
    assert is_homomorphism(build(d2).e, ext.e, phi.matrix)


# transform ------------------------------------------------------------------

def test_transform_examples(algebras, rng):
    d = heis_data(algebras)
    assert transform(d, Matrix.zero(1, 2)) == d
    b = Matrix.from_rows([[1, 0]])
    assert transform(d, b).rho == d.rho

    g, h = algebras["sl2"], algebras["A2"]
    alpha = fx.random_homomorphism(rng, g, h, [fx.standard_rep_sl2().action])
    d = ExtensionData(g, h, alpha, zero_rho(g, h))
    b = fx.random_matrix(rng, 2, 3)
    assert transform(d, b).rho == delta(g, alpha, SkewCochain.from_linear_map(b))


def test_transform_involution(algebras, rng):
    d = fx.random_valid_data(rng, algebras["A2"], algebras["heis3"])
    b = fx.random_matrix(rng, 3, 2)
    d1 = transform(d, b)
    assert check_data(d1) == []
    assert transform(d1, -b) == d


def test_transform_is_bracket_expansion(algebras, rng):
    h = algebras["sl2"]
    d = from_outer_centerless(OuterAction.zero(algebras["A2"], h))
    b = fx.random_matrix(rng, 3, 2)
    bc = SkewCochain.from_linear_map(b)
    expected = d.rho + delta(d.g, d.alpha, bc) + wedge_bracket(bc, bc, h).scale(Fraction(1, 2))
    assert transform(d, b).rho == expected


# equivalence ----------------------------------------------------------------

def test_equivalent_examples(algebras, rng):
    d = fx.random_valid_data(rng, algebras["A2"], algebras["heis3"])
    b = fx.random_matrix(rng, 3, 2)
    w = equivalent(d, transform(d, b))
    assert w is not None and w.validates(d, transform(d, b))
    w0 = equivalent(d, d)
    assert w0 is not None and w0.b.matrix.is_zero()

    d0 = zero_data(algebras["A2"], algebras["A1"])
    w, reason = equivalence_witness(d0, heis_data(algebras))
    assert w is None and reason == "not equivalent: class difference nonzero in H^2"


def test_equivalence_symmetric_and_isomorphism(algebras, rng):
    d = fx.random_valid_data(rng, algebras["A1"], algebras["heis3"])
    d2 = transform(d, fx.random_matrix(rng, 3, 1))
    w = equivalent(d, d2)
    back = equivalent(d2, d)
    assert back is not None and back.validates(d2, d)
    assert is_homomorphism(build(d).e, build(d2).e, w.isomorphism(d).matrix)


def test_equivalent_rejects_non_inner_alpha_difference(algebras):
    g, h = algebras["A1"], algebras["A1"]
    d0 = zero_data(g, h)
    d1 = ExtensionData(g, h, (ONE,), zero_rho(g, h))
    w, reason = equivalence_witness(d0, d1)
    assert w is None and "non-inner" in reason


def test_equivalent_mismatched(algebras):
    with pytest.raises(ValueError):
        equivalent(zero_data(algebras["A1"], algebras["A1"]),
                   zero_data(algebras["A2"], algebras["A1"]))


# semidirect and splitting ---------------------------------------------------

def test_semidirect_examples(algebras):
    A1, A2 = algebras["A1"], algebras["A2"]
    assert semidirect(A1, A2, [Matrix.zero(2, 2)]).e.is_abelian()
    assert semidirect(A1, LieAlgebra("A1", ["t"]), [ONE]).e.same_table(algebras["aff2"])
    rot = semidirect(A1, A2, [Matrix.from_rows([[0, -1], [1, 0]])])
    assert rot.e.dim == 3 and check_jacobi(rot.e) == []
    assert is_homomorphism(A1, rot.e, rot.section.matrix)


def test_semidirect_rejects_non_homomorphism(algebras):
    A2 = algebras["A2"]
    X = Matrix.from_rows([[0, 1], [0, 0]])
    Y = Matrix.from_rows([[0, 0], [1, 0]])
    with pytest.raises(ValueError, match="homomorphism"):
        semidirect(A2, LieAlgebra("B2", ["u", "v"]), [X, Y])


def test_split_examples(algebras, rng):
    A1, A2 = algebras["A1"], algebras["A2"]
    d = ExtensionData(A1, A2, (Matrix.from_rows([[0, -1], [1, 0]]),), zero_rho(A1, A2))
    assert verify_split(d, Matrix.zero(2, 1))
    assert decide_split_abelian(heis_data(algebras)) is None
    with pytest.raises(UndecidableError, match="supply certificate"):
        decide_split_abelian(zero_data(A1, algebras["heis3"]))


# outer actions ----------------------------------------------------------------

def test_outer_action_rejects_non_homomorphism(algebras):
    heis = algebras["heis3"]
    O = outer(heis)
    with pytest.raises(ValueError, match="homomorphism"):
        # two derivation classes whose bracket is nonzero, over abelian g
        imgs = [tuple(int(i == k) for i in range(O.quotient_dim)) for k in range(2)]
        for a in range(O.quotient_dim):
            for b in range(O.quotient_dim):
                u = tuple(int(i == a) for i in range(O.quotient_dim))
                v = tuple(int(i == b) for i in range(O.quotient_dim))
                if any(O.bracket_table.bracket(u, v)):
                    imgs = [u, v]
                    break
        OuterAction(algebras["A2"], O, imgs)


@pytest.mark.parametrize("gname", ["A1", "A2", "sl2"])
def test_from_outer_centerless_sl2(algebras, gname):
    g = algebras[gname]
    d = from_outer_centerless(OuterAction.zero(g, algebras["sl2"]))
    assert check_data(d) == []
    ext = build(d)
    assert check_jacobi(ext.e) == []
    assert ext.e.dim == 3 + g.dim


def test_from_outer_centerless_aff2(algebras, rng):
    h = algebras["aff2"]
    for gname in ["A1", "A2", "sl2"]:
        g = algebras[gname]
        d = from_outer_centerless(OuterAction.zero(g, h))
        assert check_data(d) == []


def test_from_outer_centerless_requires_no_center(algebras):
    with pytest.raises(ValueError, match="center"):
        from_outer_centerless(OuterAction.zero(algebras["A1"], algebras["heis3"]))


# pullback -------------------------------------------------------------------

@pytest.mark.parametrize("hname", ["A1", "A2", "heis3", "sl2", "aff2", "gl2"])
def test_pullback_kernel_dimension(algebras, hname):
    h = algebras[hname]
    g = algebras["A1"]
    ext = pullback(OuterAction.zero(g, h))
    assert ext.h.dim == h.dim - center(h).dim
    assert check_jacobi(ext.e) == []


def test_pullback_examples(algebras):
    sl2 = algebras["sl2"]
    A2 = algebras["A2"]
    ext = pullback(OuterAction.zero(A2, sl2))
    assert ext.e.dim == 5 and ext.h.same_table(sl2)
    assert pullback(OuterAction.zero(algebras["A1"], algebras["heis3"])).e.dim == 3
    # abelian h: e0 is the graph of abar, isomorphic to g
    O = outer(algebras["A1"])
    ext = pullback(OuterAction(algebras["A2"], O, [(1,), (2,)]))
    assert ext.e.dim == 2 and ext.e.is_abelian()


def test_pullback_embedding_is_homomorphism(algebras, rng):
    heis = algebras["heis3"]
    O = outer(heis)
    d = fx.random_valid_data(rng, algebras["A2"], heis)
    abar = induced_outer_action(d, O)
    ext = pullback(abar)
    emb = pullback_embedding(abar).matrix
    assert emb.rank() == ext.e.dim
    # membership: derivation part projects to abar(X)
    for k in range(ext.e.dim):
        col = emb.column(k)
        D = O.derivation_matrix(col[:O.der_dim])
        X = col[O.der_dim:]
        assert O.project(D) == tuple(sum(c * v[i] for c, v in zip(X, abar.images))
                                     for i in range(O.quotient_dim))


# obstruction and classification ---------------------------------------------

def test_obstruction_centerless_is_zero(algebras):
    res = obstruction(OuterAction.zero(algebras["sl2"], algebras["aff2"]))
    assert res.lam.is_zero() and res.vanishes


def test_obstruction_vanishes_for_actual_extensions(algebras, rng):
    for gname, hname in [("A2", "heis3"), ("A1", "heis3"), ("sl2", "A2")]:
        d = fx.random_valid_data(rng, algebras[gname], algebras[hname])
        res = obstruction(induced_outer_action(d))
        assert res.vanishes
        assert check_data(res.corrected) == []
        assert delta(d.g, res.klass.module, res.lam_center).is_zero()


def test_obstruction_lift_and_rho_choice(algebras, rng):
    heis = algebras["heis3"]
    g = algebras["A3"]
    O = outer(heis)
    D = fx.random_derivation(rng, heis)
    abar = OuterAction.from_derivations(g, O, [D * c for c in (1, 2, -1)])
    base = obstruction(abar)
    b = fx.random_matrix(rng, 3, 3)
    d = transform(ExtensionData(g, heis, base.alpha, base.rho), b)
    other = obstruction(abar, lift=d.alpha, rho_choice=d.rho)
    assert other.lam == base.lam
    # a central shift of rho changes lambda by an exact coboundary
    Z = center(heis)
    mu = SkewCochain.from_dict(2, 3, 1, {(0, 1): (1,), (1, 2): (3,)})
    shifted = obstruction(abar, rho_choice=base.rho + mu.map_values(Z.matrix()))
    diff = shifted.lam_center - base.lam_center
    assert diff == delta(g, abar.center_module(), mu)


def test_obstruction_rejects_bad_rho_choice(algebras):
    abar = OuterAction.zero(algebras["A2"], algebras["heis3"])
    rho = SkewCochain.from_dict(2, 2, 3, {(0, 1): (1, 0, 0)})
    with pytest.raises(ValueError, match="curvature"):
        obstruction(abar, rho_choice=rho)


def test_enumerate_examples(algebras):
    out = enumerate_extensions(OuterAction.zero(algebras["A2"], algebras["A1"]))
    assert len(out) == 2
    assert [center(build(d).e).dim for d in out] == [3, 1]
    assert equivalent(out[0], out[1]) is None
    assert len(enumerate_extensions(OuterAction.zero(algebras["A2"], algebras["sl2"]))) == 1
    assert len(enumerate_extensions(OuterAction.zero(algebras["sl2"], algebras["A1"]))) == 1


def test_enumerate_heis3_entries_valid_and_distinct(algebras):
    out = enumerate_extensions(OuterAction.zero(algebras["A2"], algebras["heis3"]))
    # H^2(A2; Q) = 1 with trivial action on the center
    assert len(out) == 2
    for d in out:
        assert check_data(d) == []
    assert equivalent(out[0], out[1]) is None


def test_obstruction_exact_lambda_is_corrected(algebras):
    # any rho is a curvature solution for abelian h; d rho is nonzero but exact
    gl2 = algebras["gl2"]
    abar = OuterAction.zero(gl2, algebras["A1"])
    rho = SkewCochain.from_dict(2, 4, 1, {(0, 3): (1,)})
    res = obstruction(abar, rho_choice=rho)
    assert not res.lam.is_zero() and res.vanishes
    assert delta(gl2, abar.center_module(), res.mu) == res.lam_center
    assert check_data(res.corrected) == []


# central class ----------------------------------------------------------------

def test_central_class_examples(algebras):
    cc = central_class(algebras["A2"])
    assert cc.quotient.dim == 0 and cc.nu.values == ()
    cc = central_class(algebras["heis3"])
    assert cc.nu(0, 1) == (1,) and cc.nonzero
    cc = central_class(algebras["sl2"])
    assert cc.nu.target_dim == 0 and not cc.nonzero


def test_central_class_invariance(algebras, rng):
    heis = algebras["heis3"]
    abar = OuterAction.zero(algebras["A1"], heis)
    assert central_class(heis, abar).invariant is True
    O = outer(heis)
    D = fx.random_derivation(rng, heis)
    cc = central_class(heis, OuterAction.from_derivations(algebras["A1"], O, [D]))
    assert cc.invariant in (True, False)
