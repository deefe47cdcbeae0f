"""Extensions ``0 -> h -> e -> g -> 0`` described by data ``(alpha, rho)``.

``alpha`` is one derivation matrix of h per basis element of g (linear in X,
not necessarily a homomorphism) and ``rho`` an h-valued 2-cochain on g.  The
data is valid when

* every ``alpha_X`` is a derivation of h,
* ``[alpha_X, alpha_Y] - alpha_[X,Y] = ad rho(X,Y)``  (curvature identity),
* ``delta_alpha rho = 0``  (Bianchi identity),

and then ``e = g (+) h`` with

    [X1 + H1, X2 + H2] = [X1,X2] + [H1,H2] + alpha_X1 H2 - alpha_X2 H1 + rho(X1,X2)

is a Lie algebra.  Throughout, the basis of ``e`` lists the g basis first and
the h basis second.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence, Union

from .cochains import SkewCochain, delta, delta_matrix, wedge_bracket
from .cohomology import Cohomology, CohomologyClass, solve_coboundary
from .liealg import (
    LieAlgebra,
    LinearMap,
    OuterAlgebra,
    Representation,
    ad_matrix,
    center,
    derivation_defect,
    is_homomorphism,
    is_ideal,
    quotient_algebra,
    representation_defects,
    restrict_to_subspace,
    solve_ad,
    subalgebra,
)
from .ratlinalg import (
    DimensionError,
    Matrix,
    Subspace,
    commutator,
    image,
    lincomb,
    quotient,
    solve,
    unit_vector,
    zero_vector,
)


class InvalidDataError(ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__("invalid extension data: " + "; ".join(report))


class ObstructionError(ValueError):
    def __init__(self, result):
        self.result = result
        super().__init__("obstruction class in H^3(g; Z(h)) is nonzero")


class UndecidableError(ValueError):
    pass


def _vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


@dataclass(frozen=True)
class ExtensionData:
    g: LieAlgebra
    h: LieAlgebra
    alpha: tuple
    rho: SkewCochain

    def __post_init__(self):
        alpha = tuple(self.alpha)
        object.__setattr__(self, "alpha", alpha)
        if len(alpha) != self.g.dim:
            raise DimensionError(f"{len(alpha)} alpha matrices for g of dim {self.g.dim}")
        for M in alpha:
            if M.shape != (self.h.dim, self.h.dim):
                raise DimensionError(f"alpha matrix of shape {M.shape}, h has dim {self.h.dim}")
        r = self.rho
        if (r.degree, r.source_dim, r.target_dim) != (2, self.g.dim, self.h.dim):
            raise DimensionError("rho must be a 2-cochain on g with values in h")

    def alpha_of(self, x: Sequence) -> Matrix:
        out = Matrix.zero(self.h.dim, self.h.dim)
        for c, M in zip(x, self.alpha):
            if c:
                out = out + M * c
        return out


def curvature_defect(g: LieAlgebra, h: LieAlgebra, alpha: Sequence[Matrix], rho: SkewCochain):
    """``[alpha_X, alpha_Y] - alpha_[X,Y] - ad rho(X,Y)`` on basis pairs ``X < Y``."""
    out = {}
    for i, j in combinations(range(g.dim), 2):
        lhs = commutator(alpha[i], alpha[j])
        for k, c in enumerate(g.basis_bracket(i, j)):
            if c:
                lhs = lhs - alpha[k] * c
        diff = lhs - ad_matrix(h, rho(i, j))
        if not diff.is_zero():
            out[(i, j)] = diff
    return out


def check_data(d: ExtensionData) -> list:
    """Violated conditions as human-readable strings; empty means valid."""
    g, h = d.g, d.h
    report = []
    for i, M in enumerate(d.alpha):
        bad = derivation_defect(h, M)
        if bad:
            report.append(f"derivation: alpha[{g.basis_labels[i]}] is not a derivation of "
                          f"{h.name} (fails on pairs {bad})")
    for (i, j) in curvature_defect(g, h, d.alpha, d.rho):
        report.append(f"curvature: [alpha_X,alpha_Y] - alpha_[X,Y] != ad rho(X,Y) at "
                      f"({g.basis_labels[i]},{g.basis_labels[j]})")
    bianchi = delta(g, d.alpha, d.rho)
    for t, v in zip(combinations(range(g.dim), 3), bianchi.values):
        if any(v):
            labels = ",".join(g.basis_labels[k] for k in t)
            report.append(f"bianchi: delta_alpha rho != 0 at ({labels})")
    return report


def is_valid(d: ExtensionData) -> bool:
    return not check_data(d)


@dataclass(frozen=True)
class Extension:
    """An exact sequence ``0 -> h -> e -> g -> 0`` with an optional linear section."""

    g: LieAlgebra
    h: LieAlgebra
    e: LieAlgebra
    inclusion: LinearMap
    projection: LinearMap
    section: Optional[LinearMap] = None

    def __post_init__(self):
        g, h, e = self.g, self.h, self.e
        if self.inclusion.matrix.shape != (e.dim, h.dim):
            raise DimensionError("inclusion has the wrong shape")
        if self.projection.matrix.shape != (g.dim, e.dim):
            raise DimensionError("projection has the wrong shape")
        if e.dim != g.dim + h.dim:
            raise ValueError("dim e != dim g + dim h")
        if not (self.projection.matrix @ self.inclusion.matrix).is_zero():
            raise ValueError("projection o inclusion != 0")
        if self.inclusion.matrix.rank() != h.dim:
            raise ValueError("inclusion is not injective")
        if self.projection.matrix.rank() != g.dim:
            raise ValueError("projection is not surjective")
        if not is_ideal(e, image(self.inclusion.matrix)):
            raise ValueError("image of the inclusion is not an ideal")
        if not is_homomorphism(h, e, self.inclusion.matrix):
            raise ValueError("inclusion is not a homomorphism")
        if not is_homomorphism(e, g, self.projection.matrix):
            raise ValueError("projection is not a homomorphism")
        if self.section is not None:
            check_section(self, self.section)

    def kernel_coordinates(self, w: Sequence):
        """h-coordinates of an element ``w`` of the image of the inclusion."""
        res = solve(self.inclusion.matrix, w)
        if res is None:
            raise ValueError("element does not lie in the kernel of the projection")
        return res[0]


def check_section(ext: Extension, s: LinearMap):
    if s.matrix.shape != (ext.e.dim, ext.g.dim):
        raise DimensionError("section has the wrong shape")
    if ext.projection.matrix @ s.matrix != Matrix.identity(ext.g.dim):
        raise ValueError("map is not a section: projection o s != identity")


def _sum_labels(g: LieAlgebra, h: LieAlgebra):
    labels = list(g.basis_labels) + list(h.basis_labels)
    if len(set(labels)) == len(labels):
        return labels
    return [f"g.{l}" for l in g.basis_labels] + [f"h.{l}" for l in h.basis_labels]


def extension_bracket(d: ExtensionData, u: Sequence, v: Sequence):
    """Bracket on ``g (+) h`` (g coordinates first)."""
    ng = d.g.dim
    X1, H1 = u[:ng], u[ng:]
    X2, H2 = v[:ng], v[ng:]
    H = d.h.bracket(H1, H2)
    H = _vec_add(H, d.alpha_of(X1).apply(H2))
    H = _vec_sub(H, d.alpha_of(X2).apply(H1))
    H = _vec_add(H, d.rho.evaluate([X1, X2]))
    return d.g.bracket(X1, X2) + H


def _canonical_maps(g: LieAlgebra, h: LieAlgebra):
    ng, nh = g.dim, h.dim
    n = ng + nh
    inclusion = LinearMap(Matrix.from_columns([unit_vector(n, ng + k) for k in range(nh)], n))
    projection = LinearMap(Matrix.from_rows([unit_vector(n, j) for j in range(ng)], n))
    section = LinearMap(Matrix.from_columns([unit_vector(n, j) for j in range(ng)], n))
    return inclusion, projection, section


def build(d: ExtensionData, name: Optional[str] = None) -> Extension:
    """The extension defined by valid data, with the canonical section ``X -> X + 0``."""
    report = check_data(d)
    if report:
        raise InvalidDataError(report)
    n = d.g.dim + d.h.dim
    basis = [unit_vector(n, k) for k in range(n)]
    e = LieAlgebra.from_bracket(name or f"ext({d.g.name},{d.h.name})", _sum_labels(d.g, d.h),
                                lambda i, j: extension_bracket(d, basis[i], basis[j]))
    inclusion, projection, section = _canonical_maps(d.g, d.h)
    return Extension(d.g, d.h, e, inclusion, projection, section)


def canonical_section(ext: Extension) -> LinearMap:
    return _canonical_maps(ext.g, ext.h)[2]


def extract(ext: Extension, s: Optional[LinearMap] = None) -> ExtensionData:
    """Data induced by a linear section: ``alpha_X H = [sX, H]``, ``rho(X,Y) = [sX,sY] - s[X,Y]``."""
    if s is None:
        s = ext.section
        if s is None:
            raise ValueError("extension carries no section; pass one")
    check_section(ext, s)
    g, h, e = ext.g, ext.h, ext.e
    sX = s.matrix.columns()
    iH = ext.inclusion.matrix.columns()
    alpha = []
    for j in range(g.dim):
        cols = [ext.kernel_coordinates(e.bracket(sX[j], iH[k])) for k in range(h.dim)]
        alpha.append(Matrix.from_columns(cols, h.dim))

    def rho(t):
        i, j = t
        w = _vec_sub(e.bracket(sX[i], sX[j]), s(g.basis_bracket(i, j)))
        return ext.kernel_coordinates(w)

    return ExtensionData(g, h, tuple(alpha), SkewCochain.from_function(2, g.dim, h.dim, rho))


def section_isomorphism(ext: Extension, s: LinearMap) -> LinearMap:
    """``build(extract(ext, s)).e -> ext.e``, ``X + H -> s(X) + i(H)``."""
    return LinearMap(s.matrix.hstack(ext.inclusion.matrix))


def extension_from_ideal(e: LieAlgebra, ideal: Subspace, s: Optional[LinearMap] = None) -> Extension:
    """``0 -> ideal -> e -> e/ideal -> 0``; default section sends quotient basis to representatives."""
    labels = []
    for b in ideal.basis:
        nz = [k for k, a in enumerate(b) if a]
        labels.append(e.basis_labels[nz[0]] if len(nz) == 1 else None)
    if None in labels or len(set(labels)) != len(labels):
        labels = [f"w{t + 1}" for t in range(ideal.dim)]
    h, inc = subalgebra(e, ideal, name=f"ideal({e.name})", labels=labels)
    g, proj = quotient_algebra(e, ideal, name=f"{e.name}/ideal")
    if s is None:
        s = LinearMap(quotient(e.dim, ideal).lift_matrix())
    return Extension(g, h, e, inc, proj, s)


def cochain_of(b: Union[LinearMap, Matrix]) -> SkewCochain:
    return SkewCochain.from_linear_map(b)


def transform(d: ExtensionData, b: Union[LinearMap, Matrix]) -> ExtensionData:
    """Data for the section ``s + b``: ``alpha + ad o b`` and ``rho + delta_alpha b + [b,b]/2``."""
    B = b.matrix if isinstance(b, LinearMap) else b
    if B.shape != (d.h.dim, d.g.dim):
        raise DimensionError(f"b must be a {d.h.dim}x{d.g.dim} matrix (g -> h)")
    bc = cochain_of(B)
    alpha = tuple(a + ad_matrix(d.h, B.column(j)) for j, a in enumerate(d.alpha))
    rho = d.rho + delta(d.g, d.alpha, bc) + wedge_bracket(bc, bc, d.h).scale(Fraction(1, 2))
    return ExtensionData(d.g, d.h, alpha, rho)


@dataclass(frozen=True)
class EquivalenceWitness:
    """A map ``b: g -> h`` with ``transform(source, b) == target``."""

    b: LinearMap

    def validates(self, d1: ExtensionData, d2: ExtensionData) -> bool:
        return transform(d1, self.b) == d2

    def isomorphism(self, d1: ExtensionData) -> LinearMap:
        """``build(d1).e -> build(d2).e``, ``X + H -> X + H - b(X)``."""
        ng, nh = d1.g.dim, d1.h.dim
        n = ng + nh
        cols = []
        for j in range(ng):
            col = list(unit_vector(n, j))
            for k, c in enumerate(self.b.matrix.column(j)):
                col[ng + k] -= c
            cols.append(tuple(col))
        cols += [unit_vector(n, ng + k) for k in range(nh)]
        return LinearMap(Matrix.from_columns(cols, n))


def center_module(g: LieAlgebra, h: LieAlgebra, alpha: Sequence[Matrix],
                  Z: Optional[Subspace] = None) -> Representation:
    """``Z(h)`` as a g-module through ``alpha`` (center coordinates in its echelon basis)."""
    Z = center(h) if Z is None else Z
    return Representation(g, Z.dim, tuple(restrict_to_subspace(a, Z) for a in alpha))


def _embed_center(Z: Subspace, phi: SkewCochain) -> SkewCochain:
    return phi.map_values(Z.matrix())


def _center_valued(Z: Subspace, phi: SkewCochain) -> Optional[SkewCochain]:
    vals = []
    for v in phi.values:
        c = Z.coordinates(v)
        if c is None:
            return None
        vals.append(c)
    return SkewCochain(phi.degree, phi.source_dim, Z.dim, tuple(vals))


def equivalence_witness(d1: ExtensionData, d2: ExtensionData):
    """``(witness or None, reason)``.

    Stage 1 solves ``ad b0(X) = alpha2_X - alpha1_X`` per basis element.  The
    remaining freedom is a Z(h)-valued ``z``, under which rho shifts by
    ``delta z`` only, so stage 2 is a coboundary test with Z(h) coefficients.
    """
    if d1.g != d2.g or d1.h != d2.h:
        raise ValueError("data over different g or h")
    g, h = d1.g, d1.h
    cols = []
    for j in range(g.dim):
        v = solve_ad(h, d2.alpha[j] - d1.alpha[j])
        if v is None:
            return None, (f"not equivalent: alpha differs by a non-inner derivation at "
                          f"{g.basis_labels[j]}")
        cols.append(v)
    b0 = Matrix.from_columns(cols, h.dim)
    mid = transform(d1, b0)
    Z = center(h)
    residual = _center_valued(Z, d2.rho - mid.rho)
    if residual is None:
        return None, "not equivalent: rho difference is not central"
    module = center_module(g, h, d1.alpha, Z)
    z = solve_coboundary(module, residual) if not residual.is_zero() else \
        SkewCochain.zero(1, g.dim, Z.dim)
    if z is None:
        return None, "not equivalent: class difference nonzero in H^2"
    b = b0 + Z.matrix() @ z.to_linear_map().matrix if Z.dim else b0
    w = EquivalenceWitness(LinearMap(b))
    if not w.validates(d1, d2):
        raise AssertionError("equivalence witness failed validation")
    return w, "equivalent"


def equivalent(d1: ExtensionData, d2: ExtensionData) -> Optional[EquivalenceWitness]:
    return equivalence_witness(d1, d2)[0]


def zero_rho(g: LieAlgebra, h: LieAlgebra) -> SkewCochain:
    return SkewCochain.zero(2, g.dim, h.dim)


def semidirect(g: LieAlgebra, h: LieAlgebra, action) -> Extension:
    """Split extension from a homomorphism ``g -> der(h)``."""
    mats = action.action if isinstance(action, Representation) else tuple(action)
    if len(mats) != g.dim:
        raise DimensionError("one action matrix per basis element of g is required")
    for i, M in enumerate(mats):
        if M.shape != (h.dim, h.dim) or derivation_defect(h, M):
            raise ValueError(f"action of {g.basis_labels[i]} is not a derivation of {h.name}")
    bad = representation_defects(g, mats)
    if bad:
        raise ValueError(f"action is not a homomorphism at pairs {bad}")
    return build(ExtensionData(g, h, mats, zero_rho(g, h)), name=f"{g.name}x|{h.name}")


def verify_split(d: ExtensionData, b: Union[LinearMap, Matrix]) -> bool:
    """Check ``rho == -delta_alpha b - [b,b]/2`` exactly for the certificate ``b``."""
    B = b.matrix if isinstance(b, LinearMap) else b
    if B.shape != (d.h.dim, d.g.dim):
        raise DimensionError("certificate must map g to h")
    bc = cochain_of(B)
    rhs = -(delta(d.g, d.alpha, bc)) - wedge_bracket(bc, bc, d.h).scale(Fraction(1, 2))
    return d.rho == rhs


def decide_split_abelian(d: ExtensionData) -> Optional[LinearMap]:
    """For abelian h the splitting equation is linear: solve ``rho = -delta_alpha b``."""
    if not d.h.is_abelian():
        raise UndecidableError("undecidable here; supply certificate (h is not abelian)")
    D = delta_matrix(d.g, d.alpha, 1)
    res = solve(D, tuple(-a for a in d.rho.as_vector()))
    if res is None:
        return None
    b = SkewCochain.from_vector(1, d.g.dim, d.h.dim, res[0]).to_linear_map()
    assert verify_split(d, b)
    return b


@dataclass(frozen=True)
class OuterAction:
    """A homomorphism ``g -> out(h)``, one out-coordinate vector per basis element of g."""

    g: LieAlgebra
    out_h: OuterAlgebra = field(compare=False)
    images: tuple

    def __post_init__(self):
        images = tuple(tuple(Fraction(a) for a in v) for v in self.images)
        object.__setattr__(self, "images", images)
        q = self.out_h.quotient_dim
        if len(images) != self.g.dim or any(len(v) != q for v in images):
            raise DimensionError("outer action needs one out(h) vector per basis element of g")
        O = self.out_h.bracket_table
        for i, j in combinations(range(self.g.dim), 2):
            lhs = lincomb(self.g.basis_bracket(i, j), images, q)
            if lhs != O.bracket(images[i], images[j]):
                raise ValueError(f"outer action is not a homomorphism at "
                                 f"({self.g.basis_labels[i]},{self.g.basis_labels[j]})")

    @property
    def h(self) -> LieAlgebra:
        return self.out_h.source

    @classmethod
    def zero(cls, g: LieAlgebra, h: Union[LieAlgebra, OuterAlgebra]) -> "OuterAction":
        O = h if isinstance(h, OuterAlgebra) else OuterAlgebra(h)
        return cls(g, O, (zero_vector(O.quotient_dim),) * g.dim)

    @classmethod
    def from_derivations(cls, g: LieAlgebra, h: Union[LieAlgebra, OuterAlgebra],
                         alpha: Sequence[Matrix]) -> "OuterAction":
        """The classes of the derivations ``alpha_X`` in out(h)."""
        O = h if isinstance(h, OuterAlgebra) else OuterAlgebra(h)
        return cls(g, O, tuple(O.project(a) for a in alpha))

    def lift(self) -> tuple:
        """The stored echelon lift ``alpha_X`` for each basis element."""
        return tuple(self.out_h.lift_matrix(v) for v in self.images)

    def center_module(self) -> Representation:
        return Representation(self.g, self.out_h.center.dim,
                              tuple(self.out_h.center_matrix(v) for v in self.images))


def induced_outer_action(d: ExtensionData, out_h: Optional[OuterAlgebra] = None) -> OuterAction:
    return OuterAction.from_derivations(d.g, out_h or OuterAlgebra(d.h), d.alpha)


def solve_curvature(g: LieAlgebra, h: LieAlgebra, alpha: Sequence[Matrix]) -> SkewCochain:
    """rho with ``ad rho(X,Y) = [alpha_X,alpha_Y] - alpha_[X,Y]``, zero along the center."""

    def value(t):
        i, j = t
        M = commutator(alpha[i], alpha[j])
        for k, c in enumerate(g.basis_bracket(i, j)):
            if c:
                M = M - alpha[k] * c
        v = solve_ad(h, M)
        if v is None:
            raise ValueError(f"[alpha_X,alpha_Y] - alpha_[X,Y] is not inner at "
                             f"({g.basis_labels[i]},{g.basis_labels[j]})")
        return v

    return SkewCochain.from_function(2, g.dim, h.dim, value)


def _normalize_lift(abar: OuterAction, lift) -> tuple:
    if lift is None:
        return abar.lift()
    O = abar.out_h
    if isinstance(lift, LinearMap):
        mats = tuple(O.derivation_matrix(lift.matrix.column(j)) for j in range(abar.g.dim))
    else:
        mats = tuple(lift)
    if len(mats) != abar.g.dim:
        raise DimensionError("lift needs one derivation per basis element of g")
    for j, M in enumerate(mats):
        if O.project(M) != abar.images[j]:
            raise ValueError(f"lift does not project to the outer action at {abar.g.basis_labels[j]}")
    return mats


def from_outer_centerless(abar: OuterAction, lift=None) -> ExtensionData:
    """The unique-up-to-equivalence datum for ``abar`` when h has no center.

    ``lift`` defaults to the stored echelon lift; any other lift gives an
    equivalent datum.
    """
    g, h = abar.g, abar.h
    if abar.out_h.center.dim:
        raise ValueError(f"{h.name} has a center of dim {abar.out_h.center.dim}")
    alpha = _normalize_lift(abar, lift)
    d = ExtensionData(g, h, alpha, solve_curvature(g, h, alpha))
    report = check_data(d)
    if report:
        raise AssertionError(f"centerless datum failed validation: {report}")
    return d


def pullback(abar: OuterAction) -> Extension:
    """``{(D, X) : class(D) = abar(X)}`` inside ``der(h) (+) g`` as an extension of g by ad(h).

    Basis: ``(lift abar(X_j), X_j)`` for the basis of g, then ``(ad r, 0)`` for
    the quotient representatives r of ``h/Z(h)``.
    """
    return _pullback(abar)[0]


def pullback_embedding(abar: OuterAction) -> LinearMap:
    """The embedding of the pullback into ``der(h) (+) g`` (derivation coordinates first)."""
    return _pullback(abar)[1]


def _pullback(abar: OuterAction):
    g, h, O = abar.g, abar.h, abar.out_h
    n = h.dim
    qz = quotient(n, O.center)
    reps = qz.representatives
    adh = LieAlgebra.from_bracket(
        f"ad({h.name})", [f"ad_{h.basis_labels[i]}" for i in qz.complement_indices],
        lambda a, b: qz.project(h.bracket(reps[a], reps[b])))
    lifts = abar.lift()
    ng, na = g.dim, adh.dim

    def element(k):
        if k < ng:
            return lifts[k], unit_vector(ng, k)
        return ad_matrix(h, reps[k - ng]), zero_vector(ng)

    def coords(D, X):
        rest = D
        for c, L in zip(X, lifts):
            if c:
                rest = rest - L * c
        v = solve_ad(h, rest)
        if v is None:
            raise AssertionError("pullback element leaves der(h) x_out g")
        return tuple(X) + qz.project(v)

    def br(i, j):
        D1, X1 = element(i)
        D2, X2 = element(j)
        return coords(commutator(D1, D2), g.bracket(X1, X2))

    labels = list(g.basis_labels) + list(adh.basis_labels)
    if len(set(labels)) != len(labels):
        labels = [f"g.{l}" for l in g.basis_labels] + list(adh.basis_labels)
    e0 = LieAlgebra.from_bracket(f"pullback({h.name})", labels, br)
    inclusion, projection, section = _canonical_maps(g, adh)
    ext = Extension(g, adh, e0, inclusion, projection, section)
    cols = []
    for k in range(ng + na):
        D, X = element(k)
        cols.append(O.der_coordinates(D) + tuple(X))
    return ext, LinearMap(Matrix.from_columns(cols, O.der_dim + ng))


@dataclass(frozen=True)
class ObstructionResult:
    """``lam = delta_alpha rho`` (h-valued) and its class in ``H^3(g; Z(h))``.

    ``lam_center`` is the same cochain in center coordinates.  When the class
    vanishes, ``mu`` satisfies ``delta mu = lam_center`` and ``corrected`` is
    the valid datum ``(alpha, rho - mu)``.
    """

    alpha: tuple
    rho: SkewCochain
    lam: SkewCochain
    lam_center: SkewCochain
    klass: CohomologyClass
    vanishes: bool
    mu: Optional[SkewCochain]
    corrected: Optional[ExtensionData]


def obstruction(abar: OuterAction, lift=None, rho_choice: Optional[SkewCochain] = None
                ) -> ObstructionResult:
    g, h = abar.g, abar.h
    alpha = _normalize_lift(abar, lift)
    if rho_choice is None:
        rho = solve_curvature(g, h, alpha)
    else:
        rho = rho_choice
        if curvature_defect(g, h, alpha, rho):
            raise ValueError("rho_choice does not satisfy the curvature identity for this lift")
    lam = delta(g, alpha, rho)
    Z = abar.out_h.center
    lam_z = _center_valued(Z, lam)
    if lam_z is None:
        raise AssertionError("obstruction cochain is not center-valued")
    module = abar.center_module()
    klass = CohomologyClass(module, 3, lam_z)
    if lam_z.is_zero():
        mu = SkewCochain.zero(2, g.dim, Z.dim)
    else:
        mu = solve_coboundary(module, lam_z)
    corrected = None
    if mu is not None:
        corrected = ExtensionData(g, h, alpha, rho - _embed_center(Z, mu))
        report = check_data(corrected)
        if report:
            raise AssertionError(f"corrected datum failed validation: {report}")
    return ObstructionResult(alpha, rho, lam, lam_z, klass, mu is not None, mu, corrected)


def enumerate_extensions(abar: OuterAction) -> list:
    """One datum per class of ``H^2(g; Z(h))``: the base datum, then base + mu_i."""
    res = obstruction(abar)
    if not res.vanishes:
        raise ObstructionError(res)
    base = res.corrected
    Z = abar.out_h.center
    H2 = Cohomology(abar.center_module(), 2)
    out = [base]
    for mu in H2.representatives:
        out.append(ExtensionData(base.g, base.h, base.alpha, base.rho + _embed_center(Z, mu)))
    return out


@dataclass(frozen=True)
class CentralClass:
    """``h`` as a central extension of ``h/Z(h)``: the cocycle ``nu`` and its class.

    ``nu`` has values in center coordinates.  ``invariant`` is None unless an
    outer action was supplied; it then records whether every ``abar(X)``
    fixes the class, with ``X`` acting on 2-cochains by
    ``(X.c)(a,b) = D_Z c(a,b) - c(D a, b) - c(a, D b)`` for the lift ``D`` of
    ``abar(X)`` (``D_Z`` its restriction to the center, ``D a`` the induced map
    on ``h/Z(h)``).
    """

    quotient: LieAlgebra
    section: LinearMap
    nu: SkewCochain
    klass: CohomologyClass
    nonzero: bool
    invariant: Optional[bool] = None
    convention: str = "X.c(a,b) = D_Z c(a,b) - c(Da,b) - c(a,Db), D = echelon lift of abar(X)"


def central_class(h: LieAlgebra, abar: Optional[OuterAction] = None) -> CentralClass:
    Z = center(h)
    q, proj = quotient_algebra(h, Z, name=f"{h.name}/Z")
    s = LinearMap(quotient(h.dim, Z).lift_matrix())
    sq = s.matrix.columns()

    def nu_value(t):
        a, b = t
        w = _vec_sub(h.bracket(sq[a], sq[b]), s(q.basis_bracket(a, b)))
        c = Z.coordinates(w)
        if c is None:
            raise AssertionError("central extension cocycle is not center-valued")
        return c

    nu = SkewCochain.from_function(2, q.dim, Z.dim, nu_value)
    trivial = Representation.trivial(q, Z.dim)
    klass = CohomologyClass(trivial, 2, nu)
    nonzero = not klass.is_zero()
    invariant = None
    if abar is not None:
        if abar.h != h:
            raise ValueError("outer action is for a different algebra")
        invariant = True
        for j, D in enumerate(abar.lift()):
            Dq = Matrix.from_columns([proj(D.apply(c)) for c in sq], q.dim)
            DZ = restrict_to_subspace(D, Z)
            moved = SkewCochain.from_function(
                2, q.dim, Z.dim,
                lambda t: _vec_sub(_vec_sub(DZ.apply(nu(*t)),
                                            nu.evaluate([Dq.column(t[0]), unit_vector(q.dim, t[1])])),
                                   nu.evaluate([unit_vector(q.dim, t[0]), Dq.column(t[1])])))
            if not moved.is_zero() and solve_coboundary(trivial, moved) is None:
                invariant = False
                break
    return CentralClass(q, s, nu, klass, nonzero, invariant)
