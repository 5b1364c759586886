"""Bilinear forms and the structures they induce: symplectic and Hessian forms,
their flat maps, (anti-)Hermitian pairs, the Kahler-type quadruples, invariant
forms, and the endomorphism-triple correspondences.

Form convention: matrix[i][j] = form(e_i, e_j); wedge e_i*∧e_j* contributes +1
at (i,j) and -1 at (j,i), tensor e_i*⊗e_j* contributes +1 at (i,j).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import (
    LieAlgebra,
    PreLieAlgebra,
    Representation,
    adjoint_rep,
    coadjoint_rep,
    coregular_rep,
    regular_rep,
    subadjacent,
)
from .hyper import HyperTriple, classify_hyper, ClassificationError
from .linalg import DimensionError, Matrix
from .operators import ALGEBRA, MODULE, LinMap, OperatorContext, is_rdo, nijenhuis_square_sign, _basis
from .reporting import PreconditionError, Report
from .scalars import Scalar

SYMMETRIC = "symmetric"
SKEW = "skew"


@dataclass(frozen=True)
class BilForm:
    matrix: Matrix
    symmetry: str  # symmetric | skew | none

    def __post_init__(self):
        mt = self.matrix.transpose()
        if self.symmetry == SYMMETRIC and mt != self.matrix:
            raise ValueError("matrix is not symmetric")
        if self.symmetry == SKEW and mt != -self.matrix:
            raise ValueError("matrix is not skew")

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def __call__(self, x: Matrix, y: Matrix) -> Scalar:
        return (x.transpose() * self.matrix * y)[0, 0]

    def is_nondegenerate(self) -> bool:
        return not self.matrix.det().is_zero()

    def is_real(self) -> bool:
        return self.matrix.is_real()

    @classmethod
    def from_terms(cls, dim: int, terms, symmetry: str) -> "BilForm":
        """terms: iterable of (kind, i, j, coeff), kind 'wedge' or 'tensor', 1-indexed."""
        from .linalg import _to_scalar
        from .scalars import ZERO

        m = [[ZERO] * dim for _ in range(dim)]
        for kind, i, j, co in terms:
            co = _to_scalar(co)
            if kind == "wedge":
                m[i - 1][j - 1] = m[i - 1][j - 1] + co
                m[j - 1][i - 1] = m[j - 1][i - 1] - co
            elif kind == "tensor":
                m[i - 1][j - 1] = m[i - 1][j - 1] + co
            else:
                raise ValueError(f"unknown term kind {kind!r}")
        return cls(Matrix.from_rows(m), symmetry)


def form_to_map(f: BilForm) -> LinMap:
    """The flat map x -> f(x, .) into the dual, in dual bases.

    With column coordinate vectors and <xi, y> = dot(xi, y), the map's matrix
    is the transpose of the form's matrix.
    """
    return LinMap(f.matrix.transpose(), ALGEBRA, MODULE)


def is_symplectic(g: LieAlgebra, w: BilForm) -> Report:
    """2-cocycle identity plus nondegeneracy; cross-checked against the flat
    map being a relative differential operator for the coadjoint action."""
    if w.symmetry != SKEW:
        raise ValueError("symplectic candidate must be declared skew")
    if w.dim != g.dim:
        raise DimensionError(f"form dim {w.dim} != algebra dim {g.dim}")
    rep = Report("symplectic structure")
    eb = _basis(g.dim)
    for i, j, k in itertools.combinations(range(g.dim), 3):
        x, y, z = eb[i], eb[j], eb[k]
        s = (w(g.bracket(x, y), z) + w(g.bracket(z, x), y) + w(g.bracket(y, z), x))
        ok = s.is_zero()
        rep.record("cocycle", (i + 1, j + 1, k + 1), ok, None if ok else (i + 1, j + 1, k + 1))
    rep.record("nondegenerate", (), w.is_nondegenerate())
    ctx = OperatorContext(g, coadjoint_rep(g))
    rdo = is_rdo(ctx, form_to_map(w)).passed
    rep.record("flat-map RDO (cross-check)", (), rdo)
    cocycle_ok = all(r.passed for r in rep.results if r.claim == "cocycle")
    rep.record("routes agree", (), cocycle_ok == rdo)
    return rep


def is_hessian(g: PreLieAlgebra, b: BilForm) -> Report:
    """Hessian identity plus nondegeneracy; cross-checked against the flat map
    being an RDO for the coregular action of the sub-adjacent algebra."""
    if b.symmetry != SYMMETRIC:
        raise ValueError("Hessian candidate must be declared symmetric")
    if b.dim != g.dim:
        raise DimensionError(f"form dim {b.dim} != algebra dim {g.dim}")
    rep = Report("Hessian structure")
    eb = _basis(g.dim)
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            for k in range(g.dim):
                x, y, z = eb[i], eb[j], eb[k]
                s = (b(g.product(x, y), z) - b(x, g.product(y, z))
                     - b(g.product(y, x), z) + b(y, g.product(x, z)))
                ok = s.is_zero()
                rep.record("hessian-identity", (i + 1, j + 1, k + 1), ok,
                           None if ok else (i + 1, j + 1, k + 1))
    rep.record("nondegenerate", (), b.is_nondegenerate())
    ctx = OperatorContext(subadjacent(g), coregular_rep(g))
    rdo = is_rdo(ctx, form_to_map(b)).passed
    rep.record("flat-map RDO (cross-check)", (), rdo)
    ident_ok = all(r.passed for r in rep.results if r.claim == "hessian-identity")
    rep.record("routes agree", (), ident_ok == rdo)
    if not b.is_real():
        rep.note("form has non-real entries")
    return rep


def classify_hyper_symplectic(g: LieAlgebra, w1: BilForm, w2: BilForm, w3: BilForm) -> HyperTriple:
    pre = Report("symplectic preconditions")
    for idx, w in enumerate((w1, w2, w3)):
        pre.merge(is_symplectic(g, w), f"w{idx + 1}:")
    if not pre.passed:
        raise PreconditionError("not all forms are symplectic", pre)
    ctx = OperatorContext(g, coadjoint_rep(g))
    return classify_hyper(ctx, form_to_map(w1), form_to_map(w2), form_to_map(w3))


def classify_hyper_hessian(g: PreLieAlgebra, b1: BilForm, b2: BilForm, b3: BilForm) -> HyperTriple:
    pre = Report("Hessian preconditions")
    for idx, b in enumerate((b1, b2, b3)):
        pre.merge(is_hessian(g, b), f"B{idx + 1}:")
    if not pre.passed:
        raise PreconditionError("not all forms are Hessian", pre)
    ctx = OperatorContext(subadjacent(g), coregular_rep(g))
    return classify_hyper(ctx, form_to_map(b1), form_to_map(b2), form_to_map(b3))


HERMITIAN = "hermitian"
PARA_HERMITIAN = "para-hermitian"
ANTI_HERMITIAN = "anti-hermitian"
PARA_ANTI_HERMITIAN = "para-anti-hermitian"

_VARIANTS = {
    # variant: (form symmetry, I-square sign, invariance sign)
    HERMITIAN: (SYMMETRIC, -1, 1),
    PARA_HERMITIAN: (SYMMETRIC, 1, -1),
    ANTI_HERMITIAN: (SKEW, -1, 1),
    PARA_ANTI_HERMITIAN: (SKEW, 1, -1),
}


def check_hermitian_variant(g: LieAlgebra, f: BilForm, i_map: LinMap, variant: str) -> Report:
    """f(Ix, Iy) = +/- f(x, y) per variant; I must be the variant's (para-)complex kind."""
    if variant not in _VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    symmetry, sq_sign, inv_sign = _VARIANTS[variant]
    if f.symmetry != symmetry:
        raise ValueError(f"{variant} requires a {symmetry} form")
    pre = Report(f"{variant} preconditions")
    pre.record("nondegenerate", (), f.is_nondegenerate())
    from .operators import is_nijenhuis

    pre.record("I Nijenhuis", (), is_nijenhuis(g, i_map).passed)
    pre.record("I square sign", (), nijenhuis_square_sign(g, i_map) == sq_sign)
    if not pre.passed:
        raise PreconditionError(f"{variant} preconditions failed", pre)
    rep = Report(variant)
    # f(Ix, Iy) = inv_sign * f(x,y)  <=>  I^T M I = inv_sign * M
    im = i_map.matrix
    ok = im.transpose() * f.matrix * im == f.matrix.scale(inv_sign)
    rep.record("invariance", (), ok)
    return rep


HYPER_KAHLER = "hyper-kahler"
PARA_HYPER_KAHLER = "para-hyper-kahler"
HYPER_ANTI_KAHLER = "hyper-anti-kahler"
PARA_HYPER_ANTI_KAHLER = "para-hyper-anti-kahler"

_KAHLER_EPS = {
    HYPER_KAHLER: (-1, -1, -1),
    PARA_HYPER_KAHLER: (1, 1, -1),
    HYPER_ANTI_KAHLER: (-1, -1, -1),
    PARA_HYPER_ANTI_KAHLER: (1, 1, -1),
}


@dataclass(frozen=True)
class KahlerQuad:
    form: BilForm
    i1: LinMap
    i2: LinMap
    i3: LinMap
    variant: str


def _quad_preconditions(q: KahlerQuad, dim: int) -> Report:
    pre = Report("quad preconditions")
    anti = q.i1.compose(q.i2).matrix == -(q.i2.compose(q.i1).matrix)
    pre.record("I1∘I2=-I2∘I1", (), anti)
    pre.record("I3=I1∘I2", (), q.i3.matrix == q.i1.compose(q.i2).matrix)
    want = _KAHLER_EPS[q.variant]
    ident = Matrix.identity(dim)
    for idx, ii in enumerate((q.i1, q.i2, q.i3)):
        pre.record("I square sign", (idx + 1,),
                   ii.compose(ii).matrix == ident.scale(want[idx]))
    return pre


def induced_form(f: BilForm, i_map: LinMap, symmetry: str) -> BilForm:
    """form(I(x), y) as a bilinear form with the declared symmetry."""
    return BilForm(i_map.matrix.transpose() * f.matrix, symmetry)


def check_kahler_quad(g, q: KahlerQuad) -> Report:
    """Build the three induced forms, check them symplectic (Kahler variants on a
    Lie algebra) or Hessian (anti variants on a pre-Lie algebra), classify the
    induced triple, and assert the predicted signature."""
    if q.variant not in _KAHLER_EPS:
        raise ValueError(f"unknown variant {q.variant!r}")
    anti = q.variant in (HYPER_ANTI_KAHLER, PARA_HYPER_ANTI_KAHLER)
    if anti and not isinstance(g, PreLieAlgebra):
        raise ValueError("anti-Kahler variants need an explicit pre-Lie algebra")
    if not anti and not isinstance(g, LieAlgebra):
        raise ValueError("Kahler variants need a Lie algebra")
    dim = g.dim
    pre = _quad_preconditions(q, dim)
    if not pre.passed:
        raise PreconditionError("quad preconditions failed", pre)
    rep = Report(f"{q.variant} quad")
    target_symmetry = SYMMETRIC if anti else SKEW
    forms = []
    for idx, ii in enumerate((q.i1, q.i2, q.i3)):
        try:
            f = induced_form(q.form, ii, target_symmetry)
        except ValueError:
            rep.record("induced form symmetry", (idx + 1,), False)
            return rep
        rep.record("induced form symmetry", (idx + 1,), True)
        sub = is_hessian(g, f) if anti else is_symplectic(g, f)
        rep.record("induced form Hessian" if anti else "induced form symplectic",
                   (idx + 1,), sub.passed)
        forms.append(f)
    if not rep.passed:
        return rep
    try:
        triple = (classify_hyper_hessian(g, *forms) if anti
                  else classify_hyper_symplectic(g, *forms))
    except (ClassificationError, PreconditionError) as exc:
        rep.record("induced triple classifies", (), False, detail=str(exc))
        return rep
    rep.record("induced triple classifies", (), True)
    rep.record("predicted signature", tuple(_KAHLER_EPS[q.variant]),
               triple.eps == _KAHLER_EPS[q.variant],
               detail=f"got eps={triple.eps}")
    return rep


def is_invariant_form(g, f: BilForm) -> Report:
    """Invariance of a form: ad-invariance of a symmetric form on a Lie algebra,
    or the pre-Lie invariance of a skew form; each cross-checked through the
    flat-map conjugation identity."""
    rep = Report("invariant form")
    rep.record("nondegenerate", (), f.is_nondegenerate())
    eb = _basis(g.dim)
    if isinstance(g, LieAlgebra):
        if f.symmetry != SYMMETRIC:
            raise ValueError("ad-invariance check needs a symmetric form")
        # B([x,y],z) = B(x,[y,z]) on basis triples
        direct_ok = True
        for i in range(g.dim):
            for j in range(g.dim):
                for k in range(g.dim):
                    s = f(g.bracket(eb[i], eb[j]), eb[k]) - f(eb[i], g.bracket(eb[j], eb[k]))
                    if not s.is_zero():
                        direct_ok = False
                        rep.record("ad-invariance", (i + 1, j + 1, k + 1), False,
                                   (i + 1, j + 1, k + 1))
        if direct_ok:
            rep.record("ad-invariance", (), True)
        # conjugation identity: ad*_x B#(y) = B#(ad_x y)
        sharp = form_to_map(f)
        coad = coadjoint_rep(g)
        ad = adjoint_rep(g)
        conj_ok = all(
            coad.mats[i] * sharp.matrix == sharp.matrix * ad.mats[i]
            for i in range(g.dim)
        )
        rep.record("conjugation identity (cross-check)", (), conj_ok)
        rep.record("routes agree", (), direct_ok == conj_ok)
    elif isinstance(g, PreLieAlgebra):
        if f.symmetry != SKEW:
            raise ValueError("pre-Lie invariance check needs a skew form")
        gc = subadjacent(g)
        direct_ok = True
        for i in range(g.dim):
            for j in range(g.dim):
                for k in range(g.dim):
                    s = f(g.product(eb[i], eb[j]), eb[k]) + f(eb[j], gc.bracket(eb[i], eb[k]))
                    if not s.is_zero():
                        direct_ok = False
                        rep.record("prelie-invariance", (i + 1, j + 1, k + 1), False,
                                   (i + 1, j + 1, k + 1))
        if direct_ok:
            rep.record("prelie-invariance", (), True)
        # conjugation identity: L*_x w_nat(y) = w_nat(ad_x y)
        nat = form_to_map(f)
        coreg = coregular_rep(g)
        adc = adjoint_rep(gc)
        conj_ok = all(
            coreg.mats[i] * nat.matrix == nat.matrix * adc.mats[i]
            for i in range(g.dim)
        )
        rep.record("conjugation identity (cross-check)", (), conj_ok)
        rep.record("routes agree", (), direct_ok == conj_ok)
    else:
        raise TypeError("expected a LieAlgebra or PreLieAlgebra")
    return rep


def endomorphism_symmetry(f: BilForm, phi: LinMap, kind: str) -> bool:
    """Whether the composite form f(phi(x), y) is symmetric or skew."""
    if not f.is_nondegenerate():
        raise PreconditionError("form must be nondegenerate")
    m = phi.matrix.transpose() * f.matrix  # entry (i,j) = f(phi(e_i), e_j)
    if kind == SYMMETRIC:
        return m.transpose() == m
    if kind == SKEW:
        return m.transpose() == -m
    raise ValueError(f"unknown kind {kind!r}")


def _is_lie_derivation(g: LieAlgebra, d: LinMap) -> Report:
    rep = Report("Lie derivation")
    eb = _basis(g.dim)
    dm = d.matrix
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = dm * g.basis_bracket(i, j)
            rhs = g.bracket(dm * eb[i], eb[j]) + g.bracket(eb[i], dm * eb[j])
            ok = lhs == rhs
            rep.record("derivation", (i + 1, j + 1), ok, None if ok else (i + 1, j + 1))
    return rep


def _is_prelie_derivation(g: PreLieAlgebra, d: LinMap) -> Report:
    rep = Report("pre-Lie derivation")
    eb = _basis(g.dim)
    dm = d.matrix
    for i in range(g.dim):
        for j in range(g.dim):
            lhs = dm * g.basis_product(i, j)
            rhs = g.product(dm * eb[i], eb[j]) + g.product(eb[i], dm * eb[j])
            ok = lhs == rhs
            rep.record("derivation", (i + 1, j + 1), ok, None if ok else (i + 1, j + 1))
    return rep


LIE_B = "lie-B"
PRELIE_OMEGA = "prelie-omega"


def endo_triple_correspondence(g, f: BilForm, d1: LinMap, d2: LinMap, d3: LinMap,
                               setting: str) -> Report:
    """Both directions of the correspondence between endomorphism triples and
    hyper form triples, plus the flat-map factorization corollaries.

    lie-B: ad-invariant symmetric B, skew endomorphism Lie derivations, induced
    skew forms checked as a hyper symplectic structure.
    prelie-omega: invariant skew omega, symmetric endomorphism pre-Lie
    derivations, induced symmetric forms checked as a hyper Hessian structure.
    """
    ds = (d1, d2, d3)
    pre = Report("correspondence preconditions")
    if setting == LIE_B:
        if not isinstance(g, LieAlgebra):
            raise TypeError("lie-B setting needs a Lie algebra")
        pre.merge(is_invariant_form(g, f), "B:")
        endo_kind = SKEW
        for idx, d in enumerate(ds):
            pre.record("skew endomorphism", (idx + 1,), endomorphism_symmetry(f, d, endo_kind))
            pre.merge(_is_lie_derivation(g, d), f"d{idx + 1}:")
    elif setting == PRELIE_OMEGA:
        if not isinstance(g, PreLieAlgebra):
            raise TypeError("prelie-omega setting needs a pre-Lie algebra")
        pre.merge(is_invariant_form(g, f), "omega:")
        endo_kind = SYMMETRIC
        for idx, d in enumerate(ds):
            pre.record("symmetric endomorphism", (idx + 1,),
                       endomorphism_symmetry(f, d, endo_kind))
            pre.merge(_is_prelie_derivation(g, d), f"d{idx + 1}:")
    else:
        raise ValueError(f"unknown setting {setting!r}")
    for idx, d in enumerate(ds):
        try:
            d.inv()
            pre.record("invertible", (idx + 1,), True)
        except Exception:
            pre.record("invertible", (idx + 1,), False)
    if not pre.passed:
        raise PreconditionError("correspondence preconditions failed", pre)

    rep = Report(f"endomorphism-triple correspondence ({setting})")
    # endomorphism direction: classify (d1,d2,d3) against adjoint/regular action
    if setting == LIE_B:
        ctx = OperatorContext(g, adjoint_rep(g))
        form_symmetry = SKEW
    else:
        ctx = OperatorContext(subadjacent(g), regular_rep(g))
        form_symmetry = SYMMETRIC
    endo_maps = tuple(LinMap(d.matrix, ALGEBRA, MODULE) for d in ds)
    endo_ok, endo_eps, endo_detail = True, None, ""
    try:
        endo_triple = classify_hyper(ctx, *endo_maps)
        endo_eps = endo_triple.eps
    except ClassificationError as exc:
        endo_ok, endo_detail = False, str(exc)
    rep.record("endomorphism triple classifies", (), endo_ok, detail=endo_detail)

    # form direction: induced forms omega_i / B_i and their classification
    forms = []
    forms_ok, forms_eps, forms_detail = True, None, ""
    try:
        for d in ds:
            forms.append(induced_form(f, d, form_symmetry))
    except ValueError as exc:
        forms_ok, forms_detail = False, str(exc)
    if forms_ok:
        try:
            if setting == LIE_B:
                form_triple = classify_hyper_symplectic(g, *forms)
            else:
                form_triple = classify_hyper_hessian(g, *forms)
            forms_eps = form_triple.eps
        except (ClassificationError, PreconditionError) as exc:
            forms_ok, forms_detail = False, str(exc)
    rep.record("form triple classifies", (), forms_ok, detail=forms_detail)
    rep.record("directions agree", (), endo_ok == forms_ok and endo_eps == forms_eps,
               detail=f"endo eps={endo_eps}, forms eps={forms_eps}")

    # factorization corollaries (only decided in the product -1 regimes)
    if endo_ok and forms_ok and endo_eps is not None:
        fac = ds[2].matrix * ds[0].matrix.inv() * ds[1].matrix
        # factor the triple's canonical map through the invariant form's flat map
        flat = f.matrix.transpose().inv() * form_triple.hflat.matrix
        if endo_eps == (-1, -1, -1):
            rep.record("flat factorization d3∘d1^-1∘d2", (), flat == fac)
        elif endo_eps == (1, 1, -1):
            rep.record("flat factorization -d3∘d1^-1∘d2", (), flat == -fac)
    return rep
