"""Forms, flat maps, Hermitian variants, Kahler-type quadruples, invariant
forms, and the endomorphism-triple correspondence."""

import pytest

from hyperops.algebra import LieAlgebra, PreLieAlgebra, abelian, subadjacent
from hyperops.bundle import classify_triple, parse_bundle
from hyperops.corpus import broken_variant, export_bundle
from hyperops.geometry import (
    ANTI_HERMITIAN,
    HYPER_ANTI_KAHLER,
    HYPER_KAHLER,
    LIE_B,
    PARA_HYPER_KAHLER,
    PRELIE_OMEGA,
    SKEW,
    SYMMETRIC,
    BilForm,
    KahlerQuad,
    check_hermitian_variant,
    check_kahler_quad,
    classify_hyper_hessian,
    classify_hyper_symplectic,
    endo_triple_correspondence,
    endomorphism_symmetry,
    form_to_map,
    induced_form,
    is_hessian,
    is_invariant_form,
    is_symplectic,
)
from hyperops.hyper import decompose_hyper, reconstruct_hyper
from hyperops.linalg import Matrix
from hyperops.operators import ALGEBRA, MODULE, LinMap
from hyperops.reporting import PreconditionError
from hyperops.scalars import Scalar


def test_symplectic_forms_on_corpus():
    b = parse_bundle(export_bundle("lie.L4sym"))
    g = b.algebra("g")
    for name in ("w1", "w2", "w3"):
        rep = is_symplectic(g, b.form(name))
        assert rep.passed


def test_symplectic_routes_agree_on_failure_too():
    # a skew form that is not a cocycle fails both the direct route and the
    # flat-map route, and the agreement claim still passes
    b = parse_bundle(export_bundle("lie.L4sym"))
    g = b.algebra("g")
    w = BilForm.from_terms(4, [("wedge", 1, 3, Scalar(1)), ("wedge", 2, 4, Scalar(1))], SKEW)
    rep = is_symplectic(g, w)
    assert not rep.passed
    agree = [r for r in rep.results if r.claim == "routes agree"]
    assert agree and agree[0].passed


def test_hessian_forms_on_corpus():
    for name, forms in (("prelie.I4", ["B"]), ("prelie.A4", ["B"]),
                        ("prelie.rot4", ["B1", "B2", "B3"])):
        b = parse_bundle(export_bundle(name))
        g = b.algebra("g")
        for f in forms:
            rep = is_hessian(g, b.form(f))
            assert rep.passed, (name, f)


def test_hessian_flags_non_real_form():
    b = parse_bundle(export_bundle("prelie.rot4"))
    rep = is_hessian(b.algebra("g"), b.form("B3"))
    assert rep.passed
    assert any("non-real" in n for n in rep.notes)


def test_form_to_map_convention():
    # form(x, y) must equal <map(x), y> with the dual pairing as a dot product
    b = parse_bundle(export_bundle("lie.L4sym"))
    w = b.form("w1")
    nat = form_to_map(w)
    for i in range(4):
        for j in range(4):
            ei = Matrix.column([Scalar(1) if t == i else Scalar(0) for t in range(4)])
            ej = Matrix.column([Scalar(1) if t == j else Scalar(0) for t in range(4)])
            assert w(ei, ej) == (nat(ei).transpose() * ej)[0, 0]


def test_classify_hyper_symplectic_and_hessian():
    b = parse_bundle(export_bundle("lie.L4sym"))
    t = classify_hyper_symplectic(b.algebra("g"), b.form("w1"), b.form("w2"), b.form("w3"))
    assert t.eps == (1, 1, -1)
    b = parse_bundle(export_bundle("prelie.rot4"))
    t = classify_hyper_hessian(b.algebra("g"), b.form("B1"), b.form("B2"), b.form("B3"))
    assert t.eps == (-1, -1, 1)


def test_classify_rejects_non_symplectic_input():
    b = parse_bundle(export_bundle("lie.L4sym"))
    g = b.algebra("g")
    bad = BilForm.from_terms(4, [("wedge", 1, 3, Scalar(1)), ("wedge", 2, 4, Scalar(1))], SKEW)
    with pytest.raises(PreconditionError):
        classify_hyper_symplectic(g, bad, b.form("w2"), b.form("w3"))


def test_anti_hermitian_on_heisenberg_extension():
    b = parse_bundle(export_bundle("lie.heis4"))
    g = b.algebra("g")
    rep = check_hermitian_variant(g, b.form("w"), b.map("I"), ANTI_HERMITIAN)
    assert rep.passed


def test_hermitian_variant_preconditions():
    b = parse_bundle(export_bundle("lie.heis4"))
    g = b.algebra("g")
    with pytest.raises(PreconditionError):
        # I^2 = -Id, so asking for the para variant fails the square sign check
        check_hermitian_variant(g, b.form("w"), b.map("I"), "para-anti-hermitian")
    with pytest.raises(ValueError):
        check_hermitian_variant(g, b.form("w"), b.map("I"), "no-such-variant")


def _decomposed(name, tname):
    b = parse_bundle(export_bundle(name))
    t = classify_triple(b, tname)
    return b, t, decompose_hyper(t)


def test_para_hyper_kahler_quad_from_l4sym():
    b, t, dec = _decomposed("lie.L4sym", "omega")
    g = b.algebra("g")
    h = BilForm(dec.hflat.matrix.transpose(), SYMMETRIC)
    quad = KahlerQuad(h, dec.i1, dec.i2, dec.i3, PARA_HYPER_KAHLER)
    rep = check_kahler_quad(g, quad)
    assert rep.passed
    sig = [r for r in rep.results if r.claim == "predicted signature"]
    assert sig and sig[0].indices == (1, 1, -1)


def test_kahler_quad_converse_direction():
    # rebuild the triple from the quad pieces and compare operator by operator
    b, t, dec = _decomposed("lie.L4sym", "omega")
    rebuilt = reconstruct_hyper(t.ctx, dec.hflat, dec.i1, dec.i2)
    for k in range(3):
        assert rebuilt.d[k].matrix == t.d[dec.permutation[k]].matrix


def test_hyper_kahler_variant_on_quaternion_witness():
    b, t, dec = _decomposed("abelian.quat", "quat")
    g = b.algebra("a")
    h = BilForm(dec.hflat.matrix.transpose(), SYMMETRIC)
    quad = KahlerQuad(h, dec.i1, dec.i2, dec.i3, HYPER_KAHLER)
    rep = check_kahler_quad(g, quad)
    assert rep.passed


def test_kahler_quad_rejects_broken_anticommutation():
    b, t, dec = _decomposed("abelian.quat", "quat")
    g = b.algebra("a")
    h = BilForm(dec.hflat.matrix.transpose(), SYMMETRIC)
    quad = KahlerQuad(h, dec.i1, dec.i1, dec.i3, HYPER_KAHLER)
    with pytest.raises(PreconditionError):
        check_kahler_quad(g, quad)


def test_anti_kahler_needs_explicit_prelie():
    b, t, dec = _decomposed("abelian.quat", "quat")
    g = b.algebra("a")
    w = BilForm(Matrix.from_rows([[0, 1, 0, 0], [-1, 0, 0, 0],
                                  [0, 0, 0, 1], [0, 0, -1, 0]]), SKEW)
    quad = KahlerQuad(w, dec.i1, dec.i2, dec.i3, HYPER_ANTI_KAHLER)
    with pytest.raises(ValueError):
        check_kahler_quad(g, quad)


def test_invariant_forms():
    # ad-invariant form on sl2 (the trace form, rescaled)
    sl2 = LieAlgebra.from_brackets(3, {(1, 2): {2: 2}, (1, 3): {3: -2}, (2, 3): {1: 1}})
    f = BilForm(Matrix.from_rows([[2, 0, 0], [0, 0, 1], [0, 1, 0]]), SYMMETRIC)
    rep = is_invariant_form(sl2, f)
    assert rep.passed
    # breaking one entry destroys invariance, and both routes agree on that
    bad = BilForm(Matrix.from_rows([[2, 0, 0], [0, 1, 1], [0, 1, 0]]), SYMMETRIC)
    rep = is_invariant_form(sl2, bad)
    assert not rep.passed
    assert [r for r in rep.results if r.claim == "routes agree"][0].passed


def test_prelie_invariant_form():
    zero = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
    g = PreLieAlgebra(2, zero)
    w = BilForm(Matrix.from_rows([[0, 1], [-1, 0]]), SKEW)
    assert is_invariant_form(g, w).passed


def test_endomorphism_symmetry():
    f = BilForm(Matrix.identity(2), SYMMETRIC)
    rot = LinMap(Matrix.from_rows([[0, -1], [1, 0]]), ALGEBRA, ALGEBRA)
    assert endomorphism_symmetry(f, rot, SKEW)
    assert not endomorphism_symmetry(f, rot, SYMMETRIC)


def test_correspondence_lie_setting_quaternion():
    b = parse_bundle(export_bundle("abelian.quat"))
    g = b.algebra("a")
    f = b.form("B")
    ds = [LinMap(b.map(n).matrix, ALGEBRA, ALGEBRA) for n in ("mi", "mj", "mk")]
    rep = endo_triple_correspondence(g, f, *ds, LIE_B)
    assert rep.passed
    fac = [r for r in rep.results if r.claim.startswith("flat factorization")]
    assert fac and fac[0].passed


def test_correspondence_lie_setting_single_complex_structure():
    g = abelian(2)
    f = BilForm(Matrix.identity(2), SYMMETRIC)
    phi = LinMap(Matrix.from_rows([[0, -1], [1, 0]]), ALGEBRA, ALGEBRA)
    rep = endo_triple_correspondence(g, f, phi, phi, phi, LIE_B)
    assert rep.passed
    agree = [r for r in rep.results if r.claim == "directions agree"][0]
    assert "(1, 1, 1)" in agree.detail


def test_correspondence_prelie_setting():
    zero = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
    g = PreLieAlgebra(2, zero)
    w = BilForm(Matrix.from_rows([[0, 1], [-1, 0]]), SKEW)
    p = LinMap(Matrix.diag([1, -1]), ALGEBRA, ALGEBRA)
    q = LinMap(Matrix.from_rows([[0, 1], [1, 0]]), ALGEBRA, ALGEBRA)
    qp = LinMap(Matrix.from_rows([[0, -1], [1, 0]]), ALGEBRA, ALGEBRA)
    rep = endo_triple_correspondence(g, w, p, q, qp, PRELIE_OMEGA)
    assert rep.passed
    fac = [r for r in rep.results if r.claim.startswith("flat factorization")]
    assert fac and fac[0].passed


def test_correspondence_rejects_non_derivation():
    b = parse_bundle(broken_variant("non-derivation"))
    g = b.algebra("g")
    with pytest.raises(PreconditionError) as exc:
        endo_triple_correspondence(g, b.form("B"), b.map("d1"), b.map("d2"),
                                   b.map("d3"), LIE_B)
    claims = {(r.claim, r.indices) for r in exc.value.report.violations}
    assert ("d2:derivation", (1, 2)) in claims


def test_induced_form_symmetry_enforced():
    f = BilForm(Matrix.identity(2), SYMMETRIC)
    p = LinMap(Matrix.diag([1, -1]), ALGEBRA, ALGEBRA)
    with pytest.raises(ValueError):
        induced_form(f, p, SKEW)
    assert induced_form(f, p, SYMMETRIC).matrix == Matrix.diag([1, -1])
