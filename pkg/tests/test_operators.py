"""Operator predicates: differential operators, O-operators, Nijenhuis
operators, deformations, and the paired structures."""

import random

import pytest

from hyperops.algebra import (
    LieAlgebra,
    adjoint_rep,
    check_lie,
    coadjoint_rep,
    coregular_rep,
    subadjacent,
)
from hyperops.bundle import classify_triple, parse_bundle
from hyperops.corpus import export_bundle, list_examples
from hyperops.geometry import form_to_map
from hyperops.linalg import Matrix
from hyperops.operators import (
    ALGEBRA,
    MODULE,
    LinMap,
    OperatorContext,
    are_compatible,
    bracket_T,
    brackets_coincide,
    deformed_bracket,
    deformed_representation,
    dn_powers,
    inner_rdo,
    is_dn,
    is_dual_nijenhuis_pair,
    is_kd,
    is_kn,
    is_nijenhuis,
    is_o_operator,
    is_rdo,
    kn_hierarchy,
    nijenhuis_square_sign,
)
from hyperops.reporting import PreconditionError
from hyperops.scalars import Scalar


def _contexts():
    """Ambient contexts with at least one known invertible differential operator."""
    out = []
    b = parse_bundle(export_bundle("lie.L4sym"))
    g = b.algebra("g")
    ctx = OperatorContext(g, coadjoint_rep(g))
    out.append((ctx, [form_to_map(b.form(n)) for n in ("w1", "w2", "w3")]))
    b = parse_bundle(export_bundle("prelie.rot4"))
    p = b.algebra("g")
    ctx = OperatorContext(subadjacent(p), coregular_rep(p))
    out.append((ctx, [form_to_map(b.form(n)) for n in ("B1", "B2", "B3")]))
    b = parse_bundle(export_bundle("abelian.quat"))
    ctx = b.context("triv")
    out.append((ctx, [b.map(n) for n in ("mi", "mj", "mk")]))
    return out


def test_rdo_on_corpus_operators():
    for ctx, ds in _contexts():
        for d in ds:
            assert is_rdo(ctx, d).passed


def test_rdo_rejects_wrong_tags():
    ctx, _ = _contexts()[0]
    with pytest.raises(Exception):
        is_rdo(ctx, LinMap(Matrix.identity(4), MODULE, ALGEBRA))


def test_inverse_duality_both_directions():
    # an invertible map is a differential operator iff its inverse is an O-operator
    for ctx, ds in _contexts():
        for d in ds:
            assert is_rdo(ctx, d).passed == is_o_operator(ctx, d.inv()).passed
    # and a failing candidate fails on both sides
    b = parse_bundle(export_bundle("lie.L4sym"))
    g = b.algebra("g")
    ctx = OperatorContext(g, coadjoint_rep(g))
    bad = LinMap(Matrix.diag([1, 2, 3, 4]), ALGEBRA, MODULE)
    assert not is_rdo(ctx, bad).passed
    assert not is_o_operator(ctx, bad.inv()).passed


def test_inner_rdo_is_always_rdo():
    rng = random.Random(7)
    for ctx, _ in _contexts():
        for _ in range(5):
            u = Matrix.column([Scalar(rng.randint(-4, 4), rng.randint(-2, 2))
                               for _ in range(ctx.m)])
            d = inner_rdo(ctx, u)
            assert is_rdo(ctx, d).passed


def test_nijenhuis_from_corpus_triples():
    for name in ("lie.L4sym", "prelie.rot4", "abelian.quat", "abelian.para"):
        b = parse_bundle(export_bundle(name))
        t = classify_triple(b, next(iter(b.triples)))
        for i in range(3):
            rep = is_nijenhuis(t.ctx.g, t.n[i])
            assert rep.passed
            assert nijenhuis_square_sign(t.ctx.g, t.n[i]) == t.eps[i]


def test_deformed_bracket_is_lie_and_n_is_morphism():
    b = parse_bundle(export_bundle("lie.L4sym"))
    t = classify_triple(b, "omega")
    g = t.ctx.g
    for i in range(3):
        gn = deformed_bracket(g, t.n[i])
        assert check_lie(gn).passed
        # N is a morphism from the deformed bracket to the original one
        nm = t.n[i].matrix
        for a in range(g.dim):
            for c in range(a + 1, g.dim):
                lhs = nm * gn.basis_bracket(a, c)
                rhs = g.bracket(_col(g.dim, a, nm), _col(g.dim, c, nm))
                assert lhs == rhs


def _col(n, j, m):
    basis = Matrix.column([Scalar(1) if t == j else Scalar(0) for t in range(n)])
    return m * basis


def test_deformed_bracket_requires_nijenhuis():
    g = parse_bundle(export_bundle("lie.L4sym")).algebra("g")
    bad = LinMap(Matrix.from_rows(
        [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]]), ALGEBRA, ALGEBRA)
    if not is_nijenhuis(g, bad).passed:
        with pytest.raises(PreconditionError):
            deformed_bracket(g, bad)


def test_dual_nijenhuis_and_deformed_representation():
    b = parse_bundle(export_bundle("lie.L4sym"))
    t = classify_triple(b, "omega")
    for i in range(3):
        assert is_dual_nijenhuis_pair(t.ctx, t.n[i], t.s[i]).passed
        varrho = deformed_representation(t.ctx, t.n[i], t.s[i])
        assert varrho.check().passed


def test_bracket_T_builds_prelie_and_subadjacent():
    b = parse_bundle(export_bundle("lie.L4sym"))
    t = classify_triple(b, "omega")
    prelie, sub = bracket_T(t.ctx, t.t[0])
    from hyperops.algebra import check_prelie
    assert check_prelie(prelie).passed
    assert check_lie(sub).passed


def test_brackets_coincide_on_kn_data():
    b = parse_bundle(export_bundle("prelie.rot4"))
    t = classify_triple(b, "B")
    # for i != k, (T_i, S_k, N_k) satisfies N∘T = T∘S
    rep = brackets_coincide(t.ctx, t.t[0], t.s[1], t.n[1])
    assert rep.passed


def test_brackets_coincide_names_basis_vector_on_mismatch():
    b = parse_bundle(export_bundle("prelie.rot4"))
    t = classify_triple(b, "B")
    with pytest.raises(PreconditionError) as exc:
        brackets_coincide(t.ctx, t.t[0], t.s[0].scale(Scalar(2)), t.n[0])
    assert "basis vector" in str(exc.value)


def test_dn_kd_kn_on_derived_data():
    for name in ("lie.L4sym", "prelie.rot4"):
        b = parse_bundle(export_bundle(name))
        t = classify_triple(b, next(iter(b.triples)))
        for i in range(3):
            for k in range(3):
                if k == i:
                    continue
                assert is_kd(t.ctx, t.t[i], t.d[k]).passed
                assert is_dn(t.ctx, t.d[i], t.n[k]).passed
                assert is_kn(t.ctx, t.t[i], t.s[k], t.n[k]).passed


def test_kd_implies_kn():
    # every KD pair yields the KN structure (T, d∘T, T∘d)
    for name in ("lie.L4sym", "prelie.rot4", "abelian.quat"):
        b = parse_bundle(export_bundle(name))
        t = classify_triple(b, next(iter(b.triples)))
        for i in range(3):
            for k in range(3):
                if k == i:
                    continue
                assert is_kd(t.ctx, t.t[i], t.d[k]).passed
                s = t.d[k].compose(t.t[i])
                n = t.t[i].compose(t.d[k])
                assert is_kn(t.ctx, t.t[i], s, n).passed


def test_compatibility_and_hierarchy():
    b = parse_bundle(export_bundle("lie.L4sym"))
    t = classify_triple(b, "omega")
    assert are_compatible(t.ctx, t.t[0], t.t[1]).passed
    assert kn_hierarchy(t.ctx, t.t[0], t.s[1], t.n[1], kmax=3).passed
    assert dn_powers(t.ctx, t.d[0], t.n[1], kmax=4).passed


def test_power_and_compose_shapes():
    b = parse_bundle(export_bundle("lie.L4sym"))
    t = classify_triple(b, "omega")
    with pytest.raises(Exception):
        t.d[0].power(2)  # algebra -> module is not an endomorphism
    assert t.n[0].power(0).matrix == Matrix.identity(4)
