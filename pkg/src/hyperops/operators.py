"""Operator predicates: relative differential operators, O-operators, Nijenhuis
operators, dual-Nijenhuis pairs, deformed brackets/representations, and the
DN / KD / KN structure and compatibility checks.

All identities are multilinear, so quantifying over basis tuples is exhaustive;
reports cite 1-indexed basis indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import LieAlgebra, PreLieAlgebra, Representation, check_lie, check_prelie
from .linalg import DimensionError, Matrix
from .reporting import PreconditionError, Report
from .scalars import ONE, ZERO, Scalar

ALGEBRA = "algebra"
MODULE = "module"


@dataclass(frozen=True)
class OperatorContext:
    """Ambient data: a Lie algebra acting on a module through rep."""

    g: LieAlgebra
    rep: Representation

    def __post_init__(self):
        if self.rep.algebra != self.g:
            raise ValueError("representation is not over the given Lie algebra")

    @property
    def n(self) -> int:
        return self.g.dim

    @property
    def m(self) -> int:
        return self.rep.module_dim

    def dim_of(self, tag: str) -> int:
        return self.n if tag == ALGEBRA else self.m


@dataclass(frozen=True)
class LinMap:
    """An exact matrix with domain/codomain tags (algebra or module)."""

    matrix: Matrix
    domain: str
    codomain: str

    def __post_init__(self):
        if self.domain not in (ALGEBRA, MODULE) or self.codomain not in (ALGEBRA, MODULE):
            raise ValueError(f"bad tags ({self.domain}, {self.codomain})")

    def check_shape(self, ctx: OperatorContext) -> None:
        want = (ctx.dim_of(self.codomain), ctx.dim_of(self.domain))
        got = (self.matrix.rows, self.matrix.cols)
        if want != got:
            raise DimensionError(f"map {self.domain}->{self.codomain}: matrix {got} != {want}")

    def __call__(self, v: Matrix) -> Matrix:
        return self.matrix * v

    def compose(self, other: "LinMap") -> "LinMap":
        """self after other."""
        if other.codomain != self.domain:
            raise DimensionError(
                f"composition mismatch: {other.domain}->{other.codomain} then "
                f"{self.domain}->{self.codomain}"
            )
        return LinMap(self.matrix * other.matrix, other.domain, self.codomain)

    def inv(self) -> "LinMap":
        return LinMap(self.matrix.inv(), self.codomain, self.domain)

    def power(self, k: int) -> "LinMap":
        if self.domain != self.codomain:
            raise DimensionError("power of a non-endomorphism")
        m = Matrix.identity(self.matrix.rows)
        for _ in range(k):
            m = m * self.matrix
        return LinMap(m, self.domain, self.codomain)

    def scale(self, k) -> "LinMap":
        return LinMap(self.matrix.scale(k), self.domain, self.codomain)

    def __add__(self, other: "LinMap") -> "LinMap":
        if (self.domain, self.codomain) != (other.domain, other.codomain):
            raise DimensionError("adding maps with different tags")
        return LinMap(self.matrix + other.matrix, self.domain, self.codomain)

    def __neg__(self) -> "LinMap":
        return LinMap(-self.matrix, self.domain, self.codomain)


def algebra_map(m: Matrix) -> LinMap:
    return LinMap(m, ALGEBRA, ALGEBRA)


def module_map(m: Matrix) -> LinMap:
    return LinMap(m, MODULE, MODULE)


def _basis(n: int) -> list[Matrix]:
    return [Matrix.column([ONE if i == t else ZERO for i in range(n)]) for t in range(n)]


# -- single-operator predicates ---------------------------------------


def is_rdo(ctx: OperatorContext, d: LinMap) -> Report:
    """d[x,y] = rho(x)d(y) - rho(y)d(x) on all basis pairs."""
    d.check_shape(ctx)
    if (d.domain, d.codomain) != (ALGEBRA, MODULE):
        raise DimensionError("relative differential operator must map algebra -> module")
    rep = Report("relative differential operator")
    eb = _basis(ctx.n)
    for i in range(ctx.n):
        for j in range(i + 1, ctx.n):
            lhs = d(ctx.g.basis_bracket(i, j))
            rhs = ctx.rep.mats[i] * d(eb[j]) - ctx.rep.mats[j] * d(eb[i])
            ok = lhs == rhs
            rep.record("rdo", (i + 1, j + 1), ok, None if ok else (i + 1, j + 1))
    return rep


def inner_rdo(ctx: OperatorContext, u: Matrix) -> LinMap:
    """The coboundary x -> rho(x) u; always a relative differential operator."""
    cols = [ctx.rep.mats[i] * u for i in range(ctx.n)]
    m = Matrix(ctx.m, ctx.n, [cols[j][i, 0] for i in range(ctx.m) for j in range(ctx.n)])
    return LinMap(m, ALGEBRA, MODULE)


def is_o_operator(ctx: OperatorContext, t: LinMap) -> Report:
    """[Tu,Tv] = T(rho(Tu)v - rho(Tv)u) on all module basis pairs."""
    t.check_shape(ctx)
    if (t.domain, t.codomain) != (MODULE, ALGEBRA):
        raise DimensionError("O-operator must map module -> algebra")
    rep = Report("O-operator")
    vb = _basis(ctx.m)
    for i in range(ctx.m):
        for j in range(i + 1, ctx.m):
            tu, tv = t(vb[i]), t(vb[j])
            lhs = ctx.g.bracket(tu, tv)
            rhs = t(ctx.rep.act(tu) * vb[j] - ctx.rep.act(tv) * vb[i])
            ok = lhs == rhs
            rep.record("o-operator", (i + 1, j + 1), ok, None if ok else (i + 1, j + 1))
    return rep


def is_nijenhuis(g: LieAlgebra, n_map: LinMap) -> Report:
    """Vanishing Nijenhuis torsion; classification flags for N^2 = +/-Id."""
    if n_map.matrix.rows != g.dim or n_map.matrix.cols != g.dim:
        raise DimensionError(f"Nijenhuis candidate must be {g.dim}x{g.dim}")
    rep = Report("Nijenhuis operator")
    eb = _basis(g.dim)
    nm = n_map.matrix
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            nx, ny = nm * eb[i], nm * eb[j]
            lhs = g.bracket(nx, ny)
            inner = g.bracket(nx, eb[j]) + g.bracket(eb[i], ny) - nm * g.basis_bracket(i, j)
            ok = lhs == nm * inner
            rep.record("nijenhuis", (i + 1, j + 1), ok, None if ok else (i + 1, j + 1))
    sq = nm * nm
    ident = Matrix.identity(g.dim)
    if sq == -ident:
        rep.note("complex structure (N^2 = -Id)")
    elif sq == ident:
        rep.note("para-complex structure (N^2 = Id)")
    return rep


def nijenhuis_square_sign(g: LieAlgebra, n_map: LinMap) -> int | None:
    """+1 if N^2 = Id, -1 if N^2 = -Id, else None."""
    sq = n_map.matrix * n_map.matrix
    ident = Matrix.identity(g.dim)
    if sq == ident:
        return 1
    if sq == -ident:
        return -1
    return None


def deformed_bracket(g: LieAlgebra, n_map: LinMap) -> LieAlgebra:
    """[x,y]_N = [Nx,y] + [x,Ny] - N[x,y]; requires N Nijenhuis."""
    nij = is_nijenhuis(g, n_map)
    if not nij.passed:
        v = nij.violations[0]
        raise PreconditionError(f"not a Nijenhuis operator; first violation at {v.indices}", nij)
    eb = _basis(g.dim)
    nm = n_map.matrix
    c = [[[ZERO] * g.dim for _ in range(g.dim)] for _ in range(g.dim)]
    for i in range(g.dim):
        for j in range(g.dim):
            v = (g.bracket(nm * eb[i], eb[j]) + g.bracket(eb[i], nm * eb[j])
                 - nm * g.basis_bracket(i, j))
            for k in range(g.dim):
                c[i][j][k] = v[k, 0]
    return LieAlgebra(g.dim, c)


def is_dual_nijenhuis_pair(ctx: OperatorContext, n_map: LinMap, s_map: LinMap) -> Report:
    """rho(Nx)(Sv) = S(rho(Nx)v) + rho(x)(S^2 v) - S(rho(x)(Sv)) for basis x, v."""
    nij = is_nijenhuis(ctx.g, n_map)
    if not nij.passed:
        raise PreconditionError("N is not a Nijenhuis operator", nij)
    s_map.check_shape(ctx)
    rep = Report("dual-Nijenhuis pair")
    eb, vb = _basis(ctx.n), _basis(ctx.m)
    nm, sm = n_map.matrix, s_map.matrix
    for i in range(ctx.n):
        rho_nx = ctx.rep.act(nm * eb[i])
        rho_x = ctx.rep.mats[i]
        for a in range(ctx.m):
            v = vb[a]
            lhs = rho_nx * (sm * v)
            rhs = sm * (rho_nx * v) + rho_x * (sm * (sm * v)) - sm * (rho_x * (sm * v))
            ok = lhs == rhs
            rep.record("dual-nijenhuis", (i + 1, a + 1), ok, None if ok else (i + 1, a + 1))
    return rep


def deformed_representation(ctx: OperatorContext, n_map: LinMap, s_map: LinMap) -> Representation:
    """varrho(x) = rho(Nx) - [rho(x), S], a representation of (g, [.,.]_N) on V."""
    pair = is_dual_nijenhuis_pair(ctx, n_map, s_map)
    if not pair.passed:
        raise PreconditionError("(N,S) is not a dual-Nijenhuis pair", pair)
    gn = deformed_bracket(ctx.g, n_map)
    eb = _basis(ctx.n)
    nm, sm = n_map.matrix, s_map.matrix
    mats = []
    for i in range(ctx.n):
        rho_x = ctx.rep.mats[i]
        mats.append(ctx.rep.act(nm * eb[i]) - (rho_x * sm - sm * rho_x))
    return Representation(gn, ctx.m, mats)


# -- brackets induced by an O-operator --------------------------------


def bracket_T(ctx: OperatorContext, t: LinMap) -> tuple[PreLieAlgebra, LieAlgebra]:
    """Pre-Lie product u *T v = rho(Tu)v on V and its sub-adjacent bracket."""
    oo = is_o_operator(ctx, t)
    if not oo.passed:
        raise PreconditionError("T is not an O-operator", oo)
    vb = _basis(ctx.m)
    p = [[[ZERO] * ctx.m for _ in range(ctx.m)] for _ in range(ctx.m)]
    for i in range(ctx.m):
        act = ctx.rep.act(t(vb[i]))
        for j in range(ctx.m):
            w = act * vb[j]
            for k in range(ctx.m):
                p[i][j][k] = w[k, 0]
    from .algebra import subadjacent

    prelie = PreLieAlgebra(ctx.m, p)
    return prelie, subadjacent(prelie)


def _bracket_matrixwise(ctx: OperatorContext, t: LinMap, u: Matrix, v: Matrix) -> Matrix:
    return ctx.rep.act(t(u)) * v - ctx.rep.act(t(v)) * u


def brackets_coincide(ctx: OperatorContext, t: LinMap, s_map: LinMap, n_map: LinMap) -> Report:
    """[.,.]^{NoT}, the S-deformation of [.,.]^T, and {.,.}^T_varrho agree pairwise."""
    nt = n_map.compose(t)
    ts = t.compose(s_map)
    for a in range(ctx.m):
        if nt.matrix.col(a) != ts.matrix.col(a):
            raise PreconditionError(
                f"N∘T ≠ T∘S at module basis vector {a + 1}", None)
    varrho = deformed_representation(ctx, n_map, s_map)
    rep = Report("bracket coincidence")
    vb = _basis(ctx.m)
    sm = s_map.matrix
    for a in range(ctx.m):
        for b in range(a + 1, ctx.m):
            u, v = vb[a], vb[b]
            b_nt = _bracket_matrixwise(ctx, nt, u, v)
            b_ts = (_bracket_matrixwise(ctx, t, sm * u, v)
                    + _bracket_matrixwise(ctx, t, u, sm * v)
                    - sm * _bracket_matrixwise(ctx, t, u, v))
            b_vr = varrho.act(t(u)) * v - varrho.act(t(v)) * u
            ok1 = b_nt == b_ts
            ok2 = b_nt == b_vr
            rep.record("bracket-NoT-vs-S-deformed", (a + 1, b + 1), ok1,
                       None if ok1 else (a + 1, b + 1))
            rep.record("bracket-NoT-vs-varrho", (a + 1, b + 1), ok2,
                       None if ok2 else (a + 1, b + 1))
    return rep


# -- paired structures ------------------------------------------------


def is_dn(ctx: OperatorContext, d: LinMap, n_map: LinMap) -> Report:
    """DN-structure: d and d∘N are both relative differential operators, N Nijenhuis."""
    pre = Report("DN preconditions")
    pre.merge(is_rdo(ctx, d), "d:")
    pre.merge(is_nijenhuis(ctx.g, n_map), "N:")
    if not pre.passed:
        raise PreconditionError("DN preconditions failed", pre)
    rep = Report("DN-structure")
    rep.merge(is_rdo(ctx, d.compose(n_map)), "d∘N:")
    return rep


def dn_powers(ctx: OperatorContext, d: LinMap, n_map: LinMap, kmax: int) -> Report:
    """d∘N^k are relative differential operators and (d∘N^k, N^k) are DN, k=1..kmax."""
    rep = Report(f"DN powers up to {kmax}")
    for k in range(1, kmax + 1):
        nk = n_map.power(k)
        dk = d.compose(nk)
        rep.record(f"rdo(d∘N^{k})", (k,), is_rdo(ctx, dk).passed)
        rep.record(f"dn(d∘N^{k}, N^{k})", (k,), is_dn(ctx, dk, nk).passed)
    return rep


def is_kd(ctx: OperatorContext, t: LinMap, d: LinMap) -> Report:
    """KD-structure: with N = T∘d, the composite d∘N is again an RDO."""
    pre = Report("KD preconditions")
    pre.merge(is_o_operator(ctx, t), "T:")
    pre.merge(is_rdo(ctx, d), "d:")
    if not pre.passed:
        raise PreconditionError("KD preconditions failed", pre)
    n_map = t.compose(d)
    rep = Report("KD-structure")
    rep.merge(is_rdo(ctx, d.compose(n_map)), "d∘(T∘d):")
    return rep


def is_kn(ctx: OperatorContext, t: LinMap, s_map: LinMap, n_map: LinMap) -> Report:
    """KN-structure: N∘T = T∘S, brackets coincide, plus the two O-operator consequences."""
    pre = Report("KN preconditions")
    pre.merge(is_o_operator(ctx, t), "T:")
    pre.merge(is_dual_nijenhuis_pair(ctx, n_map, s_map), "(N,S):")
    if not pre.passed:
        raise PreconditionError("KN preconditions failed", pre)
    rep = Report("KN-structure")
    nt = n_map.compose(t)
    ts = t.compose(s_map)
    rep.record("N∘T=T∘S", (), nt.matrix == ts.matrix)
    if nt.matrix == ts.matrix:
        rep.merge(brackets_coincide(ctx, t, s_map, n_map))
        # consequences: T is an O-operator for (deformed bracket, varrho);
        # N∘T is an O-operator for (g, rho)
        gn = deformed_bracket(ctx.g, n_map)
        varrho = deformed_representation(ctx, n_map, s_map)
        ctx_n = OperatorContext(gn, varrho)
        rep.record("T O-operator on deformed algebra", (),
                   is_o_operator(ctx_n, t).passed)
        rep.record("N∘T O-operator", (), is_o_operator(ctx, nt).passed)
    return rep


DEFAULT_COMPAT_SAMPLE = tuple(
    (Scalar(a), Scalar(b)) for a in (1, 2, 3) for b in (1, 2, 3)
)


def are_compatible(ctx: OperatorContext, t1: LinMap, t2: LinMap,
                   sample=DEFAULT_COMPAT_SAMPLE) -> Report:
    """Mixed bilinear identity on basis pairs, plus sampled k1 T1 + k2 T2 checks."""
    pre = Report("compatibility preconditions")
    pre.merge(is_o_operator(ctx, t1), "T1:")
    pre.merge(is_o_operator(ctx, t2), "T2:")
    if not pre.passed:
        raise PreconditionError("compatibility preconditions failed", pre)
    rep = Report("compatible O-operators")
    vb = _basis(ctx.m)
    for a in range(ctx.m):
        for b in range(a + 1, ctx.m):
            u, v = vb[a], vb[b]
            lhs = ctx.g.bracket(t1(u), t2(v)) + ctx.g.bracket(t2(u), t1(v))
            rhs = (t1(ctx.rep.act(t2(u)) * v - ctx.rep.act(t2(v)) * u)
                   + t2(ctx.rep.act(t1(u)) * v - ctx.rep.act(t1(v)) * u))
            ok = lhs == rhs
            rep.record("mixed-identity", (a + 1, b + 1), ok, None if ok else (a + 1, b + 1))
    for k1, k2 in sample:
        comb = t1.scale(k1) + t2.scale(k2)
        rep.record("sampled-combination", (k1.render(), k2.render()),
                   is_o_operator(ctx, comb).passed)
    return rep


def kn_hierarchy(ctx: OperatorContext, t: LinMap, s_map: LinMap, n_map: LinMap,
                 kmax: int) -> Report:
    """N^k∘T are O-operators and pairwise compatible, for k, l <= kmax."""
    kn = is_kn(ctx, t, s_map, n_map)
    if not kn.passed:
        raise PreconditionError("(T,S,N) is not a KN-structure", kn)
    rep = Report(f"KN hierarchy up to {kmax}")
    powers = [n_map.power(k).compose(t) for k in range(kmax + 1)]
    for k in range(kmax + 1):
        rep.record(f"o-operator(N^{k}∘T)", (k,), is_o_operator(ctx, powers[k]).passed)
    for k, l in itertools.combinations(range(kmax + 1), 2):
        rep.record(f"compatible(N^{k}∘T, N^{l}∘T)", (k, l),
                   are_compatible(ctx, powers[k], powers[l], sample=()).passed)
    return rep
