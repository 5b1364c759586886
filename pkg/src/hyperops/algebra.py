"""Structure-constant Lie and pre-Lie algebras and their standard representations.

Conventions (all 0-indexed internally, 1-indexed in reports and I/O):
  Lie:     [e_i, e_j] = sum_k c[i][j][k] e_k
  pre-Lie: e_i . e_j  = sum_k p[i][j][k] e_k
  Representation matrices act on column coordinate vectors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import DimensionError, Matrix
from .reporting import Report
from .scalars import ZERO, Scalar


def _tensor(dim, data) -> tuple:
    """Normalize a nested structure-constant tensor to immutable Scalars."""
    from .linalg import _to_scalar

    out = []
    for i in range(dim):
        plane = []
        for j in range(dim):
            plane.append(tuple(_to_scalar(v) for v in data[i][j]))
            if len(plane[-1]) != dim:
                raise DimensionError(f"tensor slice ({i},{j}) has wrong length")
        out.append(tuple(plane))
    return tuple(out)


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    c: tuple  # c[i][j][k]

    def __post_init__(self):
        object.__setattr__(self, "c", _tensor(self.dim, self.c))

    @classmethod
    def from_brackets(cls, dim: int, brackets: dict) -> "LieAlgebra":
        """brackets maps 1-indexed (i, j) with i < j to {k: coeff}; antisymmetry filled in."""
        c = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        from .linalg import _to_scalar

        for (i, j), comps in brackets.items():
            for k, v in comps.items():
                v = _to_scalar(v)
                c[i - 1][j - 1][k - 1] = v
                c[j - 1][i - 1][k - 1] = -v
        return cls(dim, c)

    def bracket(self, x: Matrix, y: Matrix) -> Matrix:
        """Bracket of coordinate column vectors."""
        out = [ZERO] * self.dim
        for i in range(self.dim):
            xi = x[i, 0]
            if not xi:
                continue
            for j in range(self.dim):
                yj = y[j, 0]
                if not yj:
                    continue
                for k in range(self.dim):
                    if self.c[i][j][k]:
                        out[k] = out[k] + xi * yj * self.c[i][j][k]
        return Matrix.column(out)

    def basis_bracket(self, i: int, j: int) -> Matrix:
        return Matrix.column(self.c[i][j])


@dataclass(frozen=True)
class PreLieAlgebra:
    dim: int
    p: tuple  # p[i][j][k]

    def __post_init__(self):
        object.__setattr__(self, "p", _tensor(self.dim, self.p))

    @classmethod
    def from_products(cls, dim: int, products: dict) -> "PreLieAlgebra":
        """products maps 1-indexed (i, j) to {k: coeff}."""
        p = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        from .linalg import _to_scalar

        for (i, j), comps in products.items():
            for k, v in comps.items():
                p[i - 1][j - 1][k - 1] = _to_scalar(v)
        return cls(dim, p)

    def product(self, x: Matrix, y: Matrix) -> Matrix:
        out = [ZERO] * self.dim
        for i in range(self.dim):
            xi = x[i, 0]
            if not xi:
                continue
            for j in range(self.dim):
                yj = y[j, 0]
                if not yj:
                    continue
                for k in range(self.dim):
                    if self.p[i][j][k]:
                        out[k] = out[k] + xi * yj * self.p[i][j][k]
        return Matrix.column(out)

    def basis_product(self, i: int, j: int) -> Matrix:
        return Matrix.column(self.p[i][j])


@dataclass(frozen=True)
class Representation:
    algebra: LieAlgebra
    module_dim: int
    mats: tuple  # one module_dim x module_dim Matrix per basis element

    def __post_init__(self):
        object.__setattr__(self, "mats", tuple(self.mats))
        for m in self.mats:
            if m.rows != self.module_dim or m.cols != self.module_dim:
                raise DimensionError(
                    f"representation matrix {m.rows}x{m.cols} on module of dim {self.module_dim}"
                )
        if len(self.mats) != self.algebra.dim:
            raise DimensionError(
                f"{len(self.mats)} matrices for algebra of dim {self.algebra.dim}"
            )

    def act(self, x: Matrix) -> Matrix:
        """Matrix of rho(x) for a coordinate column vector x."""
        out = Matrix.zero(self.module_dim, self.module_dim)
        for i in range(self.algebra.dim):
            if x[i, 0]:
                out = out + self.mats[i].scale(x[i, 0])
        return out

    def check(self) -> Report:
        """Homomorphism law rho([e_i,e_j]) = [rho(e_i), rho(e_j)] on basis pairs."""
        rep = Report("representation homomorphism law")
        g = self.algebra
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                lhs = Matrix.zero(self.module_dim, self.module_dim)
                for k in range(g.dim):
                    if g.c[i][j][k]:
                        lhs = lhs + self.mats[k].scale(g.c[i][j][k])
                rhs = self.mats[i] * self.mats[j] - self.mats[j] * self.mats[i]
                rep.record("rep-hom", (i + 1, j + 1), lhs == rhs,
                           None if lhs == rhs else (i + 1, j + 1))
        return rep


def check_lie(g: LieAlgebra) -> Report:
    """Antisymmetry and Jacobi on all basis tuples."""
    rep = Report("Lie algebra axioms")
    n = g.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                ok = g.c[i][j][k] == -g.c[j][i][k]
                if not ok:
                    rep.record("antisymmetry", (i + 1, j + 1, k + 1), False,
                               (i + 1, j + 1, k + 1))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ei, ej, ek = (Matrix.column([ZERO] * t + [Scalar(1)] + [ZERO] * (n - t - 1))
                              for t in (i, j, k))
                s = (g.bracket(g.bracket(ei, ej), ek)
                     + g.bracket(g.bracket(ek, ei), ej)
                     + g.bracket(g.bracket(ej, ek), ei))
                if not s.is_zero():
                    rep.record("jacobi", (i + 1, j + 1, k + 1), False, (i + 1, j + 1, k + 1))
    if not rep.results:
        rep.record("lie-axioms", (), True)
    return rep


def check_prelie(g: PreLieAlgebra) -> Report:
    """Left-symmetry of the associator on all basis triples."""
    rep = Report("pre-Lie identity")
    n = g.dim
    basis = [Matrix.column([ZERO] * t + [Scalar(1)] + [ZERO] * (n - t - 1)) for t in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                x, y, z = basis[i], basis[j], basis[k]
                a = g.product(g.product(x, y), z) - g.product(x, g.product(y, z))
                b = g.product(g.product(y, x), z) - g.product(y, g.product(x, z))
                if a != b:
                    rep.record("left-symmetry", (i + 1, j + 1, k + 1), False,
                               (i + 1, j + 1, k + 1))
    if not rep.results:
        rep.record("prelie-identity", (), True)
    return rep


def subadjacent(g: PreLieAlgebra) -> LieAlgebra:
    """Commutator Lie algebra of a pre-Lie algebra."""
    n = g.dim
    c = [
        [[g.p[i][j][k] - g.p[j][i][k] for k in range(n)] for j in range(n)]
        for i in range(n)
    ]
    return LieAlgebra(n, c)


def regular_rep(g: PreLieAlgebra) -> Representation:
    """Left multiplications L(e_i) as a representation of the sub-adjacent algebra."""
    n = g.dim
    mats = [Matrix(n, n, [g.p[i][j][k] for k in range(n) for j in range(n)]) for i in range(n)]
    return Representation(subadjacent(g), n, mats)


def adjoint_rep(g: LieAlgebra) -> Representation:
    n = g.dim
    mats = [Matrix(n, n, [g.c[i][j][k] for k in range(n) for j in range(n)]) for i in range(n)]
    return Representation(g, n, mats)


def dual_rep(r: Representation) -> Representation:
    """Dual action rho*(x) = -rho(x)^T on the dual module."""
    return Representation(r.algebra, r.module_dim, tuple(-m.transpose() for m in r.mats))


def coadjoint_rep(g: LieAlgebra) -> Representation:
    return dual_rep(adjoint_rep(g))


def coregular_rep(g: PreLieAlgebra) -> Representation:
    return dual_rep(regular_rep(g))


def trivial_rep(g: LieAlgebra, module_dim: int) -> Representation:
    return Representation(g, module_dim, tuple(Matrix.zero(module_dim, module_dim)
                                               for _ in range(g.dim)))


def abelian(dim: int) -> LieAlgebra:
    z = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    return LieAlgebra(dim, z)
