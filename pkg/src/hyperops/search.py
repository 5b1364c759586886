"""Solve for the full affine space of forms of a given kind on an algebra and
decide whether a nondegenerate solution exists.

Coordinates for the symmetry classes are row-major over the upper triangle:
skew uses the n(n-1)/2 strict upper entries, symmetric the n(n+1)/2 entries
on or above the diagonal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import LieAlgebra, PreLieAlgebra, subadjacent
from .geometry import SKEW, SYMMETRIC, BilForm
from .linalg import AffineSolutionSpace, DimensionError, Matrix, Poly, generic_determinant, solve_affine
from .operators import _basis
from .scalars import ONE, ZERO

SYMPLECTIC = "symplectic"
HESSIAN = "hessian"
AD_INVARIANT = "ad-invariant"
PRELIE_INVARIANT = "prelie-invariant"

_TARGET_SYMMETRY = {
    SYMPLECTIC: SKEW,
    HESSIAN: SYMMETRIC,
    AD_INVARIANT: SYMMETRIC,
    PRELIE_INVARIANT: SKEW,
}


def _coords(n: int, symmetry: str) -> list[tuple[int, int]]:
    if symmetry == SKEW:
        return [(i, j) for i in range(n) for j in range(i + 1, n)]
    return [(i, j) for i in range(n) for j in range(i, n)]


def _embed(n: int, symmetry: str, coords, coord_vector) -> Matrix:
    """Coordinate vector over the upper triangle -> full n x n matrix."""
    rows = [[ZERO] * n for _ in range(n)]
    for (i, j), v in zip(coords, coord_vector):
        rows[i][j] = v
        if symmetry == SKEW:
            rows[j][i] = -v
        elif i != j:
            rows[j][i] = v
    return Matrix.from_rows(rows)


def _coeff_matrix(n: int, symmetry: str, coords) -> list[Matrix]:
    """Basis of the symmetry class as matrices, one per coordinate."""
    unit = [ZERO] * len(coords)
    out = []
    for k in range(len(coords)):
        unit[k] = ONE
        out.append(_embed(n, symmetry, coords, unit))
        unit[k] = ZERO
    return out


@dataclass(frozen=True)
class FormSpaceResult:
    algebra: object
    target: str
    symmetry: str
    coords: tuple  # coordinate index pairs (0-indexed)
    space: AffineSolutionSpace
    generic_det: Poly

    @property
    def exists_nondegenerate(self) -> bool:
        return not self.generic_det.is_zero()

    @property
    def dim(self) -> int:
        return self.space.dim

    def form_matrix(self, coord_vector) -> Matrix:
        return _embed(self.algebra.dim, self.symmetry, self.coords, coord_vector)

    def coords_of(self, f: BilForm):
        return tuple(f.matrix[i, j] for (i, j) in self.coords)

    def contains(self, f: BilForm) -> bool:
        """Membership test: does the affine space contain this form's coordinates?"""
        target = self.coords_of(f)
        diff = [t - p for t, p in zip(target, self.space.particular)]
        if not self.space.basis:
            return all(v.is_zero() for v in diff)
        a = Matrix(len(target), self.space.dim,
                   [b[k] for k in range(len(target)) for b in self.space.basis])
        return solve_affine(a, diff) is not None


def _target_rows(g, target: str, coeff_mats, n: int):
    """One linear condition row per (basis triple, matrix coordinate)."""
    eb = _basis(n)
    rows = []
    if target == SYMPLECTIC:
        assert isinstance(g, LieAlgebra)
        for i, j, k in itertools.combinations(range(n), 3):
            x, y, z = eb[i], eb[j], eb[k]
            row = []
            for m in coeff_mats:
                def f(a, b, m=m):
                    return (a.transpose() * m * b)[0, 0]
                row.append(f(g.bracket(x, y), z) + f(g.bracket(z, x), y) + f(g.bracket(y, z), x))
            rows.append(row)
    elif target == HESSIAN:
        assert isinstance(g, PreLieAlgebra)
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(n):
                    x, y, z = eb[i], eb[j], eb[k]
                    row = []
                    for m in coeff_mats:
                        def f(a, b, m=m):
                            return (a.transpose() * m * b)[0, 0]
                        row.append(f(g.product(x, y), z) - f(x, g.product(y, z))
                                   - f(g.product(y, x), z) + f(y, g.product(x, z)))
                    rows.append(row)
    elif target == AD_INVARIANT:
        assert isinstance(g, LieAlgebra)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    x, y, z = eb[i], eb[j], eb[k]
                    row = []
                    for m in coeff_mats:
                        def f(a, b, m=m):
                            return (a.transpose() * m * b)[0, 0]
                        row.append(f(g.bracket(x, y), z) - f(x, g.bracket(y, z)))
                    rows.append(row)
    elif target == PRELIE_INVARIANT:
        assert isinstance(g, PreLieAlgebra)
        gc = subadjacent(g)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    x, y, z = eb[i], eb[j], eb[k]
                    row = []
                    for m in coeff_mats:
                        def f(a, b, m=m):
                            return (a.transpose() * m * b)[0, 0]
                        row.append(f(g.product(x, y), z) + f(y, gc.bracket(x, z)))
                    rows.append(row)
    else:
        raise ValueError(f"unknown target {target!r}")
    return rows


def solve_forms(g, target: str) -> FormSpaceResult:
    """Parametrize the symmetry class, assemble the linear system from basis
    identities, solve exactly, and decide nondegeneracy symbolically."""
    symmetry = _TARGET_SYMMETRY.get(target)
    if symmetry is None:
        raise ValueError(f"unknown target {target!r}")
    if target in (SYMPLECTIC, AD_INVARIANT) and not isinstance(g, LieAlgebra):
        raise TypeError(f"target {target} needs a Lie algebra")
    if target in (HESSIAN, PRELIE_INVARIANT) and not isinstance(g, PreLieAlgebra):
        raise TypeError(f"target {target} needs a pre-Lie algebra")
    n = g.dim
    coords = _coords(n, symmetry)
    coeff_mats = _coeff_matrix(n, symmetry, coords)
    rows = _target_rows(g, target, coeff_mats, n)
    if rows:
        a = Matrix.from_rows(rows)
    else:
        a = Matrix.zero(1, len(coords))
    space = solve_affine(a, [ZERO] * a.rows)
    # homogeneous system is always feasible
    assert space is not None

    # embed coordinates as full matrices for the generic determinant
    matrix_space = AffineSolutionSpace(
        _embed(n, symmetry, coords, space.particular).entries(),
        tuple(_embed(n, symmetry, coords, b).entries() for b in space.basis),
    )
    det = generic_determinant(matrix_space, n)
    return FormSpaceResult(g, target, symmetry, tuple(coords), space, det)


def instantiate(result: FormSpaceResult, params) -> BilForm:
    """Concrete form particular + sum params_k basis_k with its symmetry tag."""
    if len(params) != result.dim:
        raise DimensionError(f"need {result.dim} parameters, got {len(params)}")
    coord_vector = result.space.point(list(params))
    return BilForm(result.form_matrix(coord_vector), result.symmetry)
