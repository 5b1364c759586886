"""Dense exact matrices over Q(i) and the linear-system kernel.

Everything downstream (operator identities, cocycle systems, form searches)
reduces to the handful of primitives here: product, inverse, rank, kernel,
affine solving, and a sparse polynomial for generic-determinant tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import ONE, ZERO, Scalar, scalar


class DimensionError(ValueError):
    """Shape mismatch; message names both shapes."""


class SingularMatrixError(ValueError):
    def __init__(self, rank: int, n: int):
        self.rank = rank
        super().__init__(f"singular matrix: rank {rank} < {n}")


def _to_scalar(v) -> Scalar:
    if isinstance(v, Scalar):
        return v
    if isinstance(v, str):
        return scalar(v)
    if isinstance(v, (int, Fraction)):
        return Scalar(Fraction(v))
    raise TypeError(f"bad matrix entry {v!r}")


class Matrix:
    """Immutable dense matrix of Scalars, row-major."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        e = tuple(_to_scalar(v) for v in entries)
        if len(e) != rows * cols:
            raise DimensionError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(e)}")
        self.rows = rows
        self.cols = cols
        self._e = e

    # -- constructors --------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise DimensionError("ragged rows")
            flat.extend(row)
        return cls(r, c, flat)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def column(cls, entries: Sequence) -> "Matrix":
        return cls(len(entries), 1, entries)

    @classmethod
    def diag(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        m = [ZERO] * (n * n)
        for i, v in enumerate(entries):
            m[i * n + i] = _to_scalar(v)
        return cls(n, n, m)

    # -- access --------------------------------------------------------
    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self._e[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self._e[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return tuple(self._e[i * self.cols + j] for i in range(self.rows))

    def entries(self) -> tuple:
        return self._e

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._e == other._e
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._e))

    def __repr__(self):
        body = "; ".join(" ".join(v.render() for v in self.row(i)) for i in range(self.rows))
        return f"Matrix[{self.rows}x{self.cols}: {body}]"

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self._e)

    def is_real(self) -> bool:
        return all(v.is_real() for v in self._e)

    # -- arithmetic ----------------------------------------------------
    def _same_shape(self, other: "Matrix", op: str):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionError(
                f"{op}: shapes {self.rows}x{self.cols} and {other.rows}x{other.cols} differ"
            )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other, "add")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self._e, other._e)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other, "sub")
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self._e, other._e)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self._e])

    def scale(self, k) -> "Matrix":
        k = _to_scalar(k)
        return Matrix(self.rows, self.cols, [k * a for a in self._e])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return self.scale(other)
        if self.cols != other.rows:
            raise DimensionError(
                f"mul: shapes {self.rows}x{self.cols} and {other.rows}x{other.cols} incompatible"
            )
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                s = ZERO
                for k in range(self.cols):
                    a = ri[k]
                    if a:
                        s = s + a * other._e[k * other.cols + j]
                out.append(s)
        return Matrix(self.rows, other.cols, out)

    def __rmul__(self, k) -> "Matrix":
        return self.scale(k)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, [self[j, i] for i in range(self.cols) for j in range(self.rows)])

    # -- elimination ---------------------------------------------------
    def _rref(self):
        """Reduced row echelon form.  Returns (rows, pivot column list).

        Exact Fraction arithmetic with first-nonzero pivoting; deterministic
        and canonical (pivots normalized to 1).
        """
        m = [list(self.row(i)) for i in range(self.rows)]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = next((i for i in range(r, self.rows) if m[i][c]), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = m[r][c].inv()
            m[r] = [v * inv for v in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return m, pivots

    def rank(self) -> int:
        return len(self._rref()[1])

    def det(self) -> Scalar:
        if self.rows != self.cols:
            raise DimensionError(f"det of {self.rows}x{self.cols} matrix")
        m = [list(self.row(i)) for i in range(self.rows)]
        n = self.rows
        d = ONE
        for c in range(n):
            pr = next((i for i in range(c, n) if m[i][c]), None)
            if pr is None:
                return ZERO
            if pr != c:
                m[c], m[pr] = m[pr], m[c]
                d = -d
            d = d * m[c][c]
            inv = m[c][c].inv()
            for i in range(c + 1, n):
                if m[i][c]:
                    f = m[i][c] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return d

    def inv(self) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionError(f"inverse of {self.rows}x{self.cols} matrix")
        n = self.rows
        aug = Matrix(n, 2 * n, [
            v
            for i in range(n)
            for v in (*self.row(i), *Matrix.identity(n).row(i))
        ])
        m, pivots = aug._rref()
        npiv = sum(1 for p in pivots if p < n)
        if npiv < n:
            raise SingularMatrixError(npiv, n)
        return Matrix(n, n, [m[i][n + j] for i in range(n) for j in range(n)])

    def kernel_basis(self) -> list[tuple]:
        """Pivot-normalized basis of the right kernel, canonical ordering."""
        m, pivots = self._rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [ZERO] * self.cols
            v[fc] = ONE
            for r, pc in enumerate(pivots):
                v[pc] = -m[r][fc]
            basis.append(tuple(v))
        return basis


@dataclass(frozen=True)
class AffineSolutionSpace:
    """Solution set {particular + span(basis)} of a linear system."""

    particular: tuple
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def point(self, params: Sequence[Scalar]) -> tuple:
        if len(params) != self.dim:
            raise DimensionError(f"need {self.dim} parameters, got {len(params)}")
        out = list(self.particular)
        for t, b in zip(params, self.basis):
            t = _to_scalar(t)
            for k in range(len(out)):
                out[k] = out[k] + t * b[k]
        return tuple(out)


def solve_affine(a: Matrix, b: Sequence) -> AffineSolutionSpace | None:
    """Full solution set of A x = b, or None when infeasible."""
    b = [_to_scalar(v) for v in b]
    if len(b) != a.rows:
        raise DimensionError(f"rhs length {len(b)} != {a.rows} rows")
    aug = Matrix(a.rows, a.cols + 1, [v for i in range(a.rows) for v in (*a.row(i), b[i])])
    m, pivots = aug._rref()
    if a.cols in pivots:
        return None
    particular = [ZERO] * a.cols
    for r, pc in enumerate(pivots):
        particular[pc] = m[r][a.cols]
    basis = Matrix(a.rows, a.cols, [v for i in range(a.rows) for v in a.row(i)]).kernel_basis()
    return AffineSolutionSpace(tuple(particular), tuple(basis))


# -- sparse polynomials -----------------------------------------------


@dataclass(frozen=True)
class Poly:
    """Sparse polynomial over Q(i): exponent tuple -> nonzero coefficient."""

    variables: int
    terms: tuple = field(default=())  # tuple of (exponents, Scalar)

    @classmethod
    def constant(cls, nvars: int, c: Scalar) -> "Poly":
        c = _to_scalar(c)
        if c.is_zero():
            return cls(nvars, ())
        return cls(nvars, (((0,) * nvars, c),))

    @classmethod
    def variable(cls, nvars: int, k: int) -> "Poly":
        exp = tuple(1 if i == k else 0 for i in range(nvars))
        return cls(nvars, ((exp, ONE),))

    @classmethod
    def _from_dict(cls, nvars: int, d: dict) -> "Poly":
        terms = tuple(sorted((e, c) for e, c in d.items() if not c.is_zero()))
        return cls(nvars, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Poly") -> "Poly":
        d = dict(self.terms)
        for e, c in other.terms:
            d[e] = d.get(e, ZERO) + c
        return Poly._from_dict(self.variables, d)

    def __neg__(self) -> "Poly":
        return Poly(self.variables, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        d: dict = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(x + y for x, y in zip(e1, e2))
                d[e] = d.get(e, ZERO) + c1 * c2
        return Poly._from_dict(self.variables, d)

    def evaluate(self, values: Sequence[Scalar]) -> Scalar:
        if len(values) != self.variables:
            raise DimensionError(f"need {self.variables} values, got {len(values)}")
        out = ZERO
        for e, c in self.terms:
            t = c
            for v, k in zip(values, e):
                for _ in range(k):
                    t = t * _to_scalar(v)
            out = out + t
        return out


def _poly_det(entries: list[list[Poly]], nvars: int) -> Poly:
    """Cofactor expansion along the row with fewest nonzero entries."""
    n = len(entries)
    if n == 0:
        return Poly.constant(nvars, ONE)
    if n == 1:
        return entries[0][0]
    best = min(range(n), key=lambda i: sum(0 if p.is_zero() else 1 for p in entries[i]))
    out = Poly(nvars, ())
    for j, p in enumerate(entries[best]):
        if p.is_zero():
            continue
        minor = [
            [entries[i][k] for k in range(n) if k != j]
            for i in range(n)
            if i != best
        ]
        sub = _poly_det(minor, nvars)
        term = p * sub
        if (best + j) % 2:
            term = -term
        out = out + term
    return out


def generic_determinant(space: AffineSolutionSpace, shape: int) -> Poly:
    """det(particular + sum t_k basis_k) reshaped to shape x shape, as a Poly in t."""
    if len(space.particular) != shape * shape:
        raise DimensionError(
            f"solution vectors of length {len(space.particular)} do not reshape to {shape}x{shape}"
        )
    nvars = space.dim
    entries = []
    for i in range(shape):
        row = []
        for j in range(shape):
            idx = i * shape + j
            p = Poly.constant(nvars, space.particular[idx])
            for k, b in enumerate(space.basis):
                if not b[idx].is_zero():
                    p = p + Poly(nvars, ((tuple(1 if v == k else 0 for v in range(nvars)), b[idx]),))
            row.append(p)
        entries.append(row)
    return _poly_det(entries, nvars)
