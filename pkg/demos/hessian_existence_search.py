"""Decide, exactly, whether a pre-Lie algebra carries a nondegenerate Hessian
form.

The Hessian condition is linear in the form's coefficients, so the set of
solutions is a linear space we can compute by exact elimination.  The only
nonlinear question, nondegeneracy, reduces to whether the determinant of the
generic solution is the zero polynomial.
"""

from hyperops.bundle import parse_bundle
from hyperops.corpus import export_bundle
from hyperops.scalars import Scalar
from hyperops.search import HESSIAN, instantiate, solve_forms

for name in ("prelie.I4", "prelie.A4", "prelie.B4"):
    bundle = parse_bundle(export_bundle(name))
    g = bundle.algebra("g")
    res = solve_forms(g, HESSIAN)
    print(f"{name}: solution space has dimension {res.dim}")
    print(f"  generic determinant is {'zero' if res.generic_det.is_zero() else 'nonzero'}"
          f" as a polynomial")
    print(f"  nondegenerate Hessian form exists: {res.exists_nondegenerate}")
    if "B" in bundle.forms:
        member = res.contains(bundle.form("B"))
        print(f"  the stored form B lies in the solution space: {member}")
    if res.exists_nondegenerate:
        # pick a concrete point and show its determinant
        params = [Scalar(k + 1) for k in range(res.dim)]
        f = instantiate(res, params)
        print(f"  sample instantiation det = {f.matrix.det().render()}")
    print()
