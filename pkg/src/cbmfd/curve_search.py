"""Interpolating plane curves through point configurations.

Exact search in P^2 (kernel of the evaluation matrix), plus a one-sided
randomized test for configurations in higher ambient dimension: a
configuration lying on a degree-e space curve projects into a degree-e
plane curve, so a projection admitting no such curve is conclusive
evidence against, while repeated successes remain only evidence for.
"""

from __future__ import annotations

from dataclasses import dataclass

import sympy

from .errors import AmbientDimError
from .exact_linalg import nullspace_basis
from .forms import Form
from .projective import PointSet, evaluation_matrix, generic_projection, monomial_exponents


def curves_through(g: PointSet, e: int) -> list[Form]:
    """Basis of the degree-e plane forms vanishing on all of g, in the
    deterministic kernel-basis order (primitive integer coefficients)."""
    if g.ambient_dim != 2:
        raise AmbientDimError("exact curve search is implemented for P^2 only")
    if e < 1:
        raise ValueError("curve degree must be at least 1")
    return [Form(2, e, vec) for vec in nullspace_basis(evaluation_matrix(g, e))]


@dataclass(frozen=True)
class MinDegreeResult:
    degree: int
    witness: Form
    unique: bool


def min_interpolating_degree(g: PointSet, e_max: int) -> MinDegreeResult | None:
    """Smallest e <= e_max with a degree-e curve through g, with one
    witness, or None when no such degree exists."""
    if e_max < 1:
        raise ValueError("e_max must be at least 1")
    for e in range(1, e_max + 1):
        basis = curves_through(g, e)
        if basis:
            return MinDegreeResult(e, basis[0], unique=len(basis) == 1)
    return None


@dataclass(frozen=True)
class ProjectedCurveVerdict:
    """PASS means every sampled projection admitted a degree-e curve;
    FAIL is conclusive for the original configuration.  one_sided is
    always true: PASS is evidence, never proof."""

    passed: bool
    degree: int
    trials: int
    failing_trial: int | None = None

    one_sided = True

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"


def projected_curve_test(g: PointSet, e: int, trials: int, seed: int) -> ProjectedCurveVerdict:
    """Project g to P^2 `trials` times (trial t uses seed + t) and look
    for a degree-e curve through each image."""
    if g.ambient_dim < 3:
        raise AmbientDimError("projection test needs ambient dimension at least 3")
    if trials < 1:
        raise ValueError("need at least one trial")
    if e < 1:
        raise ValueError("curve degree must be at least 1")
    for t in range(trials):
        image = generic_projection(g, 2, seed + t)
        if not curves_through(image, e):
            return ProjectedCurveVerdict(False, e, trials, failing_trial=t)
    return ProjectedCurveVerdict(True, e, trials)


_GCD_VARS = sympy.symbols("x0 x1 x2")


def _to_poly(form: Form) -> sympy.Poly:
    expr = sympy.Integer(0)
    for exps, c in form.terms().items():
        term = sympy.Integer(c)
        for v, e in zip(_GCD_VARS, exps):
            term *= v**e
        expr += term
    return sympy.Poly(expr, *_GCD_VARS, domain="ZZ")


def _from_poly(poly: sympy.Poly) -> Form:
    degree = poly.total_degree()
    terms: dict[tuple[int, ...], int] = {}
    for exps, c in poly.terms():
        terms[tuple(int(e) for e in exps)] = int(c)
    return Form.from_monomials(2, degree, terms)


def shared_component_check(c1: Form, c2: Form) -> Form | None:
    """The common component of two plane curves: gcd of the defining
    forms, normalized, or None when they are coprime.

    Two distinct irreducible curves of degrees e1, e2 meet in at most
    e1*e2 points, so configurations bigger than that force a shared
    component; this check makes the containment conclusion exact.
    """
    if c1.ambient_dim != 2 or c2.ambient_dim != 2:
        raise AmbientDimError("component check is for plane curves")
    g = sympy.gcd(_to_poly(c1), _to_poly(c2))
    if g.total_degree() == 0:
        return None
    return _from_poly(g)


def bezout_bound(e1: int, e2: int) -> int:
    """Maximum finite intersection count of coprime plane curves."""
    if e1 < 1 or e2 < 1:
        raise ValueError("degrees must be positive")
    return e1 * e2
