"""Homogeneous integer forms on P^N.

A Form is a nonzero homogeneous polynomial with integer coefficients,
stored as the coefficient vector against the shared graded-lex monomial
basis and normalized to content 1 with a positive leading (first
nonzero) coefficient.  Normalization never changes the zero locus, which
is all any consumer here cares about.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .exact_linalg import primitive_integer_vector
from .projective import MonomialBasis, ProjPoint, monomial_exponents


@dataclass(frozen=True)
class Form:
    ambient_dim: int
    degree: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        n_mons = len(monomial_exponents(self.ambient_dim + 1, self.degree))
        if len(self.coeffs) != n_mons:
            raise ValueError(
                f"degree {self.degree} in P^{self.ambient_dim} needs {n_mons} coefficients"
            )
        if all(c == 0 for c in self.coeffs):
            raise ValueError("the zero polynomial is not a form")
        if tuple(self.coeffs) != primitive_integer_vector(self.coeffs):
            raise ValueError("coefficients must be primitive; use Form.from_coeffs")

    @classmethod
    def from_coeffs(
        cls, ambient_dim: int, degree: int, coeffs: Sequence[int | Fraction]
    ) -> "Form":
        return cls(ambient_dim, degree, primitive_integer_vector([Fraction(c) for c in coeffs]))

    @classmethod
    def from_monomials(
        cls, ambient_dim: int, degree: int, terms: Mapping[tuple[int, ...], int | Fraction]
    ) -> "Form":
        mons = monomial_exponents(ambient_dim + 1, degree)
        index = {m: i for i, m in enumerate(mons)}
        coeffs = [Fraction(0)] * len(mons)
        for exps, c in terms.items():
            if len(exps) != ambient_dim + 1 or sum(exps) != degree:
                raise ValueError(f"exponent vector {exps} is not degree {degree} here")
            coeffs[index[tuple(exps)]] += Fraction(c)
        return cls.from_coeffs(ambient_dim, degree, coeffs)

    @classmethod
    def linear(cls, coeffs: Sequence[int | Fraction]) -> "Form":
        """Degree-1 form from its N+1 coefficients."""
        return cls.from_coeffs(len(coeffs) - 1, 1, coeffs)

    def monomials(self) -> MonomialBasis:
        return MonomialBasis.of(self.ambient_dim, self.degree)

    def terms(self) -> dict[tuple[int, ...], int]:
        mons = monomial_exponents(self.ambient_dim + 1, self.degree)
        return {m: c for m, c in zip(mons, self.coeffs) if c != 0}

    def evaluate(self, point: ProjPoint | Sequence[int]) -> int:
        coords = point.coords if isinstance(point, ProjPoint) else tuple(point)
        if len(coords) != self.ambient_dim + 1:
            raise ValueError("point has the wrong ambient dimension")
        total = 0
        for exps, c in zip(monomial_exponents(self.ambient_dim + 1, self.degree), self.coeffs):
            if c == 0:
                continue
            v = c
            for x, e in zip(coords, exps):
                if e:
                    v *= x**e
            total += v
        return total

    def vanishes_at(self, point: ProjPoint) -> bool:
        # Well defined: the value at another representative differs by a
        # nonzero degree-th power.
        return self.evaluate(point) == 0

    def __mul__(self, other: "Form") -> "Form":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("forms live in different ambient spaces")
        prod: dict[tuple[int, ...], int] = {}
        for ea, ca in self.terms().items():
            for eb, cb in other.terms().items():
                key = tuple(a + b for a, b in zip(ea, eb))
                prod[key] = prod.get(key, 0) + ca * cb
        return Form.from_monomials(self.ambient_dim, self.degree + other.degree, prod)


def product_of_linear_forms(linears: Sequence[Form]) -> Form:
    if not linears:
        raise ValueError("need at least one factor")
    out = linears[0]
    for f in linears[1:]:
        out = out * f
    return out
