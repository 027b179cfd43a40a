"""Rational point configurations in projective space P^N.

Points are stored in a canonical integer form (coprime coordinates,
first nonzero coordinate positive) so equality, hashing and duplicate
detection are exact.  The monomial order is graded lexicographic with
the variables x_0 > x_1 > ... > x_N, fixed once here and shared by every
consumer: evaluation matrices, form coefficient vectors and kernel
vectors all index against it.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from ._util import canonical_json
from .errors import DegenerateProjection, DuplicatePoint
from .exact_linalg import RationalMatrix, primitive_integer_vector, rank


@dataclass(frozen=True)
class ProjPoint:
    """A point of P^N with canonical primitive integer coordinates."""

    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) < 2:
            raise ValueError("need at least two homogeneous coordinates")
        if all(c == 0 for c in self.coords):
            raise ValueError("the zero vector is not a projective point")
        canon = primitive_integer_vector(self.coords)
        if tuple(self.coords) != canon:
            raise ValueError(f"coordinates {self.coords} are not canonical; use ProjPoint.of")

    @classmethod
    def of(cls, coords: Sequence[int | Fraction]) -> "ProjPoint":
        """Canonicalize arbitrary rational homogeneous coordinates."""
        return cls(primitive_integer_vector([Fraction(c) for c in coords]))

    @property
    def ambient_dim(self) -> int:
        return len(self.coords) - 1


@dataclass(frozen=True)
class PointSet:
    """A finite configuration of pairwise distinct points of P^N.

    Point order is preserved: reports refer to "the first failing point"
    in this order.
    """

    ambient_dim: int
    points: tuple[ProjPoint, ...]

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ValueError("ambient dimension must be at least 1")
        for p in self.points:
            if p.ambient_dim != self.ambient_dim:
                raise ValueError("mixed ambient dimensions in one configuration")
        seen = set()
        for p in self.points:
            if p.coords in seen:
                raise DuplicatePoint(f"duplicate point {list(p.coords)}")
            seen.add(p.coords)

    def __len__(self) -> int:
        return len(self.points)

    def remove(self, index: int) -> "PointSet":
        pts = self.points[:index] + self.points[index + 1 :]
        return PointSet(self.ambient_dim, pts)


def point_set(points: Sequence[ProjPoint], ambient_dim: int | None = None) -> PointSet:
    pts = tuple(points)
    if ambient_dim is None:
        if not pts:
            raise ValueError("empty set needs an explicit ambient_dim")
        ambient_dim = pts[0].ambient_dim
    return PointSet(ambient_dim, pts)


def monomial_exponents(n_vars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of total degree `degree` in `n_vars`
    variables, in descending lexicographic order (x_0 highest)."""
    if degree < 0:
        return []
    if n_vars == 1:
        return [(degree,)]
    out = []
    for k in range(degree, -1, -1):
        for rest in monomial_exponents(n_vars - 1, degree - k):
            out.append((k,) + rest)
    return out


@dataclass(frozen=True)
class MonomialBasis:
    """The degree-r monomial basis on P^N in the shared graded-lex order."""

    ambient_dim: int
    degree: int
    monomials: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, ambient_dim: int, degree: int) -> "MonomialBasis":
        if ambient_dim < 1:
            raise ValueError("ambient dimension must be at least 1")
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        mons = tuple(monomial_exponents(ambient_dim + 1, degree))
        return cls(ambient_dim, degree, mons)

    def __len__(self) -> int:
        return len(self.monomials)

    def evaluate_at(self, coords: Sequence[int]) -> list[int]:
        vals = []
        for exps in self.monomials:
            v = 1
            for c, e in zip(coords, exps):
                if e:
                    v *= c**e
            vals.append(v)
        return vals


def evaluation_matrix(g: PointSet, r: int) -> RationalMatrix:
    """|g| x binomial(N+r, r) matrix of degree-r monomials evaluated at
    the canonical coordinates of the points of g, rows in point order."""
    if r < 0:
        raise ValueError("degree must be nonnegative")
    basis = MonomialBasis.of(g.ambient_dim, r)
    expected = comb(g.ambient_dim + r, r)
    assert len(basis) == expected
    rows = [basis.evaluate_at(p.coords) for p in g.points]
    return RationalMatrix.from_rows(rows, cols=len(basis))


def vanishing_dimension(g: PointSet, r: int) -> int:
    """Dimension of the space of degree-r forms vanishing on every point
    of g: binomial(N+r, r) - rank of the evaluation matrix."""
    m = evaluation_matrix(g, r)
    return m.cols - rank(m)


def generic_projection(
    g: PointSet,
    target_dim: int,
    seed: int,
    *,
    coeff_bound: int = 10,
    max_retries: int = 32,
) -> PointSet:
    """Image of g under a random linear projection P^N -> P^m.

    Coefficients are drawn uniformly from [-coeff_bound, coeff_bound]
    (default 10).  A draw is rejected and retried when some point maps to
    zero (it lies in the center) or two images collide; after
    max_retries rejections DegenerateProjection is raised.  Deterministic
    for a fixed seed.
    """
    n = g.ambient_dim
    m = target_dim
    if not 1 <= m < n:
        raise ValueError("target dimension must satisfy 1 <= m < N")
    rng = random.Random(seed)
    for _ in range(max_retries):
        mat = [[rng.randint(-coeff_bound, coeff_bound) for _ in range(n + 1)] for _ in range(m + 1)]
        images = []
        ok = True
        for p in g.points:
            img = [sum(mat[i][j] * p.coords[j] for j in range(n + 1)) for i in range(m + 1)]
            if all(v == 0 for v in img):
                ok = False
                break
            images.append(ProjPoint.of(img))
        if not ok:
            continue
        if len({q.coords for q in images}) != len(images):
            continue
        return PointSet(m, tuple(images))
    raise DegenerateProjection(
        f"no nondegenerate projection found in {max_retries} draws (seed {seed})"
    )


# ---------------------------------------------------------------------------
# JSON point-set files.  Coordinates are written as decimal strings so
# arbitrarily large integers survive any JSON reader.

def point_set_to_dict(g: PointSet) -> dict:
    return {
        "ambient_dim": g.ambient_dim,
        "points": [[str(c) for c in p.coords] for p in g.points],
    }


def point_set_from_dict(data: dict) -> PointSet:
    try:
        n = int(data["ambient_dim"])
        raw = data["points"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed point set object: {exc}") from None
    pts = []
    for row in raw:
        coords = [int(c) for c in row]
        if len(coords) != n + 1:
            raise ValueError(f"point {row} does not have {n + 1} coordinates")
        pts.append(ProjPoint.of(coords))
    return PointSet(n, tuple(pts))


def dump_point_set(g: PointSet) -> str:
    return canonical_json(point_set_to_dict(g))


def load_point_set(text: str) -> PointSet:
    return point_set_from_dict(json.loads(text))
