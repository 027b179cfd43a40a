"""Lattice models of curve fibrations on polarized surfaces.

A divisor class that moves in a pencil of curves sweeps the surface, and
its intersection number against a polarization is the degree of the
induced fibration.  This module models the numerical side of that
picture on lattices small enough to enumerate exactly: an explicit
finite list of pencil classes, a rank-one lattice, a product of two
curves, and the self-product of an elliptic curve without extra
endomorphisms.  The central quantity is the minimal fibering degree,
the smallest degree of any pencil class against the polarization, along
with the set of classes attaining it.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from math import gcd, isqrt, lcm
from numbers import Rational
from typing import Iterator, Sequence

from ._util import ceil_fraction, floor_fraction, fraction_str, parse_fraction
from .errors import (
    CapError,
    ConeError,
    ConfigError,
    EmptyIntersection,
    LatticeMismatch,
    NotUnimodular,
)


def _coerce_coords(coords) -> tuple[Fraction, ...]:
    out = []
    for c in coords:
        if not isinstance(c, Rational):
            raise TypeError(f"coordinate {c!r} is not rational")
        out.append(Fraction(c))
    return tuple(out)


@dataclasses.dataclass(frozen=True)
class NSLattice:
    """A free abelian group of divisor classes with an integer pairing."""

    rank: int
    basis_labels: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rank < 1:
            raise ConfigError("lattice rank must be positive")
        if len(self.basis_labels) != self.rank:
            raise ConfigError("need one label per basis element")
        if len(set(self.basis_labels)) != self.rank:
            raise ConfigError("basis labels must be distinct")
        if len(self.gram) != self.rank or any(
            len(row) != self.rank for row in self.gram
        ):
            raise ConfigError("gram matrix must be rank x rank")
        for i in range(self.rank):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ConfigError("gram matrix must be symmetric")

    def basis_class(self, index: int) -> "DivisorClass":
        coords = [0] * self.rank
        coords[index] = 1
        return DivisorClass.of(self, coords)

    def pairing(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        total = Fraction(0)
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = self.gram[i]
            total += ui * sum(row[j] * vj for j, vj in enumerate(v) if vj)
        return total


@dataclasses.dataclass(frozen=True)
class DivisorClass:
    """An element of an NSLattice with rational coordinates.

    Build through DivisorClass.of, which coerces coordinates; direct
    construction insists they are already a tuple of Fractions.
    """

    lattice: NSLattice
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if not isinstance(self.coords, tuple) or not all(
            isinstance(c, Fraction) for c in self.coords
        ):
            raise ValueError("coords must be a tuple of Fractions; use DivisorClass.of")
        if len(self.coords) != self.lattice.rank:
            raise ValueError("coordinate count must match the lattice rank")

    @staticmethod
    def of(lattice: NSLattice, coords) -> "DivisorClass":
        return DivisorClass(lattice, _coerce_coords(coords))

    def pair(self, other: "DivisorClass") -> Fraction:
        if other.lattice != self.lattice:
            raise LatticeMismatch("classes live on different lattices")
        return self.lattice.pairing(self.coords, other.coords)

    @property
    def self_intersection(self) -> Fraction:
        return self.pair(self)

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def primitive(self) -> "DivisorClass":
        """Smallest positive multiple with coprime integer coordinates.

        Direction preserving: only positive scalings are applied, so a
        class in a cone stays in that cone.
        """
        if self.is_zero:
            raise ValueError("the zero class has no primitive multiple")
        scale = lcm(*(c.denominator for c in self.coords))
        ints = [int(c * scale) for c in self.coords]
        g = gcd(*ints)
        return DivisorClass.of(self.lattice, [i // g for i in ints])

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if other.lattice != self.lattice:
            raise LatticeMismatch("classes live on different lattices")
        return DivisorClass(
            self.lattice, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self.__add__(-other)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.lattice, tuple(-c for c in self.coords))

    def __mul__(self, scalar) -> "DivisorClass":
        if not isinstance(scalar, Rational):
            return NotImplemented
        s = Fraction(scalar)
        return DivisorClass(self.lattice, tuple(s * c for c in self.coords))

    __rmul__ = __mul__


_EXE_LABELS = ("fiber1", "fiber2", "diagonal")
_EXE_GRAM = ((0, 1, 1), (1, 0, 1), (1, 1, 0))
_EXE = NSLattice(3, _EXE_LABELS, _EXE_GRAM)


def exe_lattice() -> NSLattice:
    """The rank-3 lattice of the self-product of a general elliptic curve.

    Basis: the two projection fibers and the diagonal.  Each squares to
    zero and pairs to 1 with the other two.
    """
    return _EXE


def exe_class(coords) -> DivisorClass:
    return DivisorClass.of(_EXE, coords)


# Primitive isotropic classes in the closed forward cone of the
# elliptic-square lattice admit a coprime parameterization.  Write
# P = (a, b, c) and let u, v, w be its pairings against fiber1, fiber2,
# diagonal, so u = b+c, v = a+c, w = a+b, all >= 0 for a forward class.
# Expanding P^2 = 2(ab+ac+bc) = 0 gives
#
#     u*v = c^2,   u*w = b^2,   v*w = a^2.
#
# Each of u, v, w is itself a perfect square: a prime dividing u to odd
# order must divide v and w to odd order as well, hence divides
# u+v-w = 2c, v+w-u = 2a, w+u-v = 2b; an odd prime then divides
# gcd(a,b,c) = 1, and 2 fails by parity (a, b, c all odd forces u*v odd,
# yet u is an even sum).  Put u = p^2 and v = q^2 with the sign of q
# chosen so that w = u + v - 2c equals (p-q)^2; back substitution gives
#
#     P = (q^2 - p*q, p^2 - p*q, p*q)   with gcd(p, q) = 1,
#
# and conversely every coprime (p, q) yields a primitive forward class.
# Since (p, q) and (-p, -q) name the same class, the half-plane p > 0
# together with (0, 1) is a complete, duplicate-free catalogue.  The
# graph classes of multiplication maps are the slice p = 1.
#
# Degrees against a polarization H = (a1, a2, a3) become a binary
# quadratic form,
#
#     H.P = a1*u + a2*v + a3*w = (a1+a3) p^2 - 2 a3 pq + (a2+a3) q^2,
#
# whose determinant is H^2/2 and whose diagonal entries are degrees of
# isotropic classes, so the form is positive definite exactly when H is
# interior; any degree cutoff then confines (p, q) to an ellipse, which
# enumerate_fiber_classes scans row by row.  For cutoffs phrased against
# the basis sum instead: three nonnegative pairings summing to s are
# each at most s, so p^2 and q^2 are at most s.
def _isotropic_from_pq(p: int, q: int) -> DivisorClass:
    return exe_class((q * q - p * q, p * p - p * q, p * q))


def primitive_isotropic_classes(bound) -> tuple[DivisorClass, ...]:
    """Primitive isotropic classes in the closed forward cone with degree
    against fiber1+fiber2+diagonal at most `bound`, sorted by that degree
    and then by coordinates."""
    bound = Fraction(bound)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    # degree against the basis sum is 2(p^2 - pq + q^2) >= p^2 + q^2
    m = isqrt(floor_fraction(bound))
    found = []
    for p in range(0, m + 1):
        for q in range(-m, m + 1):
            if p == 0 and q <= 0:
                continue
            if gcd(p, q) != 1:
                continue
            s = 2 * (p * p - p * q + q * q)
            if s <= bound:
                found.append((s, _isotropic_from_pq(p, q)))
    found.sort(key=lambda t: (t[0], t[1].coords))
    return tuple(cls for _, cls in found)


def graph_class(n: int) -> DivisorClass:
    """Class of the graph of multiplication by n on the elliptic square.

    Isotropic for every n, with pairings (1, n^2, (n-1)^2) against the
    basis; in the coprime parameterization this is the slice p = 1.
    """
    return exe_class((n * n - n, 1 - n, n))


def sl2_apply(gamma: Sequence[Sequence[int]], d: DivisorClass) -> DivisorClass:
    """Transport a class on the elliptic-square lattice along an integer
    matrix of determinant one acting on the underlying abelian surface.

    The class (a, b, c) is packed into the symmetric matrix
    [[a+c, -c], [-c, b+c]], which transforms by congruence; unpacking is
    linear, so the whole map is linear, and it preserves the pairing
    because congruence preserves determinants and det M = P^2 / 2.
    """
    if d.lattice != _EXE:
        raise LatticeMismatch("the modular action lives on the elliptic-square lattice")
    if len(gamma) != 2 or any(len(row) != 2 for row in gamma):
        raise NotUnimodular("expected a 2x2 integer matrix")
    (g00, g01), (g10, g11) = gamma
    for entry in (g00, g01, g10, g11):
        if not isinstance(entry, int):
            raise NotUnimodular(f"entry {entry!r} is not an integer")
    det = g00 * g11 - g01 * g10
    if det != 1:
        raise NotUnimodular(f"determinant is {det}, need 1")
    a, b, c = d.coords
    m00, m01, m11 = a + c, -c, b + c
    t00 = g00 * m00 + g10 * m01
    t01 = g00 * m01 + g10 * m11
    t10 = g01 * m00 + g11 * m01
    t11 = g01 * m01 + g11 * m11
    n00 = t00 * g00 + t01 * g10
    n01 = t00 * g01 + t01 * g11
    n11 = t10 * g01 + t11 * g11
    return DivisorClass(_EXE, (n00 + n01, n11 + n01, -n01))


def fibering_ladder_violation(values: Sequence) -> int | None:
    """Index of the first adjacent pair breaking monotonicity, else None.

    Minimal fibering degrees over projective spaces of increasing
    dimension can only go up, so a table of known values must be
    nondecreasing.
    """
    vals = [Fraction(v) for v in values]
    for i in range(len(vals) - 1):
        if vals[i] > vals[i + 1]:
            return i
    return None


_KINDS = ("explicit", "picard_rank_one", "product_of_curves", "exe_isotropic")


@dataclasses.dataclass(frozen=True)
class FiberClassModel:
    """A lattice plus a rule describing which classes move in pencils.

    `kind` selects the rule; use the factory functions rather than the
    constructor.  `known_ladder` optionally records externally supplied
    minimal fibering degrees over projective spaces of dimension
    0, 1, 2, ... and is validated to be nondecreasing.
    """

    lattice: NSLattice
    kind: str
    classes: tuple[DivisorClass, ...] = ()
    pencil_multiple: int = 0
    gonalities: tuple[int, int] = (0, 0)
    known_ladder: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ConfigError(f"unknown model kind {self.kind!r}")
        if self.known_ladder is not None:
            bad = fibering_ladder_violation(self.known_ladder)
            if bad is not None:
                raise ConfigError(
                    f"known fibering degrees must be nondecreasing, "
                    f"violated at index {bad}"
                )


def _ladder(values) -> tuple[Fraction, ...] | None:
    if values is None:
        return None
    return tuple(Fraction(v) for v in values)


def explicit_model(
    lattice: NSLattice, classes, known_ladder=None
) -> FiberClassModel:
    """A finite, user-supplied list of pencil classes."""
    cls = tuple(classes)
    if not cls:
        raise ConfigError("an explicit model needs at least one class")
    for c in cls:
        if c.lattice != lattice:
            raise LatticeMismatch("explicit classes must live on the model lattice")
        if not c.is_integral:
            raise ConfigError("explicit pencil classes must be integral")
        if c.is_zero:
            raise ConfigError("the zero class does not move in a pencil")
    return FiberClassModel(lattice, "explicit", classes=cls, known_ladder=_ladder(known_ladder))


def picard_rank_one_model(
    pencil_multiple: int, generator_self_intersection: int, known_ladder=None
) -> FiberClassModel:
    """Rank-one lattice whose pencils are the multiples of `pencil_multiple`
    times the ample generator."""
    if pencil_multiple < 1:
        raise ConfigError("the pencil multiple must be a positive integer")
    if generator_self_intersection < 1:
        raise ConfigError("the generator must have positive self-intersection")
    lat = NSLattice(1, ("ample",), ((generator_self_intersection,),))
    return FiberClassModel(
        lat,
        "picard_rank_one",
        pencil_multiple=pencil_multiple,
        known_ladder=_ladder(known_ladder),
    )


def product_of_curves_model(
    gonality1: int, gonality2: int, known_ladder=None
) -> FiberClassModel:
    """Product of two curves with no common isogeny factor.

    A class a1*fiber1 + a2*fiber2 moves in a pencil when a1 >= gonality1
    and a2 >= gonality2, or when it sits on one of the two axes past the
    corresponding gonality.
    """
    if gonality1 < 1 or gonality2 < 1:
        raise ConfigError("gonalities are positive integers")
    lat = NSLattice(2, ("fiber1", "fiber2"), ((0, 1), (1, 0)))
    return FiberClassModel(
        lat,
        "product_of_curves",
        gonalities=(gonality1, gonality2),
        known_ladder=_ladder(known_ladder),
    )


def exe_isotropic_model(known_ladder=None) -> FiberClassModel:
    """Pencils on the elliptic square: multiples a*P, a >= 2, of primitive
    isotropic classes in the closed forward cone."""
    return FiberClassModel(_EXE, "exe_isotropic", known_ladder=_ladder(known_ladder))


def _cone_position(model: FiberClassModel, H: DivisorClass) -> str:
    """Classify H as "interior" or "boundary" of the model's positive cone,
    raising ConeError outside.  Explicit models carry no cone."""
    if model.kind == "explicit":
        return "interior"
    if model.kind == "picard_rank_one":
        if H.coords[0] <= 0:
            raise ConeError("the polarization must be a positive multiple of the generator")
        return "interior"
    if model.kind == "product_of_curves":
        a1, a2 = H.coords
        if a1 < 0 or a2 < 0 or (a1 == 0 and a2 == 0):
            raise ConeError("the polarization must be a nonzero nonnegative combination of the fibers")
        return "interior" if a1 > 0 and a2 > 0 else "boundary"
    if H.is_zero:
        raise ConeError("the zero class is not a polarization")
    square = H.self_intersection
    forward = H.pair(exe_class((1, 1, 1)))
    if square > 0 and forward > 0:
        return "interior"
    if square == 0 and forward > 0:
        return "boundary"
    raise ConeError(
        "the polarization lies outside the closed positive cone "
        "(need self-intersection >= 0 and nonnegative degree against the basis sum)"
    )


@dataclasses.dataclass(frozen=True)
class Enumeration:
    """Pencil classes of bounded degree against a fixed polarization.

    `complete` asserts every class within the cap is present; `truncated`
    flags an infinite degree-zero family cut at the family limit.
    """

    classes: tuple[DivisorClass, ...]
    truncated: bool
    complete: bool

    def __iter__(self) -> Iterator[DivisorClass]:
        return iter(self.classes)

    def __len__(self) -> int:
        return len(self.classes)


def _sorted_by_degree(H: DivisorClass, classes) -> tuple[DivisorClass, ...]:
    return tuple(sorted(classes, key=lambda c: (H.pair(c), c.coords)))


def _boundary_ray(H: DivisorClass, start: int, family_limit: int) -> Enumeration:
    # On the cone boundary the minimizers form the infinite ray of
    # multiples of the primitive class under H; everything else has
    # positive degree and cannot be listed completely, so only the ray
    # is reported, cut at family_limit members.
    ray = H.primitive()
    members = tuple((start + i) * ray for i in range(family_limit))
    return Enumeration(members, truncated=True, complete=False)


def _enumerate_exe(model, H, cap, family_limit, box_limit) -> Enumeration:
    if _cone_position(model, H) == "boundary":
        return _boundary_ray(H, 2, family_limit)
    a1, a2, a3 = H.coords
    scale = lcm(a1.denominator, a2.denominator, a3.denominator)
    fa = int((a1 + a3) * scale)
    fb = int(-a3 * scale)
    fc = int((a2 + a3) * scale)
    det = fa * fc - fb * fb  # = scale^2 * H^2 / 2 > 0 in the interior
    bound = cap * scale / 2  # primitive classes need degree <= cap/2
    if bound < 0:
        return Enumeration((), False, True)
    out = []
    scanned = 0
    pmax = isqrt(floor_fraction(bound * fc / det))
    for p in range(0, pmax + 1):
        disc = fc * bound - det * p * p
        if disc < 0:
            continue
        r = isqrt(floor_fraction(disc)) + 1
        qlo = -((fb * p + r) // fc)
        qhi = (-fb * p + r) // fc
        for q in range(qlo, qhi + 1):
            if p == 0 and q <= 0:
                continue
            scanned += 1
            if scanned > box_limit:
                raise CapError("enumeration budget exceeded; lower the cap or raise box_limit")
            if gcd(p, q) != 1:
                continue
            if fa * p * p + 2 * fb * p * q + fc * q * q > bound:
                continue
            prim = _isotropic_from_pq(p, q)
            degree = H.pair(prim)
            for a in range(2, floor_fraction(cap / degree) + 1):
                out.append(a * prim)
                if len(out) > box_limit:
                    raise CapError("enumeration budget exceeded; lower the cap or raise box_limit")
    return Enumeration(_sorted_by_degree(H, out), False, True)


def _enumerate_product(model, H, cap, family_limit, box_limit) -> Enumeration:
    g1, g2 = model.gonalities
    if _cone_position(model, H) == "boundary":
        a1, a2 = H.coords
        axis = 0 if a2 == 0 else 1
        ray = model.lattice.basis_class(axis)
        start = g1 if axis == 0 else g2
        members = tuple((start + i) * ray for i in range(family_limit))
        return Enumeration(members, truncated=True, complete=False)
    a1, a2 = H.coords
    if cap / a2 > box_limit or cap / a1 > box_limit:
        raise CapError("enumeration budget exceeded; lower the cap or raise box_limit")
    out = []
    # axis families: a*fiber1 for a >= g1 has degree a*a2, and symmetrically
    for a in range(g1, floor_fraction(cap / a2) + 1):
        out.append(DivisorClass.of(model.lattice, (a, 0)))
    for b in range(g2, floor_fraction(cap / a1) + 1):
        out.append(DivisorClass.of(model.lattice, (0, b)))
    # interior family: both coordinates past the gonalities
    for a in range(g1, floor_fraction((cap - g2 * a1) / a2) + 1):
        for b in range(g2, floor_fraction((cap - a * a2) / a1) + 1):
            out.append(DivisorClass.of(model.lattice, (a, b)))
            if len(out) > box_limit:
                raise CapError("enumeration budget exceeded; lower the cap or raise box_limit")
    return Enumeration(_sorted_by_degree(H, out), False, True)


def enumerate_fiber_classes(
    model: FiberClassModel,
    H: DivisorClass,
    cap,
    *,
    family_limit: int = 8,
    box_limit: int = 2_000_000,
) -> Enumeration:
    """All pencil classes of the model with degree against H at most cap.

    Interior polarizations get the complete finite list, sorted by degree
    and then coordinates.  On the cone boundary the degree-zero ray is
    infinite; it is cut at family_limit members and flagged, and no
    positive-degree classes are reported since no cap can exhaust them.
    CapError signals that the scan exceeded box_limit candidates.
    """
    cap = Fraction(cap)
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    if family_limit < 1:
        raise ValueError("family_limit must be positive")
    if H.lattice != model.lattice:
        raise LatticeMismatch("polarization and model use different lattices")
    if model.kind == "explicit":
        keep = [c for c in model.classes if H.pair(c) <= cap]
        return Enumeration(_sorted_by_degree(H, keep), False, True)
    if model.kind == "picard_rank_one":
        _cone_position(model, H)
        step = H.pair(model.lattice.basis_class(0)) * model.pencil_multiple
        kmax = floor_fraction(cap / step)
        if kmax > box_limit:
            raise CapError("enumeration budget exceeded; lower the cap or raise box_limit")
        members = [
            DivisorClass.of(model.lattice, (k * model.pencil_multiple,))
            for k in range(1, kmax + 1)
        ]
        return Enumeration(tuple(members), False, True)
    if model.kind == "product_of_curves":
        return _enumerate_product(model, H, cap, family_limit, box_limit)
    return _enumerate_exe(model, H, cap, family_limit, box_limit)


@dataclasses.dataclass(frozen=True)
class MfdResult:
    """Outcome of a minimal fibering degree computation.

    status "ok" carries the value and minimizers; status "unknown" means
    no pencil class had degree within the cap, so nothing is certified
    and the value is None.
    """

    status: str
    value: Fraction | None
    mfc: tuple[DivisorClass, ...]
    mfc_truncated: bool
    stable: bool
    cap: Fraction


def mfd_eval(
    model: FiberClassModel,
    H: DivisorClass,
    cap,
    *,
    family_limit: int = 8,
    box_limit: int = 2_000_000,
) -> MfdResult:
    """Minimal fibering degree of (model, H) among classes within cap.

    stable means no class beyond the cap can beat the reported value:
    either the enumeration was complete (any missing class has degree
    above the cap, hence above the value), or the value is zero, the
    floor of degrees over the forward cone.
    """
    cap = Fraction(cap)
    enum = enumerate_fiber_classes(
        model, H, cap, family_limit=family_limit, box_limit=box_limit
    )
    if not enum.classes:
        return MfdResult("unknown", None, (), False, False, cap)
    degrees = [(H.pair(c), c) for c in enum.classes]
    value = min(d for d, _ in degrees)
    mfc = tuple(c for d, c in degrees if d == value)
    stable = enum.complete or value == 0
    return MfdResult("ok", value, mfc, enum.truncated, stable, cap)


def _auto_cap(model: FiberClassModel, H: DivisorClass) -> Fraction:
    if model.kind == "explicit":
        return min(H.pair(c) for c in model.classes)
    position = _cone_position(model, H)
    if position == "boundary":
        return Fraction(0)
    if model.kind == "picard_rank_one":
        return H.pair(model.lattice.basis_class(0)) * model.pencil_multiple
    if model.kind == "product_of_curves":
        g1, g2 = model.gonalities
        f1 = model.lattice.basis_class(0)
        f2 = model.lattice.basis_class(1)
        return min(g1 * H.pair(f1), g2 * H.pair(f2))
    pairings = (H.pair(_EXE.basis_class(i)) for i in range(3))
    return 2 * min(pairings)


def mfd_auto(
    model: FiberClassModel,
    H: DivisorClass,
    *,
    family_limit: int = 8,
    box_limit: int = 2_000_000,
) -> MfdResult:
    """mfd_eval with a self-chosen cap that the model provably attains.

    Each kind has a pencil class whose degree is computable up front
    (doubles of the isotropic basis classes, the axis gonality classes,
    the first pencil multiple, or the explicit minimum), so the result
    never comes back unknown.
    """
    cap = _auto_cap(model, H)
    return mfd_eval(model, H, cap, family_limit=family_limit, box_limit=box_limit)


@dataclasses.dataclass(frozen=True)
class PerturbationReport:
    d_min: int
    verified: bool
    base: MfdResult
    perturbed: MfdResult


def mfc_perturbation_threshold(
    model: FiberClassModel,
    H: DivisorClass,
    direction: DivisorClass,
    *,
    family_limit: int = 8,
    box_limit: int = 2_000_000,
) -> PerturbationReport:
    """Integer denominator past which nudging H toward `direction` cannot
    promote a new minimizer.

    Once d exceeds the degree of `direction` against every minimizer of
    H, the minimizers of H + direction/d form a subset of those of H;
    d_min = 1 + max of those degrees.  verified reports the direct
    recomputation at d_min.
    """
    base = mfd_auto(model, H, family_limit=family_limit, box_limit=box_limit)
    if base.mfc_truncated:
        raise ConeError("the perturbation threshold needs an interior polarization")
    worst = max((direction.pair(c) for c in base.mfc), default=Fraction(0))
    d_min = 1 + max(0, ceil_fraction(worst))
    shifted = H + Fraction(1, d_min) * direction
    perturbed = mfd_auto(model, shifted, family_limit=family_limit, box_limit=box_limit)
    verified = not perturbed.mfc_truncated and set(perturbed.mfc) <= set(base.mfc)
    return PerturbationReport(d_min, verified, base, perturbed)


def _mfc_family(result: MfdResult):
    """Represent a minimizer set as (finite set, optional infinite ray)."""
    if result.mfc_truncated:
        return frozenset(), result.mfc[0].primitive()
    return frozenset(result.mfc), None


def _family_member(cls: DivisorClass, family) -> bool:
    finite, ray = family
    if cls in finite:
        return True
    if ray is None:
        return False
    for rc, cc in zip(ray.coords, cls.coords):
        if rc:
            factor = cc / rc
            break
    return factor.denominator == 1 and factor >= 2 and cls == factor * ray


@dataclasses.dataclass(frozen=True)
class HullReport:
    """Linearity of mfd on a convex combination of polarizations."""

    passed: bool
    combination: DivisorClass
    value: Fraction
    expected_value: Fraction
    common_mfc: tuple[DivisorClass, ...]
    combination_mfc: tuple[DivisorClass, ...]
    mfc_match: bool
    inputs: tuple[MfdResult, ...]


def hull_linearity_check(
    model: FiberClassModel,
    classes: Sequence[DivisorClass],
    weights: Sequence | None = None,
    *,
    family_limit: int = 8,
    box_limit: int = 2_000_000,
) -> HullReport:
    """Check that mfd is linear on the cone spanned by the given classes.

    When every input shares a minimizer C, the combination's mfd must be
    the weighted sum of the inputs' values (both equal the degree of C),
    and its minimizer set must be exactly the common ones.  Raises
    EmptyIntersection when the minimizer sets share nothing.
    """
    classes = tuple(classes)
    if not classes:
        raise ValueError("need at least one polarization")
    if weights is None:
        weights = (1,) * len(classes)
    weights = tuple(Fraction(w) for w in weights)
    if len(weights) != len(classes):
        raise ValueError("one weight per polarization")
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    results = tuple(
        mfd_auto(model, h, family_limit=family_limit, box_limit=box_limit)
        for h in classes
    )
    families = [_mfc_family(r) for r in results]
    pool = next(
        (sorted(fin, key=lambda c: c.coords) for fin, ray in families if ray is None),
        None,
    )
    if pool is None:
        pool = results[0].mfc
    common = tuple(c for c in pool if all(_family_member(c, f) for f in families))
    if not common:
        raise EmptyIntersection("the minimizer sets share no class")
    common_ray = None
    if all(ray is not None for _, ray in families):
        rays = {ray.coords for _, ray in families}
        if len(rays) == 1:
            common_ray = families[0][1]
    combination = classes[0] * weights[0]
    for h, w in zip(classes[1:], weights[1:]):
        combination = combination + w * h
    combo = mfd_auto(model, combination, family_limit=family_limit, box_limit=box_limit)
    expected = sum((w * r.value for w, r in zip(weights, results)), Fraction(0))
    common_family = (frozenset(common) if common_ray is None else frozenset(), common_ray)
    mfc_match = _mfc_family(combo) == common_family
    passed = combo.value == expected and mfc_match
    return HullReport(
        passed,
        combination,
        combo.value,
        expected,
        common,
        combo.mfc,
        mfc_match,
        results,
    )


def _default_polarization(model: FiberClassModel) -> DivisorClass:
    if model.kind == "exe_isotropic":
        return exe_class((1, 1, 1))
    if model.kind == "picard_rank_one":
        return model.lattice.basis_class(0)
    if model.kind == "product_of_curves":
        return DivisorClass.of(model.lattice, (1, 1))
    total = model.classes[0]
    for c in model.classes[1:]:
        total = total + c
    return total


def prop16_suite(
    model: FiberClassModel | None = None, H: DivisorClass | None = None
) -> dict:
    """Battery of structural properties of the minimal fibering degree.

    Sections: homogeneity under positive scaling, monotonicity when the
    difference of polarizations is nonnegative on every pencil class,
    stability of the value under cap increases, the perturbation
    threshold with verified minimizer inclusion, and linearity on a hull
    of polarizations sharing a minimizer.  Returns a dict of sections,
    each with a "passed" flag and the numbers behind it.
    """
    model = model if model is not None else exe_isotropic_model()
    if H is None:
        H = _default_polarization(model)
    base = mfd_auto(model, H)
    sections: dict[str, dict] = {}

    scales = (2, Fraction(5, 2))
    homo = []
    for t in scales:
        scaled = mfd_auto(model, t * H)
        homo.append(scaled.value == t * base.value and scaled.mfc == base.mfc)
    sections["homogeneity"] = {
        "passed": all(homo),
        "scales": list(scales),
        "base_value": base.value,
    }

    bump = model.lattice.basis_class(0)
    higher = H + bump
    higher_res = mfd_auto(model, higher)
    base_enum = enumerate_fiber_classes(model, H, base.cap)
    higher_enum = enumerate_fiber_classes(model, higher, higher_res.cap)
    hypothesis = all(
        bump.pair(c) >= 0 for c in list(base_enum) + list(higher_enum)
    )
    conclusion = higher_res.value >= base.value
    sections["monotonicity"] = {
        "passed": (not hypothesis) or conclusion,
        "hypothesis_holds": hypothesis,
        "lower_value": base.value,
        "higher_value": higher_res.value,
    }

    caps = [base.cap, 2 * base.cap, 4 * base.cap]
    runs = [mfd_eval(model, H, c) for c in caps]
    values = [r.value for r in runs]
    stable_ok = all(r.stable for r in runs) and len(set(values)) == 1
    nonincreasing = all(a >= b for a, b in zip(values, values[1:]))
    sections["cap_stability"] = {
        "passed": stable_ok and nonincreasing,
        "caps": caps,
        "values": values,
    }

    if base.mfc_truncated:
        sections["perturbation"] = {"passed": True, "skipped": "boundary polarization"}
    else:
        report = mfc_perturbation_threshold(model, H, bump)
        sections["perturbation"] = {
            "passed": report.verified,
            "d_min": report.d_min,
            "perturbed_mfc_size": len(report.perturbed.mfc),
        }

    if model.kind == "exe_isotropic":
        hull_classes = (exe_class((1, 1, 1)), exe_class((3, 3, -1)), exe_class((1, 0, 0)))
    else:
        hull_classes = (H,)
    hull = hull_linearity_check(model, hull_classes)
    sections["hull"] = {
        "passed": hull.passed,
        "value": hull.value,
        "expected_value": hull.expected_value,
        "common_mfc_size": len(hull.common_mfc),
    }
    return sections


def model_to_dict(model: FiberClassModel) -> dict:
    """JSON-ready description: {rank, labels, gram, model: {kind, ...}}."""
    lat = model.lattice
    spec: dict = {"kind": model.kind}
    if model.kind == "explicit":
        spec["classes"] = [
            [fraction_str(c) for c in cls.coords] for cls in model.classes
        ]
    elif model.kind == "picard_rank_one":
        spec["pencil_multiple"] = model.pencil_multiple
    elif model.kind == "product_of_curves":
        spec["gonalities"] = list(model.gonalities)
    if model.known_ladder is not None:
        spec["known_ladder"] = [fraction_str(v) for v in model.known_ladder]
    return {
        "rank": lat.rank,
        "labels": list(lat.basis_labels),
        "gram": [list(row) for row in lat.gram],
        "model": spec,
    }


def model_from_dict(data: dict) -> FiberClassModel:
    try:
        rank = data["rank"]
        labels = tuple(str(x) for x in data["labels"])
        gram = tuple(tuple(int(x) for x in row) for row in data["gram"])
        spec = data["model"]
        kind = spec["kind"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"malformed model description: {exc}") from exc
    lattice = NSLattice(rank, labels, gram)
    ladder = spec.get("known_ladder")
    if ladder is not None:
        ladder = [parse_fraction(str(v)) for v in ladder]
    if kind == "explicit":
        classes = [
            DivisorClass.of(lattice, [parse_fraction(str(c)) for c in row])
            for row in spec.get("classes", [])
        ]
        return explicit_model(lattice, classes, known_ladder=ladder)
    if kind == "picard_rank_one":
        if rank != 1:
            raise ConfigError("a rank-one model needs a rank-one lattice")
        return picard_rank_one_model(
            int(spec["pencil_multiple"]), gram[0][0], known_ladder=ladder
        )
    if kind == "product_of_curves":
        g1, g2 = (int(x) for x in spec["gonalities"])
        built = product_of_curves_model(g1, g2, known_ladder=ladder)
        if built.lattice != lattice:
            raise ConfigError("a product model uses labels (fiber1, fiber2) and the hyperbolic pairing")
        return built
    if kind == "exe_isotropic":
        if lattice != _EXE:
            raise ConfigError(
                "the elliptic-square model uses labels (fiber1, fiber2, diagonal) "
                "and their standard pairing"
            )
        return exe_isotropic_model(known_ladder=ladder)
    raise ConfigError(f"unknown model kind {kind!r}")
