"""Exact cross-section of the positive cone of the elliptic square.

The minimal fibering degree is homogeneous, so it is determined by its
restriction to a cross-section of the positive cone.  We slice by the
plane of classes with coordinate sum 2; the cone meets it in the disc

    x^2 + x*y + y^2 - 2*x - 2*y <= 0

in the plane coordinates (x, y) of the class (x, y, 2 - x - y), with
center at (2/3, 2/3), the scaled symmetric polarization.  Each pencil
class contributes a degree functional that is affine on the slice, and
the minimal fibering degree is their lower envelope.  This module
computes the decomposition of the disc into the regions where a single
class wins, entirely in rational arithmetic: the circular boundary is
approximated by an inscribed polygon with rational vertices on the
conic, and the region edges are exact equalizer lines.  A small SVG
renderer draws the result deterministically.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Iterable, Sequence

from ._util import fraction_str
from .errors import ConfigError
from .mfd_cone import (
    DivisorClass,
    FiberClassModel,
    enumerate_fiber_classes,
    exe_class,
    exe_isotropic_model,
)

Point = tuple[Fraction, Fraction]

DISC_CENTER: Point = (Fraction(2, 3), Fraction(2, 3))


def slice_class(x, y) -> DivisorClass:
    """The class on the slice plane with plane coordinates (x, y)."""
    x, y = Fraction(x), Fraction(y)
    return exe_class((x, y, 2 - x - y))


def on_slice(cls: DivisorClass) -> Point:
    """Plane coordinates of the ray through a class, scaled to the slice.

    Needs positive coordinate sum; rays along or behind the slice plane
    have no image.
    """
    total = sum(cls.coords)
    if total <= 0:
        raise ValueError("the class must have positive coordinate sum")
    scale = Fraction(2) / total
    return (scale * cls.coords[0], scale * cls.coords[1])


def boundary_points(resolution: int) -> tuple[Point, ...]:
    """Rational points on the conic x^2+xy+y^2-2x-2y = 0 in cyclic order.

    Lines of slope t through the origin (itself on the conic) meet it
    again at x = 2(1+t)/(1+t+t^2), y = t*x.  Sweeping t by the doubled
    tangent substitution t = 2s/(1-s^2) with s uniform in (-1, 1) spaces
    the samples evenly in inscribed angle, which is evenly along the
    circle that the conic is in the cone's natural metric; the vertical
    line closes the sweep at (0, 2).
    """
    if resolution < 16:
        raise ValueError("resolution must be at least 16")
    n = resolution - 1
    points = []
    for k in range(n):
        s = Fraction(2 * k + 1 - n, n)
        t = 2 * s / (1 - s * s)
        den = 1 + t + t * t
        points.append((2 * (1 + t) / den, 2 * t * (1 + t) / den))
    points.append((Fraction(0), Fraction(2)))
    return tuple(points)


def degree_functional(cls: DivisorClass) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (a, b, c) with degree(slice_class(x, y) . cls) = ax+by+c."""
    lattice = cls.lattice
    g = [lattice.basis_class(i).pair(cls) for i in range(3)]
    return (g[0] - g[2], g[1] - g[2], 2 * g[2])


def _clip(poly: list[Point], a: Fraction, b: Fraction, c: Fraction) -> list[Point]:
    # Sutherland-Hodgman against the half-plane a*x + b*y + c <= 0
    out: list[Point] = []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        hp = a * p[0] + b * p[1] + c
        hq = a * q[0] + b * q[1] + c
        if hp <= 0:
            out.append(p)
            if hq > 0:
                s = hp / (hp - hq)
                out.append((p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])))
        elif hq <= 0:
            s = hp / (hp - hq)
            out.append((p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])))
    dedup: list[Point] = []
    for pt in out:
        if not dedup or pt != dedup[-1]:
            dedup.append(pt)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


def _twice_signed_area(poly: Sequence[Point]) -> Fraction:
    total = Fraction(0)
    n = len(poly)
    for i in range(n):
        x0, y0 = poly[i]
        x1, y1 = poly[(i + 1) % n]
        total += x0 * y1 - x1 * y0
    return total


@dataclasses.dataclass(frozen=True)
class Region:
    """A maximal polygon on which one pencil class has minimal degree."""

    cls: DivisorClass
    vertices: tuple[Point, ...]

    @property
    def label(self) -> str:
        return ",".join(fraction_str(c) for c in self.cls.coords)

    @property
    def area(self) -> Fraction:
        return abs(_twice_signed_area(self.vertices)) / 2


@dataclasses.dataclass(frozen=True)
class RegionDecomposition:
    """Lower-envelope decomposition of the cross-section disc."""

    regions: tuple[Region, ...]
    boundary: tuple[Point, ...]
    candidates: tuple[DivisorClass, ...]
    cap: Fraction
    resolution: int

    @property
    def region_count(self) -> int:
        return len(self.regions)


def cross_section_regions(
    model: FiberClassModel | None = None,
    cap=3,
    resolution: int = 64,
    *,
    family_limit: int = 8,
    box_limit: int = 2_000_000,
) -> RegionDecomposition:
    """Decompose the cross-section disc by minimizing pencil class.

    Candidates are the model's pencil classes with degree at most cap
    against the disc center.  Each candidate's region is the inscribed
    polygon clipped by the half-planes where its functional is at most
    every rival's; regions that collapse to a segment or point are
    dropped.  Regions come back sorted by label.
    """
    model = model if model is not None else exe_isotropic_model()
    if model.kind != "exe_isotropic":
        raise ConfigError("the cross-section is defined for the elliptic-square model")
    polygon = list(boundary_points(resolution))
    center = slice_class(*DISC_CENTER)
    enum = enumerate_fiber_classes(
        model, center, cap, family_limit=family_limit, box_limit=box_limit
    )
    candidates = tuple(enum)
    functionals = {c: degree_functional(c) for c in candidates}
    regions = []
    for cls in candidates:
        fa, fb, fc = functionals[cls]
        poly = polygon
        for rival in candidates:
            if rival == cls:
                continue
            ra, rb, rc = functionals[rival]
            poly = _clip(poly, fa - ra, fb - rb, fc - rc)
            if len(poly) < 3:
                break
        if len(poly) >= 3 and _twice_signed_area(poly) != 0:
            regions.append(Region(cls, tuple(poly)))
    regions.sort(key=lambda r: r.label)
    return RegionDecomposition(
        tuple(regions), tuple(polygon), candidates, Fraction(cap), resolution
    )


_SCALE = 150
_MARGIN = 20
_LEGEND_WIDTH = 190
_PLOT_SPAN = Fraction(8, 3)  # the disc sits inside [-2/3, 2]^2

_PALETTE = (
    "#4e79a7",
    "#f28e2b",
    "#59a14f",
    "#e15759",
    "#b07aa1",
    "#76b7b2",
    "#edc948",
    "#ff9da7",
    "#9c755f",
    "#bab0ac",
    "#86bcb6",
    "#d37295",
)


def _fmt(value: Fraction) -> str:
    # fixed four decimal places, round half to even, no float in sight
    scaled = round(value * 10_000)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    return f"{sign}{scaled // 10_000}.{scaled % 10_000:04d}"


def _to_screen(pt: Point) -> tuple[str, str]:
    px = _MARGIN + (pt[0] + Fraction(2, 3)) * _SCALE
    py = _MARGIN + (2 - pt[1]) * _SCALE
    return _fmt(px), _fmt(py)


def _path(points: Iterable[Point]) -> str:
    parts = []
    for i, pt in enumerate(points):
        px, py = _to_screen(pt)
        parts.append(f"{'M' if i == 0 else 'L'} {px} {py}")
    parts.append("Z")
    return " ".join(parts)


def render_svg(decomposition: RegionDecomposition) -> str:
    """Standalone SVG for a region decomposition; deterministic bytes.

    One filled path per region (class attribute "region"), color keyed
    by label order, plus the disc boundary, the shaded fundamental
    domain of the modular action, and a legend.
    """
    if not decomposition.regions:
        raise ValueError("nothing to draw: the decomposition has no regions")
    plot = int(_PLOT_SPAN * _SCALE)
    width = 2 * _MARGIN + plot + _LEGEND_WIDTH
    height = 2 * _MARGIN + plot
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        "<title>Minimal fibering degree on the cross-section disc</title>",
        f'<rect width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    for i, region in enumerate(decomposition.regions):
        color = _PALETTE[i % len(_PALETTE)]
        lines.append(
            f'<path class="region" d="{_path(region.vertices)}" '
            f'fill="{color}" fill-opacity="0.65" stroke="#333333" stroke-width="1"/>'
        )
    lines.append(
        f'<path class="boundary" d="{_path(decomposition.boundary)}" '
        f'fill="none" stroke="#000000" stroke-width="1.5"/>'
    )
    # hull of the first fiber, the symmetric polarization, and the mixed
    # polarization through the negation graph, projected onto the slice;
    # a fundamental domain for the modular action on the disc
    triangle = (
        on_slice(exe_class((1, 0, 0))),
        on_slice(exe_class((1, 1, 1))),
        on_slice(exe_class((3, 3, -1))),
    )
    lines.append(
        f'<path class="fundamental-domain" d="{_path(triangle)}" '
        f'fill="#555555" fill-opacity="0.35" stroke="#000000" '
        f'stroke-width="1" stroke-dasharray="6 3"/>'
    )
    legend_x = 2 * _MARGIN + plot
    lines.append('<g class="legend" font-family="monospace" font-size="12">')
    lines.append(
        f'<text x="{legend_x}" y="{_MARGIN + 10}" font-weight="bold">minimizing class</text>'
    )
    for i, region in enumerate(decomposition.regions):
        color = _PALETTE[i % len(_PALETTE)]
        y = _MARGIN + 24 + i * 22
        lines.append(
            f'<rect x="{legend_x}" y="{y}" width="14" height="14" fill="{color}" '
            f'fill-opacity="0.65" stroke="#333333"/>'
        )
        lines.append(
            f'<text x="{legend_x + 20}" y="{y + 12}">{region.label}</text>'
        )
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
