"""Fundamental-domain geometry and deterministic SVG rendering.

The domain of the covering group generated by the dilation f and the
parabolic g is bounded by four semicircles orthogonal to the real axis
plus three real segments.  Everything is drawn as sampled polylines with
fixed precision so identical inputs give byte-identical files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConsistencyError
from .hyperbolic import GroupParams, build_group
from .moebius import MoebiusMap

_PRIMARY_ARC_POINTS = 96
_ORBIT_ARC_POINTS = 32
_ORBIT_SEGMENT_POINTS = 16
MAX_ORBIT_DEPTH = 6

_LETTERS = ("f", "F", "g", "G")
_INVERSE_OF = {0: 1, 1: 0, 2: 3, 3: 2}


@dataclass(frozen=True)
class Arc:
    """Semicircle in the upper half-plane centered on the real axis."""

    center: float
    radius: float


@dataclass(frozen=True)
class FundamentalDomain:
    """Boundary of the fundamental domain for the group of (k, r).

    s2 and f_s2 are the inner and outer semicircles |z| = 1/k and |z| = k;
    s1 and g_s1 bound the two excluded half-disks tangent at z = 1;
    segments are the real-axis gaps between consecutive arcs.
    """

    k: float
    r: float
    s2: Arc
    f_s2: Arc
    s1: Arc
    g_s1: Arc
    segments: tuple[tuple[float, float], ...]


def circle_through(z1: complex, z2: complex, z3: complex) -> tuple[complex, float]:
    """Center and radius of the circle through three points."""
    x1, y1, x2, y2, x3, y3 = z1.real, z1.imag, z2.real, z2.imag, z3.real, z3.imag
    d = 2.0 * (x1 * (y2 - y3) + x2 * (y3 - y1) + x3 * (y1 - y2))
    if abs(d) < 1e-14 * max(1.0, abs(z1), abs(z2), abs(z3)) ** 2:
        raise ConsistencyError("points are collinear, no finite circle")
    s1 = x1 * x1 + y1 * y1
    s2 = x2 * x2 + y2 * y2
    s3 = x3 * x3 + y3 * y3
    ux = (s1 * (y2 - y3) + s2 * (y3 - y1) + s3 * (y1 - y2)) / d
    uy = (s1 * (x3 - x2) + s2 * (x1 - x3) + s3 * (x2 - x1)) / d
    center = complex(ux, uy)
    return center, abs(z1 - center)


def build_domain(params: GroupParams) -> FundamentalDomain:
    """Fundamental domain of the group, with g(S1) reconstructed from three
    mapped points of S1."""
    k, r = params.k, params.r
    _, g = build_group(params)
    s1 = Arc((r + 1.0) / (2.0 * r), (r - 1.0) / (2.0 * r))
    apex = complex(s1.center, s1.radius)
    center, radius = circle_through(
        complex(g(1.0 / r), 0.0), g(apex), complex(g(1.0), 0.0)
    )
    if abs(center.imag) > 1e-9 * max(1.0, radius):
        raise ConsistencyError(f"image circle drifted off the real axis: {center}")
    return FundamentalDomain(
        k=k,
        r=r,
        s2=Arc(0.0, 1.0 / k),
        f_s2=Arc(0.0, k),
        s1=s1,
        g_s1=Arc(center.real, radius),
        segments=((-k, -1.0 / k), (1.0 / k, 1.0 / r), (r, k)),
    )


def domain_contains(domain: FundamentalDomain, z: complex, margin: float = 0.0) -> bool:
    """Whether z lies inside the domain with clearance margin from every
    boundary piece (negative margin admits a band around the boundary)."""
    x, y = z.real, z.imag
    if y <= margin:
        return False
    rho = math.hypot(x, y)
    if rho <= domain.s2.radius + margin or rho >= domain.f_s2.radius - margin:
        return False
    if math.hypot(x - domain.s1.center, y) <= domain.s1.radius + margin:
        return False
    if math.hypot(x - domain.g_s1.center, y) <= domain.g_s1.radius + margin:
        return False
    return True


def orbit_words(depth: int) -> tuple[tuple[int, ...], ...]:
    """Freely reduced words over f, f^-1, g, g^-1 of length 1..depth,
    breadth-first, lexicographic within a length."""
    if not 0 <= depth <= MAX_ORBIT_DEPTH:
        raise ValueError(f"depth must lie in [0, {MAX_ORBIT_DEPTH}], got {depth}")
    words: list[tuple[int, ...]] = []
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(depth):
        nxt: list[tuple[int, ...]] = []
        for word in frontier:
            for letter in range(4):
                if word and _INVERSE_OF[letter] == word[-1]:
                    continue
                nxt.append(word + (letter,))
        words.extend(nxt)
        frontier = nxt
    return tuple(words)


def word_to_map(word: tuple[int, ...], f: MoebiusMap, g: MoebiusMap) -> MoebiusMap:
    atoms = (f, f.inverse(), g, g.inverse())
    out = MoebiusMap(1.0, 0.0, 0.0, 1.0)
    for letter in word:
        out = out.compose(atoms[letter])
    return out


def word_name(word: tuple[int, ...]) -> str:
    return "".join(_LETTERS[letter] for letter in word)


def _arc_points(arc: Arc, n: int) -> list[complex]:
    pts = []
    for i in range(n + 1):
        phi = math.pi * (1.0 - i / n)
        pts.append(complex(arc.center + arc.radius * math.cos(phi),
                           arc.radius * math.sin(phi)))
    return pts


def _segment_points(x0: float, x1: float, n: int) -> list[complex]:
    return [complex(x0 + (x1 - x0) * i / n, 0.0) for i in range(n + 1)]


def _fmt(x: float) -> str:
    return format(x, ".6f")


def _polyline(points: list[complex], stroke: str, width: float) -> str:
    coords = " ".join(f"{_fmt(p.real)},{_fmt(-p.imag)}" for p in points)
    return (
        f'<polyline points="{coords}" stroke="{stroke}" '
        f'stroke-width="{_fmt(width)}" />'
    )


def _mapped_runs(points: list[complex], m: MoebiusMap, clip: float) -> list[list[complex]]:
    # a mapped boundary piece may pass through the map's pole; split the
    # polyline wherever points blow up or leave the padded viewport
    runs: list[list[complex]] = []
    cur: list[complex] = []
    for p in points:
        w = m(p)
        keep = (
            isinstance(w, complex)
            and math.isfinite(w.real)
            and math.isfinite(w.imag)
            and abs(w.real) <= clip
            and -1e-9 <= w.imag <= clip
        )
        if keep:
            cur.append(w)
        elif cur:
            runs.append(cur)
            cur = []
    if cur:
        runs.append(cur)
    return [run for run in runs if len(run) >= 2]


def render_svg(domain: FundamentalDomain, orbit_depth: int = 0) -> str:
    """Deterministic SVG picture of the domain, optionally tiled by the
    orbit under all reduced words of length up to orbit_depth."""
    k = domain.k
    x0, y0 = -1.2 * k, -1.2 * k
    w, h = 2.4 * k, 1.2 * k
    main_width = 0.006 * k
    thin_width = 0.003 * k
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="900" height="450" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">',
        '<g fill="none" stroke-linecap="round" stroke-linejoin="round">',
    ]
    for arc in (domain.s2, domain.f_s2, domain.s1, domain.g_s1):
        lines.append(_polyline(_arc_points(arc, _PRIMARY_ARC_POINTS), "#000000", main_width))
    for xa, xb in domain.segments:
        lines.append(_polyline([complex(xa, 0.0), complex(xb, 0.0)], "#000000", main_width))
    lines.append(_polyline([complex(x0, 0.0), complex(x0 + w, 0.0)], "#bbbbbb", thin_width))
    if orbit_depth > 0:
        f, g = build_group(GroupParams(domain.k, domain.r))
        pieces: list[list[complex]] = [
            _arc_points(domain.s2, _ORBIT_ARC_POINTS),
            _arc_points(domain.f_s2, _ORBIT_ARC_POINTS),
            _arc_points(domain.s1, _ORBIT_ARC_POINTS),
            _arc_points(domain.g_s1, _ORBIT_ARC_POINTS),
        ] + [
            _segment_points(xa, xb, _ORBIT_SEGMENT_POINTS)
            for xa, xb in domain.segments
        ]
        clip = 1.3 * k
        lines.append('<g stroke="#888888">')
        for word in orbit_words(orbit_depth):
            m = word_to_map(word, f, g)
            for piece in pieces:
                for run in _mapped_runs(piece, m, clip):
                    lines.append(_polyline(run, "#888888", thin_width))
        lines.append("</g>")
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
