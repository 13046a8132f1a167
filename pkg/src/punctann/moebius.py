"""Moebius transformations as determinant-one 2x2 matrices up to sign.

Real-entried maps preserve the upper half-plane; complex entries are allowed
for the disk-model maps.  The point at infinity on the boundary circle is
represented by math.inf (both signed infinities name the same boundary
point).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import ClassificationError, ConsistencyError, DomainError

INFINITY = math.inf

_DET_DRIFT = 1e-14
_DET_TOL = 1e-12
_PARABOLIC_TOL = 1e-10
_IDENTITY_TOL = 1e-12


def _tidy(x: "float | complex") -> "float | complex":
    if isinstance(x, complex):
        if x.imag == 0.0:
            return float(x.real)
        return x
    return float(x)


def _is_negative(e: "float | complex") -> bool:
    if isinstance(e, complex):
        if e.real != 0.0:
            return e.real < 0.0
        return e.imag < 0.0
    return e < 0.0


@dataclass(frozen=True)
class MoebiusMap:
    """z -> (a z + b) / (c z + d) with a d - b c = 1.

    Any nonzero-determinant coefficients are accepted; construction rescales
    them to determinant one and then fixes the overall sign so that the
    first nonzero entry of (a, b, c, d) is positive.  Real coefficients with
    negative determinant are rejected: those maps exchange the half-planes.
    """

    a: "float | complex"
    b: "float | complex"
    c: "float | complex"
    d: "float | complex"

    def __post_init__(self) -> None:
        a, b, c, d = (_tidy(e) for e in (self.a, self.b, self.c, self.d))
        det = a * d - b * c
        if det == 0 or not _finite_number(det):
            raise DomainError(f"matrix ({a!r}, {b!r}, {c!r}, {d!r}) is singular")
        real = all(isinstance(e, float) for e in (a, b, c, d))
        if real and det < 0.0:
            raise DomainError(
                "real coefficients with negative determinant do not preserve "
                "the upper half-plane"
            )
        # ad - bc is known only to the cancellation noise of its two terms,
        # so the drift tolerance must scale with them
        noise = 4e-15 * max(1.0, abs(a * d), abs(b * c))
        if abs(det - 1.0) > max(_DET_DRIFT, noise):
            root = math.sqrt(det) if real else cmath.sqrt(det)
            a, b, c, d = a / root, b / root, c / root, d / root
            det = a * d - b * c
            noise = 4e-15 * max(1.0, abs(a * d), abs(b * c))
        if abs(det - 1.0) > max(_DET_TOL, noise):
            raise ConsistencyError(f"determinant failed to normalize: {det!r}")
        for e in (a, b, c, d):
            if abs(e) > 1e-12:
                if _is_negative(e):
                    a, b, c, d = -a, -b, -c, -d
                break
        for name, e in (("a", a), ("b", b), ("c", c), ("d", d)):
            object.__setattr__(self, name, _tidy(e))

    @classmethod
    def unit_determinant(cls, a, b, c, d) -> "MoebiusMap":
        """Entries with a d - b c = 1 by construction.

        Skips the numeric determinant check: for entries of size s the
        computed determinant is only known to ~s^2 ulp, which for s beyond
        1e8 cannot tell 1 from 0.  Callers must guarantee the determinant
        algebraically; composition and inversion of unit-determinant maps
        qualify, as do closed forms divided through analytically.
        """
        a, b, c, d = (_tidy(e) for e in (a, b, c, d))
        for e in (a, b, c, d):
            if not _finite_number(e):
                raise DomainError(f"matrix entry {e!r} is not finite")
        for e in (a, b, c, d):
            if abs(e) > 1e-12:
                if _is_negative(e):
                    a, b, c, d = -a, -b, -c, -d
                break
        obj = object.__new__(cls)
        for name, e in (("a", a), ("b", b), ("c", c), ("d", d)):
            object.__setattr__(obj, name, e)
        return obj

    @property
    def is_real(self) -> bool:
        return all(isinstance(e, float) for e in (self.a, self.b, self.c, self.d))

    @property
    def trace(self) -> "float | complex":
        return self.a + self.d

    def matrix(self) -> tuple[tuple["float | complex", ...], ...]:
        return ((self.a, self.b), (self.c, self.d))

    def compose(self, other: "MoebiusMap") -> "MoebiusMap":
        # a product of unit-determinant maps has unit determinant
        return MoebiusMap.unit_determinant(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap.unit_determinant(self.d, -self.b, -self.c, self.a)

    def __call__(self, z: "float | complex"):
        if isinstance(z, float) and math.isinf(z):
            if self.c == 0:
                return INFINITY
            return self.a / self.c
        denom = self.c * z + self.d
        if denom == 0:
            return INFINITY
        return (self.a * z + self.b) / denom


def _finite_number(x: "float | complex") -> bool:
    if isinstance(x, complex):
        return cmath.isfinite(x)
    return math.isfinite(x)


@dataclass(frozen=True)
class MapClass:
    """Conjugacy class of a boundary-preserving map."""

    tag: str  # "identity" | "parabolic" | "elliptic" | "hyperbolic"
    trace_sq: float


def conjugate(p: MoebiusMap, s: MoebiusMap) -> MoebiusMap:
    """s o p o s^-1."""
    return s.compose(p).compose(s.inverse())


def classify(p: MoebiusMap) -> MapClass:
    """Sort a real map into identity / parabolic / elliptic / hyperbolic."""
    if not p.is_real:
        raise ClassificationError("classification is defined for real maps only")
    if (
        abs(p.b) < _IDENTITY_TOL
        and abs(p.c) < _IDENTITY_TOL
        and abs(p.a - 1.0) < _IDENTITY_TOL
        and abs(p.d - 1.0) < _IDENTITY_TOL
    ):
        return MapClass("identity", p.trace * p.trace)
    tr2 = p.trace * p.trace
    # entries rounding-close to an ideal parabolic leave a residue in
    # tr^2 - 4 of order ulp(|a| + |d|), so the window must scale with them
    noise = 4e-15 * (abs(p.a) + abs(p.d))
    if abs(tr2 - 4.0) < max(_PARABOLIC_TOL, noise):
        return MapClass("parabolic", tr2)
    if tr2 > 4.0:
        return MapClass("hyperbolic", tr2)
    return MapClass("elliptic", tr2)


def translation_length(p: MoebiusMap) -> float:
    """Hyperbolic displacement along the axis: 2 arccosh(|tr|/2)."""
    cls = classify(p)
    if cls.tag != "hyperbolic":
        raise ClassificationError(f"translation length needs a hyperbolic map, got {cls.tag}")
    return 2.0 * math.acosh(0.5 * abs(p.trace))


def fixed_points(p: MoebiusMap) -> tuple[float, ...]:
    """Boundary fixed points, ascending, with math.inf last when present.

    Defined for nonidentity parabolic and hyperbolic maps; elliptic maps fix
    no boundary point.
    """
    cls = classify(p)
    if cls.tag == "identity":
        raise ClassificationError("the identity fixes every point")
    if cls.tag == "elliptic":
        raise ClassificationError("an elliptic map has no boundary fixed point")
    a, b, c, d = p.a, p.b, p.c, p.d
    if abs(c) < 1e-14:
        if abs(a - d) < _IDENTITY_TOL:
            return (INFINITY,)  # pure translation
        return (b / (d - a) + 0.0, INFINITY)
    if cls.tag == "parabolic":
        return ((a - d) / (2.0 * c),)
    disc = p.trace * p.trace - 4.0
    root = math.sqrt(max(disc, 0.0))
    x1 = (a - d - root) / (2.0 * c)
    x2 = (a - d + root) / (2.0 * c)
    return (x1, x2) if x1 <= x2 else (x2, x1)
