"""Extremal lengths on a punctured annulus via elliptic integrals.

The annulus 1/R < |w| < R punctured at w = a carries two distinguished
curve families: loops separating the boundary circles, and loops through
the puncture separating it from either circle.  Their extremal lengths
come from a conformal map onto a disk with two radial slits, whose
positions are values of Jacobi functions at a modulus q determined by R.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .elliptic import (
    MU_MAX,
    MU_MIN,
    ModulusReal,
    elliptic_pair,
    jacobi,
    jacobi_complex_sn,
    mu,
    mu_inverse,
)
from .errors import DomainError, PoleError
from .hyperbolic import GroupParams, angles_from_lengths, geodesic_lengths

_ONE_BELOW = math.nextafter(1.0, 0.0)
_DOWNGRADE_EDGE = 1e-8


@dataclass(frozen=True)
class AnnulusParams:
    """Round annulus 1/R < |w| < R punctured at the real point a."""

    R: float
    a: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.R) and self.R > 1.0):
            raise DomainError(f"need R > 1, got {self.R}")
        if not 1.0 / self.R < self.a < self.R:
            raise DomainError(f"puncture a={self.a} outside (1/R, R) for R={self.R}")


@dataclass(frozen=True)
class ExtremalReport:
    """Solved complex-structure data for one punctured annulus.

    u1/u2 are the elliptic arguments of the puncture seen from the two
    boundary circles, p1/p2 the slit-end moduli, lambda1/lambda2 the
    extremal lengths of the curve families through the puncture, and b
    the inner radius of the normalized annulus.  alpha1/alpha2 are the
    puncture images in the two slit pictures.  precision_downgraded is
    set when q sits so close to an endpoint that the slower digits decay
    applies.
    """

    q: ModulusReal
    big_k: float
    big_k_prime: float
    u1: float
    u2: float
    alpha1: float
    alpha2: float
    p1: ModulusReal
    p2: ModulusReal
    lambda1: float
    lambda2: float
    b: float
    precision_downgraded: bool


def solve_q(R: float) -> ModulusReal:
    """Modulus q with mu(q) = 4 log R."""
    if not (math.isfinite(R) and R > 1.0):
        raise DomainError(f"need R > 1, got {R}")
    y = 4.0 * math.log(R)
    if not MU_MIN <= y <= MU_MAX:
        raise DomainError(
            f"R={R} gives mu={y}, outside the solvable band "
            f"[{MU_MIN}, {MU_MAX}]"
        )
    return mu_inverse(y)


def _slit_modulus(q: ModulusReal, dn: float) -> ModulusReal:
    sq = math.sqrt(q.value)
    value = sq * (dn + 1.0) / (q.value + dn)
    one_minus_q = q.complement * q.complement / (1.0 + q.value)
    radicand = one_minus_q * (dn * dn - q.value)
    if radicand > 0.0:
        comp = math.sqrt(radicand) / (q.value + dn)
        return ModulusReal(min(value, _ONE_BELOW), comp)
    if value < 1.0 - 1e-12:
        return ModulusReal.from_value(value)
    raise DomainError(
        "slit modulus is too close to 1 to resolve in double precision"
    )


def extremal_lengths(params: AnnulusParams) -> ExtremalReport:
    """Solve the annulus: moduli, slit positions, and extremal lengths."""
    R, a = params.R, params.a
    q = solve_q(R)
    pair = elliptic_pair(q)
    big_k, big_kp = pair.big_k, pair.big_k_prime
    scale = 2.0 * big_k / math.pi
    u1 = scale * math.log(R * a)
    u2 = scale * math.log(R / a)
    qc = q.complementary()
    dn1 = jacobi(u1, qc).dn
    dn2 = jacobi(u2, qc).dn
    sq = math.sqrt(q.value)
    p1 = _slit_modulus(q, dn1)
    p2 = _slit_modulus(q, dn2)
    return ExtremalReport(
        q=q,
        big_k=big_k,
        big_k_prime=big_kp,
        u1=u1,
        u2=u2,
        alpha1=sq / dn1,
        alpha2=sq / dn2,
        p1=p1,
        p2=p2,
        lambda1=2.0 * math.pi / mu(p1),
        lambda2=2.0 * math.pi / mu(p2),
        b=math.exp(-math.pi * big_kp / (4.0 * big_k)),
        precision_downgraded=(
            q.value < _DOWNGRADE_EDGE or 1.0 - q.value < _DOWNGRADE_EDGE
        ),
    )


def symmetric_p(q: "ModulusReal | float") -> float:
    """Slit modulus for the centered puncture a = 1, in closed form."""
    qv = q.value if isinstance(q, ModulusReal) else q
    if not 0.0 < qv < 1.0:
        raise DomainError(f"modulus must lie in (0, 1), got {qv}")
    s1 = math.sqrt(1.0 + qv)
    dn = qv**0.25 * math.sqrt((s1 + 1.0) / (s1 + math.sqrt(qv)))
    return math.sqrt(qv) * (dn + 1.0) / (qv + dn)


def omega_map(z: "complex | float", R: float) -> complex:
    """Conformal map from the normalized annulus b < |z| < 1 onto the unit
    disk with a radial slit, as sqrt(q) sn(K + i (2K/pi) log(z/b)).

    Real z is read as lying on the upper edge of the cut along the
    negative axis.
    """
    q = solve_q(R)
    pair = elliptic_pair(q)
    big_k, big_kp = pair.big_k, pair.big_k_prime
    b = math.exp(-math.pi * big_kp / (4.0 * big_k))
    w = complex(z)
    if w.imag == 0.0:
        w = complex(w.real, 0.0)
    mag = abs(w)
    if not b < mag < 1.0:
        raise DomainError(f"|z|={mag} outside the annulus ({b}, 1)")
    arg = big_k + 1j * (2.0 * big_k / math.pi) * cmath.log(w / b)
    return math.sqrt(q.value) * jacobi_complex_sn(arg, q)


def sigma_map(z: "complex | float", q: "ModulusReal | float") -> "complex | float":
    """Disk automorphism (z + sqrt(q)) / (sqrt(q) z + 1)."""
    qv = q.value if isinstance(q, ModulusReal) else q
    if not 0.0 < qv < 1.0:
        raise DomainError(f"modulus must lie in (0, 1), got {qv}")
    sq = math.sqrt(qv)
    denom = sq * z + 1.0
    if abs(denom) < 1e-12:
        raise PoleError(f"sigma has a pole at z={z!r}")
    return (z + sq) / denom


def slit_extremal_length(x: "ModulusReal | float") -> float:
    """Extremal length 2 pi / mu(x) of the family of loops in the unit disk
    separating the slit [0, x] from the boundary circle."""
    return 2.0 * math.pi / mu(x)


def length_bounds(l1: float, l2: float) -> tuple[tuple[float, float], tuple[float, float]]:
    """Sandwich for each extremal length in terms of the geodesic lengths:
    l/pi <= lambda <= l/(pi/2 + theta) with theta the maximal collar angle."""
    theta1, theta2 = angles_from_lengths(l1, l2)
    b1 = (l1 / math.pi, l1 / (0.5 * math.pi + theta1))
    b2 = (l2 / math.pi, l2 / (0.5 * math.pi + theta2))
    return b1, b2


def consistency_check(
    annulus: AnnulusParams, group: GroupParams
) -> tuple[bool, dict]:
    """Test the extremal lengths of the annulus against the bounds derived
    from the geodesic lengths of the group."""
    report = extremal_lengths(annulus)
    l1, l2 = geodesic_lengths(group)
    (lo1, hi1), (lo2, hi2) = length_bounds(l1, l2)
    ok1 = lo1 <= report.lambda1 <= hi1
    ok2 = lo2 <= report.lambda2 <= hi2
    details = {
        "lambda1": report.lambda1,
        "bounds1": (lo1, hi1),
        "ok1": ok1,
        "lambda2": report.lambda2,
        "bounds2": (lo2, hi2),
        "ok2": ok2,
    }
    return ok1 and ok2, details
