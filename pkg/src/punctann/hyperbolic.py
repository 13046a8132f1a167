"""Hyperbolic data of a once-punctured annulus from its covering group.

The group is generated by a dilation z -> k^2 z and a parabolic map fixing
z = 1, acting on the upper half-plane.  From the pair (k, r) with
1 < r < k this module produces the two boundary geodesic lengths, the
angles of the maximal collars about them, and the comparison facts that
relate the two angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConsistencyError, DomainError
from .moebius import MoebiusMap

_TIE_TOL = 1e-12


@dataclass(frozen=True)
class GroupParams:
    """Covering-group parameters, constrained to 1 < r < k < inf."""

    k: float
    r: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.k) and math.isfinite(self.r)):
            raise DomainError(f"parameters must be finite, got k={self.k}, r={self.r}")
        if not 1.0 < self.r < self.k:
            raise DomainError(f"need 1 < r < k, got k={self.k}, r={self.r}")


@dataclass(frozen=True)
class HyperbolicReport:
    """Geodesic lengths, maximal collar angles, and the auxiliary scalars.

    delta locates the tangency point of the two collars on the boundary;
    t is the dilation scale whose collar angle about the second geodesic
    matches theta2.
    """

    l1: float
    l2: float
    theta1: float
    theta2: float
    t: float
    delta: float


def hyperbolic_generator(k: float) -> MoebiusMap:
    """The dilation z -> k^2 z as a determinant-one matrix."""
    if not (math.isfinite(k) and k > 1.0):
        raise DomainError(f"need k > 1, got {k}")
    return MoebiusMap(k, 0.0, 0.0, 1.0 / k)


def parabolic_generator(r: float) -> MoebiusMap:
    """The parabolic map fixing 1 that pairs the circles of radius (r-1)/(2r)
    and (r-1)/2 tangent at 1."""
    if not (math.isfinite(r) and r > 1.0):
        raise DomainError(f"need r > 1, got {r}")
    # divide by r - 1 entrywise rather than letting the determinant
    # normalization do it: (r+1)^2 - 4r cancels badly for r near 1
    s = r - 1.0
    return MoebiusMap.unit_determinant(
        2.0 * r / s, -(r + 1.0) / s, (r + 1.0) / s, -2.0 / s
    )


def build_group(params: GroupParams) -> tuple[MoebiusMap, MoebiusMap]:
    return hyperbolic_generator(params.k), parabolic_generator(params.r)


def geodesic_lengths(params: GroupParams) -> tuple[float, float]:
    """Lengths of the two boundary geodesics.

    l1 belongs to the dilation, l2 to the hyperbolic composite f g^-1
    whose half-trace is (k - r/k)/(r - 1).
    """
    k, r = params.k, params.r
    l1 = 2.0 * math.log(k)
    half_trace = (k - r / k) / (r - 1.0)
    if not half_trace > 1.0:
        raise ConsistencyError(f"composite map is not hyperbolic: half trace {half_trace}")
    l2 = 2.0 * math.acosh(half_trace)
    return l1, l2


def _delta(k: float, r: float) -> float:
    # algebraically k^2 + r - sqrt((k^2-1)(k^2-r^2)); this quotient form
    # avoids the cancellation that loses all digits for large k
    k2 = k * k
    s = math.sqrt((k2 - 1.0) * (k2 - r * r))
    return k2 * (r + 1.0) * (r + 1.0) / (k2 + r + s)


def _matching_scale(k: float, r: float, delta: float) -> float:
    # algebraically (r-1)(r+1+delta) / ((r+3)delta - (r+1)(3r+1)), but that
    # denominator is O((r-1)^2) formed from O(1) terms and rounds to zero
    # as r -> 1; rationalizing it factors the small quantity out exactly
    k2 = k * k
    s = math.sqrt((k2 - 1.0) * (k2 - r * r))
    big_a = (r + 3.0) * (k - r) * (k + r) + (r - 1.0) * (r + 1.0) ** 2
    return (
        (r + 1.0 + delta)
        * (big_a + (r + 3.0) * s)
        / ((r - 1.0) * (r + 1.0) * ((r + 3.0) * k2 + 3.0 * r + 1.0))
    )


def collar_angles(params: GroupParams) -> HyperbolicReport:
    """Angles of the maximal disjoint collars about the two geodesics."""
    k, r = params.k, params.r
    l1, l2 = geodesic_lengths(params)
    delta = _delta(k, r)
    lo = 0.5 * (r + 1.0) * (r + 1.0)
    hi = r * (r + 1.0)
    if not lo * (1.0 - 1e-9) < delta < hi * (1.0 + 1e-9):
        raise ConsistencyError(f"tangency scalar {delta} escapes ({lo}, {hi})")
    t = _matching_scale(k, r, delta)
    if not t > 1.0:
        raise ConsistencyError(f"matching scale {t} is not > 1")
    theta1 = math.acos((r - 1.0) / (r + 1.0))
    theta2 = math.acos((t - 1.0) / (t + 1.0))
    return HyperbolicReport(l1=l1, l2=l2, theta1=theta1, theta2=theta2, t=t, delta=delta)


def angles_from_lengths(l1: float, l2: float) -> tuple[float, float]:
    """Collar angles from the two lengths alone:
    cos(theta_j) = sinh(l_j/2) / (cosh(l1/2) + cosh(l2/2)).

    Scaled by exp(-max/2) so the quotient stays finite for any lengths.
    """
    if not (l1 > 0.0 and l2 > 0.0 and math.isfinite(l1) and math.isfinite(l2)):
        raise DomainError(f"lengths must be positive and finite, got {l1}, {l2}")
    a, b = 0.5 * l1, 0.5 * l2
    m = max(a, b)
    ea, eb = math.exp(a - m), math.exp(b - m)
    ta, tb = ea * (1.0 + math.exp(-2.0 * a)), eb * (1.0 + math.exp(-2.0 * b))
    den = ta + tb
    num1 = ea * -math.expm1(-2.0 * a)
    num2 = eb * -math.expm1(-2.0 * b)
    # den - num_j computed term by term: the difference underflows long
    # before acos(num/den) could resolve the angle
    gap1 = 2.0 * math.exp(-a - m) + tb
    gap2 = 2.0 * math.exp(-b - m) + ta
    theta1 = math.atan2(math.sqrt(gap1 * (den + num1)), num1)
    theta2 = math.atan2(math.sqrt(gap2 * (den + num2)), num2)
    return theta1, theta2


def collar_lemma_angle(l: float) -> float:
    """Angle of the collar every simple closed geodesic of length l carries,
    arctan(1 / sinh(l/2))."""
    if not (l > 0.0 and math.isfinite(l)):
        raise DomainError(f"length must be positive and finite, got {l}")
    x = 0.5 * l
    inv_sinh = 2.0 * math.exp(-x) / -math.expm1(-2.0 * x)
    return math.atan(inv_sinh)


def width_to_distance(theta: float) -> float:
    """Half-width of a collar of angle theta: arcsinh(tan theta) / 2."""
    if not 0.0 < theta < 0.5 * math.pi:
        raise DomainError(f"angle must lie in (0, pi/2), got {theta}")
    return 0.5 * math.asinh(math.tan(theta))


def pants_separation(l1: float, l2: float) -> float:
    """Distance between the two boundary geodesics of the pair of pants with
    cuff lengths l1, l2 and one puncture:
    sinh(d) = (cosh(l1/2) + cosh(l2/2)) / (sinh(l1/2) sinh(l2/2))."""
    if not (l1 > 0.0 and l2 > 0.0 and math.isfinite(l1) and math.isfinite(l2)):
        raise DomainError(f"lengths must be positive and finite, got {l1}, {l2}")
    a, b = 0.5 * l1, 0.5 * l2
    ea, eb = math.exp(-a), math.exp(-b)
    num = 2.0 * (eb * (1.0 + ea * ea) + ea * (1.0 + eb * eb))
    den = -math.expm1(-2.0 * a) * -math.expm1(-2.0 * b)
    return math.asinh(num / den)


def equal_length_scale(r: float) -> float:
    """The k at which both collar angles agree, sqrt((3r-1)/(3-r));
    only groups with 1 < r < 3 admit one."""
    if not 1.0 < r < 3.0:
        raise DomainError(f"need 1 < r < 3, got {r}")
    return math.sqrt((3.0 * r - 1.0) / (3.0 - r))


def midpoint_group(r: float) -> GroupParams:
    """The member of the r-family whose two collar angles are equal."""
    return GroupParams(k=equal_length_scale(r), r=r)


def trichotomy(params: GroupParams) -> str:
    """Compare the collar angles: "theta1_gt", "equal", or "theta1_lt".

    For r >= 3 the first angle is always the smaller; below that the sign
    switches across k = sqrt((3r-1)/(3-r)).
    """
    k, r = params.k, params.r
    if r >= 3.0:
        return "theta1_lt"
    pivot = equal_length_scale(r)
    if abs(k - pivot) < _TIE_TOL:
        return "equal"
    return "theta1_gt" if k > pivot else "theta1_lt"
