"""Complete elliptic integrals, the modulus quotient mu, and Jacobi functions.

Everything here uses the modulus convention: the parameter of K, sn, cn, dn
is a modulus in (0, 1), not its square.  A modulus travels together with its
complementary modulus so that values pinned against 0 or 1 keep full
precision; see ModulusReal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConsistencyError, ConvergenceError, DomainError, PoleError

# Below _SMALL_MODULUS the asymptotic forms are beyond double precision
# (truncation error O(m^2/4) < 2.5e-17); the complement threshold is the
# image of 1 - _SMALL_MODULUS under m -> sqrt(1 - m^2).
_SMALL_MODULUS = 1e-8
_NEAR_ONE_COMPLEMENT = math.sqrt(_SMALL_MODULUS * (2.0 - _SMALL_MODULUS))
_ONE_BELOW = math.nextafter(1.0, 0.0)

# mu values outside this band would need a modulus (or complement) smaller
# than float64 can represent: mu = 700 means m = 4*exp(-700) ~ 4e-304.
MU_MAX = 700.0
MU_MIN = math.pi**2 / (4.0 * MU_MAX)

_Y_TINY_MODULUS = math.log(4.0 / _SMALL_MODULUS)  # mu at m = 1e-8
_Y_NEAR_ONE = 0.3  # below this, invert through the complement

_AGM_MAX_ITER = 64
_BISECT_LO = 1e-300
_BISECT_HI = 1.0 - 1e-16
_BISECT_WIDTH = 1e-15


@dataclass(frozen=True)
class ModulusReal:
    """A modulus m in (0, 1) stored alongside sqrt(1 - m^2).

    Carrying the complement explicitly is what keeps computations near the
    endpoints honest: for m within 1e-16 of 1 the value field saturates at
    the largest double below 1 while the complement still resolves the
    distance to 1 exactly.
    """

    value: float
    complement: float

    def __post_init__(self) -> None:
        v, c = self.value, self.complement
        if not (math.isfinite(v) and 0.0 < v < 1.0):
            raise DomainError(f"modulus must lie in (0, 1), got {v!r}")
        if not (math.isfinite(c) and 0.0 < c <= 1.0):
            raise DomainError(f"complementary modulus out of range: {c!r}")
        if abs(v * v + c * c - 1.0) > 1e-14:
            raise ConsistencyError(
                f"modulus pair ({v!r}, {c!r}) violates v^2 + c^2 = 1"
            )

    @classmethod
    def from_value(cls, v: float) -> "ModulusReal":
        if not (math.isfinite(v) and 0.0 < v < 1.0):
            raise DomainError(f"modulus must lie in (0, 1), got {v!r}")
        c = math.sqrt((1.0 - v) * (1.0 + v))
        return cls(v, min(c, 1.0))

    @classmethod
    def from_complement(cls, c: float) -> "ModulusReal":
        if not (math.isfinite(c) and 0.0 < c < 1.0):
            raise DomainError(f"complementary modulus must lie in (0, 1), got {c!r}")
        v = math.sqrt((1.0 - c) * (1.0 + c))
        return cls(min(v, _ONE_BELOW), c)

    def complementary(self) -> "ModulusReal":
        """The modulus pair with value and complement exchanged."""
        return ModulusReal(min(self.complement, _ONE_BELOW), self.value)


@dataclass(frozen=True)
class EllipticPair:
    """K(m) and K(m') for one modulus."""

    big_k: float
    big_k_prime: float

    def __post_init__(self) -> None:
        for name, x in (("big_k", self.big_k), ("big_k_prime", self.big_k_prime)):
            if not (math.isfinite(x) and x > 0.0):
                raise ConsistencyError(f"{name} must be positive and finite, got {x!r}")


@dataclass(frozen=True)
class JacobiTriple:
    """sn, cn, dn at one real argument and modulus."""

    sn: float
    cn: float
    dn: float


def _as_modulus(m: "ModulusReal | float") -> ModulusReal:
    if isinstance(m, ModulusReal):
        return m
    return ModulusReal.from_value(float(m))


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive reals."""
    if not (a > 0.0 and b > 0.0 and math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"agm needs positive finite arguments, got {a!r}, {b!r}")
    for _ in range(_AGM_MAX_ITER):
        if abs(a - b) <= 4e-16 * a:
            return 0.5 * (a + b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    raise ConvergenceError("agm failed to converge")


def ellip_k(m: "ModulusReal | float") -> float:
    """Complete elliptic integral of the first kind, modulus convention."""
    mm = _as_modulus(m)
    return math.pi / (2.0 * agm(1.0, mm.complement))


def elliptic_pair(m: "ModulusReal | float") -> EllipticPair:
    """K and K' for one modulus, sharing the stored complement."""
    mm = _as_modulus(m)
    return EllipticPair(
        big_k=math.pi / (2.0 * agm(1.0, mm.complement)),
        big_k_prime=math.pi / (2.0 * agm(1.0, mm.value)),
    )


def mu(m: "ModulusReal | float") -> float:
    """The decreasing modulus quotient (pi/2) * K'(m) / K(m).

    Near the endpoints the quotient is evaluated through its asymptotic
    form ln(4/m) and the reciprocal law mu(m) * mu(m') = pi^2 / 4, which
    avoids the cancellation a direct K'/K ratio would suffer there.
    """
    mm = _as_modulus(m)
    if mm.value < _SMALL_MODULUS:
        return math.log(4.0 / mm.value)
    if mm.complement < _NEAR_ONE_COMPLEMENT:
        return (math.pi * math.pi / 4.0) / mu(mm.complementary())
    return 0.5 * math.pi * agm(1.0, mm.complement) / agm(1.0, mm.value)


def _mu_inverse_central(y: float) -> float:
    """Invert mu by bisection plus two Newton polish steps.

    Valid for y in the central band where the target modulus is a normal
    float comfortably inside (0, 1).
    """
    lo, hi = _BISECT_LO, _BISECT_HI
    for _ in range(200):
        if hi - lo <= _BISECT_WIDTH:
            break
        mid = 0.5 * (lo + hi)
        if mu(ModulusReal.from_value(mid)) > y:
            lo = mid  # mu decreasing: value too small
        else:
            hi = mid
    else:
        raise ConvergenceError("mu_inverse bisection exhausted its budget")
    x = 0.5 * (lo + hi)
    for _ in range(2):
        h = 1e-6 * min(x, 1.0 - x)
        f_hi = mu(ModulusReal.from_value(x + h))
        f_lo = mu(ModulusReal.from_value(x - h))
        deriv = (f_hi - f_lo) / (2.0 * h)
        if deriv == 0.0:
            break
        x -= (mu(ModulusReal.from_value(x)) - y) / deriv
        x = min(max(x, _BISECT_LO), _BISECT_HI)
    return x


def mu_inverse(y: float) -> ModulusReal:
    """The unique modulus m with mu(m) = y.

    Raises DomainError for y <= 0 and for y outside [MU_MIN, MU_MAX]; beyond
    that band the modulus (or its complement) would underflow float64, so no
    representable answer exists.
    """
    if not (math.isfinite(y) and y > 0.0):
        raise DomainError(f"mu_inverse needs y > 0, got {y!r}")
    if y > MU_MAX or y < MU_MIN:
        raise DomainError(
            f"mu_inverse({y!r}) lies outside the float64-representable band "
            f"[{MU_MIN:.6g}, {MU_MAX:.6g}]"
        )
    if y >= _Y_TINY_MODULUS:
        v = 4.0 * math.exp(-y)
        return ModulusReal(v, min(math.sqrt((1.0 - v) * (1.0 + v)), 1.0))
    if y <= _Y_NEAR_ONE:
        c = mu_inverse(math.pi * math.pi / (4.0 * y)).value
        v = math.sqrt((1.0 - c) * (1.0 + c))
        return ModulusReal(min(v, _ONE_BELOW), c)
    return ModulusReal.from_value(_mu_inverse_central(y))


def _triple(sn: float, cn: float, dn: float, m: ModulusReal) -> JacobiTriple:
    if abs(sn * sn + cn * cn - 1.0) > 1e-12:
        raise ConsistencyError(f"sn^2 + cn^2 drifted from 1: sn={sn!r} cn={cn!r}")
    if abs(dn * dn + (m.value * sn) ** 2 - 1.0) > 1e-12:
        raise ConsistencyError(f"dn^2 + m^2 sn^2 drifted from 1: dn={dn!r}")
    if not (m.complement - 1e-12 <= dn <= 1.0 + 1e-12):
        raise ConsistencyError(f"dn={dn!r} left [complement, 1]")
    return JacobiTriple(sn, cn, dn)


def _jacobi_agm(v: float, m: ModulusReal) -> tuple[float, float, float]:
    """Descending Landen ladder seeded by the AGM scale; v in [0, K]."""
    a, b, c = 1.0, m.complement, m.value
    scale_a = [a]
    scale_c = [c]
    for _ in range(_AGM_MAX_ITER):
        if abs(c) <= 1e-15 * a:
            break
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        scale_a.append(a)
        scale_c.append(c)
    else:
        raise ConvergenceError("jacobi Landen ladder failed to converge")
    n = len(scale_a) - 1
    phi = math.ldexp(scale_a[n] * v, n)
    for i in range(n, 0, -1):
        s = scale_c[i] / scale_a[i] * math.sin(phi)
        phi = 0.5 * (phi + math.asin(max(-1.0, min(1.0, s))))
    sn = math.sin(phi)
    cn = math.cos(phi)
    dn = math.sqrt(m.complement**2 + (m.value * cn) ** 2)
    return sn, cn, dn


def _jacobi_trig(v: float, m: ModulusReal) -> tuple[float, float, float]:
    """Small-modulus expansion; truncation error O(m^4)."""
    s, c = math.sin(v), math.cos(v)
    corr = 0.25 * m.value * m.value * (v - s * c)
    dn = 1.0 - 0.5 * (m.value * s) ** 2
    return s + corr * c, c - corr * s, dn


def _jacobi_hyp_direct(v: float, m: ModulusReal) -> tuple[float, float, float]:
    mc = m.complement
    th = math.tanh(v)
    sech = 1.0 / math.cosh(v)
    # mc^2 * sinh(v)cosh(v), written to survive v of several hundred
    e = mc * math.exp(v)
    shch = 0.25 * e * e * (1.0 - math.exp(-4.0 * v))
    corr1 = 0.25 * (shch - mc * mc * v)
    corr2 = 0.25 * (shch + mc * mc * v)
    sn = th + corr1 * sech * sech
    cn = sech * (1.0 - corr1 * th)
    dn = sech * (1.0 + corr2 * th)
    return sn, cn, dn


def _jacobi_hyp(v: float, m: ModulusReal, big_k: float) -> tuple[float, float, float]:
    """Near-one-modulus expansion; reflect across K/2 to keep the
    truncation error O(complement^3) on the whole of [0, K]."""
    if v <= 0.5 * big_k:
        return _jacobi_hyp_direct(v, m)
    sn_t, cn_t, dn_t = _jacobi_hyp_direct(big_k - v, m)
    mc = m.complement
    return cn_t / dn_t, mc * sn_t / dn_t, mc / dn_t


def jacobi(u: float, m: "ModulusReal | float") -> JacobiTriple:
    """sn, cn, dn at real argument u.

    The argument is first reduced modulo the 4K period, then folded into
    [0, K] with the quarter-period sign table; the kernel on [0, K] is the
    AGM phase ladder, or a trigonometric/hyperbolic expansion when the
    modulus sits against an endpoint.
    """
    if not math.isfinite(u):
        raise DomainError(f"jacobi needs a finite argument, got {u!r}")
    mm = _as_modulus(m)
    big_k = ellip_k(mm)
    period = 4.0 * big_k
    w = u - period * math.floor(u / period)
    # roundoff (or u/period underflowing to -0.0) can leave w outside [0, period)
    if w < 0.0:
        w += period
    if w >= period:
        w -= period
    quadrant = min(int(w // big_k), 3)
    if quadrant == 0:
        v, signs = w, (1.0, 1.0)
    elif quadrant == 1:
        v, signs = 2.0 * big_k - w, (1.0, -1.0)
    elif quadrant == 2:
        v, signs = w - 2.0 * big_k, (-1.0, -1.0)
    else:
        v, signs = 4.0 * big_k - w, (-1.0, 1.0)
    v = min(max(v, 0.0), big_k)

    if mm.value < _SMALL_MODULUS:
        sn, cn, dn = _jacobi_trig(v, mm)
    elif mm.complement < _SMALL_MODULUS:
        sn, cn, dn = _jacobi_hyp(v, mm, big_k)
    else:
        sn, cn, dn = _jacobi_agm(v, mm)
    return _triple(signs[0] * sn, signs[1] * cn, dn, mm)


def jacobi_complex_sn(z: complex, m: "ModulusReal | float") -> complex:
    """sn at a complex argument, via the addition theorem on z = x + iy.

    Raises PoleError when z is too close to a pole of sn (the denominator
    of the addition formula collapses below 1e-12).
    """
    mm = _as_modulus(m)
    z = complex(z)
    tx = jacobi(z.real, mm)
    ty = jacobi(z.imag, mm.complementary())
    denom = ty.cn**2 + (mm.value * tx.sn * ty.sn) ** 2
    if abs(denom) < 1e-12:
        raise PoleError(f"argument {z!r} is too close to a pole of sn")
    re = tx.sn * ty.dn / denom
    im = tx.cn * tx.dn * ty.sn * ty.cn / denom
    return complex(re, im)
