"""Degenerating families of punctured annuli as executable convergence checks.

Four one-parameter families each drive the surface toward a boundary of
moduli space.  For every family this module knows the closed-form limit of
a handful of observables and can sweep a sample path, reporting how far
each observable still is from its target and refusing paths on which the
gap fails to shrink.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .elliptic import JacobiTriple, elliptic_pair, jacobi
from .errors import ConsistencyError, DomainError
from .extremal import AnnulusParams, extremal_lengths, solve_q
from .hyperbolic import hyperbolic_generator, parabolic_generator
from .moebius import MoebiusMap, conjugate

CASE_TAGS = (
    "i_puncture_to_boundary",
    "ii_R_to_infinity",
    "iii_R_to_one",
    "iv_ratio_fixed",
)

# conjugating nearly-parabolic maps amplifies roundoff by the degenerating
# scale; deviations below this floor count as converged and are exempt from
# the monotone-decay requirement
_DECAY_FLOOR = 1e-9


@dataclass(frozen=True)
class LimitScenario:
    """One degenerating family: which case, where its driver is headed,
    and the quantities held fixed along the way."""

    case_tag: str
    driver: float
    frozen: dict

    def __post_init__(self) -> None:
        if self.case_tag not in CASE_TAGS:
            raise DomainError(f"unknown case tag {self.case_tag!r}")


@dataclass(frozen=True)
class ConvergenceRow:
    driver: float
    observable: str
    value: float
    target: float
    deviation: float


@dataclass(frozen=True)
class ConvergenceTable:
    case_tag: str
    frozen: dict
    rows: tuple[ConvergenceRow, ...]


def conjugator_h(k: float) -> MoebiusMap:
    """The map ((k+1)/(k-1))(z-1)/(z+1) sending 1, 1/k, k to 0, -1, 1."""
    if not (math.isfinite(k) and k > 1.0):
        raise DomainError(f"need k > 1, got {k}")
    c = (k + 1.0) / (k - 1.0)
    return MoebiusMap(c, -c, 1.0, 1.0)


def conjugator_h1(r: float) -> MoebiusMap:
    """The map ((r+1)/r)(z-r)/(z-1) sending r, 1, 1/r to 0, inf, (r+1)^2/r."""
    if not (math.isfinite(r) and r > 1.0):
        raise DomainError(f"need r > 1, got {r}")
    return MoebiusMap(r + 1.0, -r * (r + 1.0), r, -r)


def congruence_targets() -> tuple[MoebiusMap, MoebiusMap]:
    """Generators [[1,2],[0,1]], [[1,0],[2,1]] of the level-2 principal
    congruence subgroup, the algebraic limit of the conjugated groups."""
    return MoebiusMap(1.0, 2.0, 0.0, 1.0), MoebiusMap(1.0, 0.0, 2.0, 1.0)


def _check_unit_interval(x: float) -> None:
    if not 0.0 < x <= 1.0:
        raise DomainError(f"need 0 < x <= 1, got {x}")


def limit_sn_value(x: float) -> float:
    """Limit of sn((2K/pi) log x, q') as the annulus ratio grows without
    bound at fixed puncture position x."""
    _check_unit_interval(x)
    return (x * x - 1.0) / (x * x + 1.0)


def limit_jacobi_values(x: float) -> JacobiTriple:
    """The sn limit together with the shared cn and dn limit 2x/(x^2+1)."""
    _check_unit_interval(x)
    companion = 2.0 * x / (x * x + 1.0)
    return JacobiTriple(sn=limit_sn_value(x), cn=companion, dn=companion)


def limit_p1(x: float) -> float:
    """Limit of the first slit modulus at fixed x = a/R: the position x
    itself."""
    _check_unit_interval(x)
    return x


def _entry_deviation(p: MoebiusMap, target: MoebiusMap) -> float:
    return max(
        abs(p.a - target.a),
        abs(p.b - target.b),
        abs(p.c - target.c),
        abs(p.d - target.d),
    )


def default_scenario(case_tag: str) -> tuple[LimitScenario, tuple[float, ...]]:
    """A scenario plus a standard monotone sample path for the case."""
    if case_tag == "i_puncture_to_boundary":
        return (
            LimitScenario(case_tag, 0.0, {"R": 2.0}),
            (1e-2, 1e-3, 1e-4, 1e-5, 1e-6),
        )
    if case_tag == "ii_R_to_infinity":
        return LimitScenario(case_tag, 0.0, {}), (1e-1, 1e-2, 3e-3, 1e-3)
    if case_tag == "iii_R_to_one":
        return (
            LimitScenario(case_tag, 0.0, {"a": 1.0}),
            (1e-1, 3e-2, 1e-2, 3e-3),
        )
    if case_tag == "iv_ratio_fixed":
        return (
            LimitScenario(case_tag, math.inf, {"x": 0.5}),
            (1e2, 1e3, 1e4, 1e5, 1e6),
        )
    raise DomainError(f"unknown case tag {case_tag!r}")


def _case_i_rows(scenario: LimitScenario, eps: float) -> list[ConvergenceRow]:
    big_r = float(scenario.frozen.get("R", 2.0))
    if not 0.0 < eps < 1.0:
        raise DomainError(f"offset must lie in (0, 1), got {eps}")
    report = extremal_lengths(AnnulusParams(big_r, big_r * (1.0 - eps)))
    q0 = solve_q(big_r).value
    lam2_target = math.pi / math.log(big_r)
    p2_target = 2.0 * math.sqrt(q0) / (1.0 + q0)
    return [
        ConvergenceRow(eps, "lambda2", report.lambda2, lam2_target,
                       abs(report.lambda2 - lam2_target)),
        ConvergenceRow(eps, "inv_lambda1", 1.0 / report.lambda1, 0.0,
                       1.0 / report.lambda1),
        ConvergenceRow(eps, "p2", report.p2.value, p2_target,
                       abs(report.p2.value - p2_target)),
    ]


def _case_ii_rows(scenario: LimitScenario, eps: float) -> list[ConvergenceRow]:
    if not 0.0 < eps < 1.0:
        raise DomainError(f"offset must lie in (0, 1), got {eps}")
    k = 1.0 + eps
    f = hyperbolic_generator(k)
    g = parabolic_generator(k)  # the path keeps r = k
    h = conjugator_h(k)
    f0, g0 = congruence_targets()
    dev_f = _entry_deviation(conjugate(f, h), f0)
    dev_g = _entry_deviation(conjugate(g, h), g0)
    return [
        ConvergenceRow(eps, "f_deviation", dev_f, 0.0, dev_f),
        ConvergenceRow(eps, "g_deviation", dev_g, 0.0, dev_g),
    ]


def _case_iii_rows(scenario: LimitScenario, eps: float) -> list[ConvergenceRow]:
    if not 0.0 < eps < 2.0:
        raise DomainError(f"offset must lie in (0, 2), got {eps}")
    a = float(scenario.frozen.get("a", 1.0))
    report = extremal_lengths(AnnulusParams(1.0 + eps, a))
    q = report.q
    one_minus_q = q.complement * q.complement / (1.0 + q.value)
    target_g = MoebiusMap(3.0, -2.0, 2.0, -1.0)
    dev_g = _entry_deviation(parabolic_generator(3.0 - eps), target_g)
    return [
        ConvergenceRow(eps, "one_minus_q", one_minus_q, 0.0, one_minus_q),
        ConvergenceRow(eps, "inv_lambda1", 1.0 / report.lambda1, 0.0,
                       1.0 / report.lambda1),
        ConvergenceRow(eps, "inv_lambda2", 1.0 / report.lambda2, 0.0,
                       1.0 / report.lambda2),
        ConvergenceRow(eps, "g_deviation", dev_g, 0.0, dev_g),
    ]


def _case_iv_rows(scenario: LimitScenario, big_r: float) -> list[ConvergenceRow]:
    x = float(scenario.frozen.get("x", 0.5))
    if not 0.0 < x < 1.0:
        raise DomainError(f"need 0 < x < 1, got {x}")
    if not big_r > 1.0 / x:
        raise DomainError(f"need R > 1/x so the puncture stays interior, got {big_r}")
    q = solve_q(big_r)
    big_k = elliptic_pair(q).big_k
    v = (2.0 * big_k / math.pi) * math.log(x)
    triple = jacobi(v, q.complementary())
    limits = limit_jacobi_values(x)
    p1 = extremal_lengths(AnnulusParams(big_r, x * big_r)).p1.value
    return [
        ConvergenceRow(big_r, "sn", triple.sn, limits.sn,
                       abs(triple.sn - limits.sn)),
        ConvergenceRow(big_r, "cn", triple.cn, limits.cn,
                       abs(triple.cn - limits.cn)),
        ConvergenceRow(big_r, "dn", triple.dn, limits.dn,
                       abs(triple.dn - limits.dn)),
        ConvergenceRow(big_r, "p1", p1, x, abs(p1 - x)),
    ]


_CASE_ROWS = {
    "i_puncture_to_boundary": _case_i_rows,
    "ii_R_to_infinity": _case_ii_rows,
    "iii_R_to_one": _case_iii_rows,
    "iv_ratio_fixed": _case_iv_rows,
}


def _check_sample_path(scenario: LimitScenario, samples: tuple[float, ...]) -> None:
    if len(samples) < 2:
        raise DomainError("need at least two samples to observe convergence")
    for prev, cur in zip(samples, samples[1:]):
        if math.isinf(scenario.driver):
            ok = cur > prev
        else:
            ok = abs(cur - scenario.driver) < abs(prev - scenario.driver)
        if not ok:
            raise DomainError(
                f"samples must approach {scenario.driver} strictly, "
                f"got {prev} then {cur}"
            )


def run_scenario(scenario: LimitScenario, samples) -> ConvergenceTable:
    """Sweep the family along the samples and tabulate observable-by-
    observable deviations from the closed-form limits.

    Over the last half of the path every deviation must be nonincreasing
    (up to a floating-point floor); a rise raises ConsistencyError.
    """
    samples = tuple(float(s) for s in samples)
    _check_sample_path(scenario, samples)
    make_rows = _CASE_ROWS[scenario.case_tag]
    rows: list[ConvergenceRow] = []
    for s in samples:
        rows.extend(make_rows(scenario, s))
    by_name: dict[str, list[float]] = {}
    for row in rows:
        by_name.setdefault(row.observable, []).append(row.deviation)
    n = len(samples)
    # cover the last half of the path, and always at least the final three
    tail_start = max(0, min(n - 3, n // 2))
    for name, devs in by_name.items():
        tail = devs[tail_start:]
        for prev, cur in zip(tail, tail[1:]):
            if cur > max(prev, _DECAY_FLOOR):
                raise ConsistencyError(
                    f"deviation of {name} rose from {prev} to {cur} "
                    "near the limit"
                )
    return ConvergenceTable(scenario.case_tag, dict(scenario.frozen), tuple(rows))
