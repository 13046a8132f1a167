"""Seeded randomized invariant checks behind the `check` subcommand.

Every check draws its samples from a generator derived from the run seed
and the check's fixed position in the registry, so a given --seed always
replays the identical sample set regardless of filtering.
"""

from __future__ import annotations

import math

import numpy as np

from . import degeneration, render
from .elliptic import ModulusReal, elliptic_pair, jacobi, mu, mu_inverse
from .extremal import (
    AnnulusParams,
    extremal_lengths,
    omega_map,
    sigma_map,
    symmetric_p,
)
from .hyperbolic import (
    GroupParams,
    angles_from_lengths,
    build_group,
    collar_angles,
    collar_lemma_angle,
    equal_length_scale,
    geodesic_lengths,
    hyperbolic_generator,
    midpoint_group,
    parabolic_generator,
)
from .moebius import MoebiusMap, classify, conjugate, fixed_points, translation_length


def _assert(cond: bool, msg: str) -> None:
    if not cond:
        raise AssertionError(msg)


def _random_modulus(rng, low: float = 1e-6, high: float = 1.0 - 1e-6) -> ModulusReal:
    return ModulusReal.from_value(float(rng.uniform(low, high)))


def _random_group(rng, k_max: float = 50.0) -> GroupParams:
    k = float(rng.uniform(1.0 + 1e-3, k_max))
    r = float(rng.uniform(1.0 + 1e-6 * k, k - 1e-9 * k))
    if not 1.0 < r < k:
        r = 0.5 * (1.0 + k)
    return GroupParams(k, r)


def _random_annulus(rng) -> AnnulusParams:
    big_r = float(np.exp(rng.uniform(np.log(1.05), np.log(20.0))))
    t = float(rng.uniform(0.02, 0.98))
    a = float((1.0 / big_r) * (big_r * big_r) ** t)
    return AnnulusParams(big_r, a)


def check_mu_round_trip(rng) -> None:
    for _ in range(200):
        q = _random_modulus(rng)
        back = mu_inverse(mu(q))
        _assert(abs(back.value - q.value) < 1e-11, f"round trip drift at q={q.value}")


def check_mu_landen_half(rng) -> None:
    for _ in range(200):
        q = _random_modulus(rng)
        up = ModulusReal(
            2.0 * math.sqrt(q.value) / (1.0 + q.value),
            (1.0 - q.value) / (1.0 + q.value),
        )
        _assert(
            abs(mu(up) - 0.5 * mu(q)) < 1e-11,
            f"half-mu identity failed at q={q.value}",
        )


def check_mu_reciprocal(rng) -> None:
    target = math.pi * math.pi / 4.0
    for _ in range(200):
        q = _random_modulus(rng, 1e-4, 1.0 - 1e-4)
        prod = mu(q) * mu(q.complementary())
        _assert(abs(prod - target) < 1e-10, f"mu(q)mu(q') != pi^2/4 at q={q.value}")


def check_jacobi_pythagorean(rng) -> None:
    for _ in range(200):
        m = _random_modulus(rng)
        u = float(rng.uniform(-20.0, 20.0))
        t = jacobi(u, m)
        r1 = t.sn * t.sn + t.cn * t.cn - 1.0
        r2 = t.dn * t.dn + (m.value * t.sn) ** 2 - 1.0
        _assert(abs(r1) < 1e-12 and abs(r2) < 1e-12, f"identity drift at u={u}, m={m.value}")


def check_jacobi_quarter_period(rng) -> None:
    for _ in range(50):
        m = _random_modulus(rng)
        k = elliptic_pair(m).big_k
        t = jacobi(k, m)
        _assert(
            abs(t.sn - 1.0) < 1e-12
            and abs(t.cn) < 1e-10
            and abs(t.dn - m.complement) < 1e-10,
            f"values at the quarter period drifted for m={m.value}",
        )


def check_jacobi_quarter_shift(rng) -> None:
    for _ in range(100):
        q = _random_modulus(rng, 1e-3, 1.0 - 1e-3)
        qc = q.complementary()
        half = 0.5 * elliptic_pair(q).big_k_prime
        v = float(rng.uniform(-2.0, 2.0))
        lhs = jacobi(half + v, qc).dn
        t = jacobi(v, qc)
        omq = 1.0 - q.value
        rhs = math.sqrt(q.value) * (t.dn - omq * t.sn * t.cn) / (1.0 - omq * t.sn * t.sn)
        _assert(abs(lhs - rhs) < 1e-12, f"quarter shift drift at q={q.value}, v={v}")


def check_moebius_inverse_identity(rng) -> None:
    for _ in range(500):
        a, b, c, d = (float(x) for x in rng.normal(0.0, 3.0, 4))
        if abs(a * d - b * c) < 1e-6:
            continue
        if a * d - b * c < 0.0:
            a, b = b, a
            c, d = d, c
        p = MoebiusMap(a, b, c, d)
        q = p.compose(p.inverse())
        dev = max(abs(q.a - 1.0), abs(q.b), abs(q.c), abs(q.d - 1.0))
        _assert(dev < 1e-12, f"p p^-1 drifted by {dev}")


def check_moebius_fixed_points(rng) -> None:
    for _ in range(200):
        params = _random_group(rng, 20.0)
        f, g = build_group(params)
        fg = f.compose(g.inverse())
        pts = fixed_points(fg)
        for x in pts:
            if math.isinf(x):
                continue
            _assert(abs(fg(x) - x) < 1e-8 * max(1.0, abs(x)), f"fixed point drift at {x}")
        _assert(pts == tuple(sorted(pts)), "fixed points not ascending")
        _assert(abs(fixed_points(g)[0] - 1.0) < 1e-12, "parabolic fixed point is not 1")


def check_moebius_classification(rng) -> None:
    for _ in range(200):
        params = _random_group(rng, 20.0)
        f, g = build_group(params)
        _assert(classify(f).tag == "hyperbolic", "dilation not hyperbolic")
        _assert(classify(g).tag == "parabolic", "g not parabolic")
        _assert(classify(f.compose(g.inverse())).tag == "hyperbolic", "fg^-1 not hyperbolic")
        l1, l2 = geodesic_lengths(params)
        _assert(abs(translation_length(f) - l1) < 1e-10, "l1 mismatch")
        _assert(
            abs(translation_length(f.compose(g.inverse())) - l2) < 1e-9,
            "l2 mismatch",
        )


def check_angle_routes_agree(rng) -> None:
    for _ in range(300):
        params = _random_group(rng)
        rep = collar_angles(params)
        t1, t2 = angles_from_lengths(rep.l1, rep.l2)
        _assert(
            abs(t1 - rep.theta1) < 1e-10 and abs(t2 - rep.theta2) < 1e-10,
            f"angle routes disagree at k={params.k}, r={params.r}",
        )


def check_fg_inverse_closed_form(rng) -> None:
    for _ in range(300):
        params = _random_group(rng)
        k, r = params.k, params.r
        f, g = build_group(params)
        fg = f.compose(g.inverse())
        s = r - 1.0
        target = MoebiusMap(2.0 * k / s, -k * (r + 1.0) / s, (r + 1.0) / (k * s), -2.0 * r / (k * s))
        dev = max(
            abs(fg.a - target.a),
            abs(fg.b - target.b),
            abs(fg.c - target.c),
            abs(fg.d - target.d),
        )
        _assert(dev < 1e-12 * max(1.0, abs(target.b)), f"closed form drift {dev}")


def check_collar_strengthening(rng) -> None:
    for _ in range(300):
        params = _random_group(rng)
        rep = collar_angles(params)
        _assert(
            collar_lemma_angle(rep.l1) < rep.theta1
            and collar_lemma_angle(rep.l2) < rep.theta2,
            f"collar-lemma angle not strictly smaller at k={params.k}, r={params.r}",
        )


def check_trichotomy_pivot(rng) -> None:
    for _ in range(100):
        r = float(rng.uniform(1.01, 2.99))
        pivot = equal_length_scale(r)
        rep = collar_angles(midpoint_group(r))
        _assert(abs(rep.theta1 - rep.theta2) < 1e-9, f"pivot angles differ at r={r}")
        above = collar_angles(GroupParams(pivot * 1.01, r))
        _assert(above.theta1 > above.theta2, f"order wrong above pivot at r={r}")
        if pivot * 0.99 > r:
            below = collar_angles(GroupParams(pivot * 0.99, r))
            _assert(below.theta1 < below.theta2, f"order wrong below pivot at r={r}")


def check_tangency_scalars(rng) -> None:
    for _ in range(300):
        params = _random_group(rng)
        k, r = params.k, params.r
        rep = collar_angles(params)
        _assert(
            0.5 * (r + 1.0) ** 2 < rep.delta < r * (r + 1.0),
            f"delta escaped its interval at k={k}, r={r}",
        )
        f, g = build_group(params)
        x1, x2 = fixed_points(f.compose(g.inverse()))
        _assert(
            abs(x1 - rep.delta / (r + 1.0)) < 1e-8 * max(1.0, x1),
            "first fixed point mismatch",
        )
        _assert(
            abs(x2 - k * k * (r + 1.0) / rep.delta) < 1e-8 * max(1.0, x2),
            "second fixed point mismatch",
        )


def check_u_sum_half_period(rng) -> None:
    for _ in range(100):
        ann = _random_annulus(rng)
        rep = extremal_lengths(ann)
        _assert(
            abs(rep.u1 + rep.u2 - 0.5 * rep.big_k_prime) < 1e-11 * max(1.0, rep.big_k_prime),
            f"u1+u2 drift at R={ann.R}, a={ann.a}",
        )


def check_inner_radius(rng) -> None:
    for _ in range(100):
        ann = _random_annulus(rng)
        rep = extremal_lengths(ann)
        _assert(
            abs(rep.b - 1.0 / ann.R**2) < 1e-12 / ann.R**2 * 10.0,
            f"inner radius drift at R={ann.R}",
        )


def check_swap_symmetry(rng) -> None:
    for _ in range(60):
        ann = _random_annulus(rng)
        rep = extremal_lengths(ann)
        mirrored = extremal_lengths(AnnulusParams(ann.R, 1.0 / ann.a))
        _assert(
            abs(rep.lambda1 - mirrored.lambda2) < 1e-11 * rep.lambda1
            and abs(rep.lambda2 - mirrored.lambda1) < 1e-11 * rep.lambda2,
            f"swap symmetry drift at R={ann.R}, a={ann.a}",
        )


def check_slit_bracket(rng) -> None:
    for _ in range(100):
        ann = _random_annulus(rng)
        rep = extremal_lengths(ann)
        sq = math.sqrt(rep.q.value)
        _assert(
            sq < rep.p1.value < 1.0 and sq < rep.p2.value < 1.0,
            f"slit moduli escaped (sqrt q, 1) at R={ann.R}, a={ann.a}",
        )


def check_sigma_two_path(rng) -> None:
    for _ in range(30):
        big_r = float(np.exp(rng.uniform(np.log(1.3), np.log(8.0))))
        t = float(rng.uniform(0.1, 0.9))
        ann = AnnulusParams(big_r, (1.0 / big_r) * (big_r * big_r) ** t)
        rep = extremal_lengths(ann)
        via_1 = sigma_map(omega_map(ann.a / ann.R, ann.R), rep.q)
        via_2 = sigma_map(omega_map(1.0 / (ann.R * ann.a), ann.R), rep.q)
        _assert(
            abs(via_1 - rep.p1.value) < 1e-10 and abs(via_2 - rep.p2.value) < 1e-10,
            f"two-path puncture image drift at R={ann.R}, a={ann.a}",
        )


def check_symmetric_closed_form(rng) -> None:
    for _ in range(30):
        big_r = float(np.exp(rng.uniform(np.log(1.1), np.log(30.0))))
        rep = extremal_lengths(AnnulusParams(big_r, 1.0))
        closed = symmetric_p(rep.q)
        _assert(
            abs(rep.p1.value - closed) < 1e-10,
            f"centered slit modulus drift at R={big_r}",
        )
        _assert(rep.p1.value == rep.p2.value, "centered puncture must be symmetric")


def check_degeneration_tables(rng) -> None:
    for tag in degeneration.CASE_TAGS:
        scenario, samples = degeneration.default_scenario(tag)
        table = degeneration.run_scenario(scenario, samples)
        _assert(len(table.rows) > 0, f"empty table for {tag}")
    scenario, _ = degeneration.default_scenario("iv_ratio_fixed")
    rows = degeneration.run_scenario(scenario, (1e2, 1e3, 1e6)).rows
    p1_rows = [row for row in rows if row.observable == "p1"]
    _assert(p1_rows[1].deviation < 1e-2, "p1 not within 1e-2 at R=1e3")
    _assert(p1_rows[2].deviation < p1_rows[1].deviation, "p1 deviation must tighten")


def check_congruence_limits(rng) -> None:
    _, g0 = degeneration.congruence_targets()
    for _ in range(50):
        k = 1.0 + float(rng.uniform(1e-3, 1.0))
        h = degeneration.conjugator_h(k)
        cf = conjugate(hyperbolic_generator(k), h)
        target = MoebiusMap(
            (k * k + 1.0) / (2.0 * k),
            (k + 1.0) ** 2 / (2.0 * k),
            (k - 1.0) ** 2 / (2.0 * k),
            (k * k + 1.0) / (2.0 * k),
        )
        dev = max(abs(cf.a - target.a), abs(cf.b - target.b), abs(cf.c - target.c), abs(cf.d - target.d))
        _assert(dev < 1e-11, f"conjugated dilation drift {dev} at k={k}")
        # hgh^-1 equals g0 exactly on the k = r path; the computed product
        # carries roundoff amplified by 1/(k-1)^2
        cg = conjugate(parabolic_generator(k), h)
        dev_g = max(abs(cg.a - g0.a), abs(cg.b - g0.b), abs(cg.c - g0.c), abs(cg.d - g0.d))
        _assert(dev_g < 1e-7, f"conjugated parabolic drift {dev_g} at k={k}")


def check_h1_translation(rng) -> None:
    for _ in range(50):
        r = 1.0 + float(rng.uniform(0.05, 4.0))
        cg = conjugate(parabolic_generator(r), degeneration.conjugator_h1(r))
        shift = (r + 1.0) ** 2 / r
        dev = max(abs(cg.a - 1.0), abs(cg.b + shift), abs(cg.c), abs(cg.d - 1.0))
        _assert(dev < 1e-10 * max(1.0, shift), f"h1 g h1^-1 drift {dev} at r={r}")


def check_domain_disjointness(rng) -> None:
    params = GroupParams(float(rng.uniform(1.8, 3.0)), float(rng.uniform(1.2, 1.7)))
    dom = render.build_domain(params)
    f, g = build_group(params)
    pts = []
    while len(pts) < 100:
        x = float(rng.uniform(-params.k, params.k))
        y = float(rng.uniform(0.0, params.k))
        z = complex(x, y)
        if render.domain_contains(dom, z, margin=1e-6):
            pts.append(z)
    for word in render.orbit_words(2):
        m = render.word_to_map(word, f, g)
        for z in pts:
            w = m(z)
            _assert(
                not (isinstance(w, complex) and render.domain_contains(dom, w, margin=1e-9)),
                f"word {render.word_name(word)} returned a point to the domain",
            )


def check_image_circle(rng) -> None:
    for _ in range(50):
        r = 1.0 + float(rng.uniform(0.05, 4.0))
        k = r + float(rng.uniform(0.05, 2.0))
        dom = render.build_domain(GroupParams(k, r))
        _assert(
            abs(dom.g_s1.center - 0.5 * (r + 1.0)) < 1e-9 * r
            and abs(dom.g_s1.radius - 0.5 * (r - 1.0)) < 1e-9 * r,
            f"image circle drifted at r={r}",
        )


REGISTRY: tuple[tuple[str, object], ...] = (
    ("elliptic.mu_round_trip", check_mu_round_trip),
    ("elliptic.mu_landen_half", check_mu_landen_half),
    ("elliptic.mu_reciprocal", check_mu_reciprocal),
    ("elliptic.jacobi_pythagorean", check_jacobi_pythagorean),
    ("elliptic.jacobi_quarter_period", check_jacobi_quarter_period),
    ("elliptic.jacobi_quarter_shift", check_jacobi_quarter_shift),
    ("moebius.inverse_identity", check_moebius_inverse_identity),
    ("moebius.fixed_points", check_moebius_fixed_points),
    ("moebius.classification", check_moebius_classification),
    ("hyperbolic.angle_routes_agree", check_angle_routes_agree),
    ("hyperbolic.fg_inverse_closed_form", check_fg_inverse_closed_form),
    ("hyperbolic.collar_strengthening", check_collar_strengthening),
    ("hyperbolic.trichotomy_pivot", check_trichotomy_pivot),
    ("hyperbolic.tangency_scalars", check_tangency_scalars),
    ("extremal.u_sum_half_period", check_u_sum_half_period),
    ("extremal.inner_radius", check_inner_radius),
    ("extremal.swap_symmetry", check_swap_symmetry),
    ("extremal.slit_bracket", check_slit_bracket),
    ("extremal.sigma_two_path", check_sigma_two_path),
    ("extremal.symmetric_closed_form", check_symmetric_closed_form),
    ("degeneration.case_tables", check_degeneration_tables),
    ("degeneration.congruence_limits", check_congruence_limits),
    ("degeneration.h1_translation", check_h1_translation),
    ("render.domain_disjointness", check_domain_disjointness),
    ("render.image_circle", check_image_circle),
)


def run_checks(seed: int, name_filter: "str | None" = None):
    """Run the registry, optionally restricted to one module prefix.

    Returns (passed, failed, lines) where lines are preformatted
    "PASS name" / "FAIL name: reason" strings in registry order.
    """
    passed = failed = 0
    lines: list[str] = []
    for index, (name, fn) in enumerate(REGISTRY):
        if name_filter is not None and not name.startswith(name_filter + "."):
            continue
        rng = np.random.default_rng([int(seed), index])
        try:
            fn(rng)
        except Exception as exc:  # report and continue; the run decides the exit code
            failed += 1
            lines.append(f"FAIL {name}: {exc}")
        else:
            passed += 1
            lines.append(f"PASS {name}")
    return passed, failed, lines
