import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from punctann.errors import ConsistencyError, DomainError
from punctann.hyperbolic import (
    GroupParams,
    angles_from_lengths,
    build_group,
    collar_angles,
    collar_lemma_angle,
    equal_length_scale,
    geodesic_lengths,
    hyperbolic_generator,
    midpoint_group,
    pants_separation,
    parabolic_generator,
    trichotomy,
    width_to_distance,
)
from punctann.moebius import classify, fixed_points, translation_length


def random_params(rng, k_max=50.0) -> GroupParams:
    k = float(rng.uniform(1.01, k_max))
    r = 1.0 + float(rng.uniform(0.0, 1.0)) * (k - 1.0)
    if not 1.0 < r < k:
        r = 0.5 * (1.0 + k)
    return GroupParams(k, r)


group_params = st.builds(
    lambda k, frac: GroupParams(k, 1.0 + frac * (k - 1.0)),
    st.floats(min_value=1.001, max_value=50.0),
    st.floats(min_value=1e-6, max_value=1.0 - 1e-6),
)


class TestParams:
    def test_accepts_valid(self):
        GroupParams(2.0, 1.5)

    @pytest.mark.parametrize("k,r", [(1.5, 1.5), (1.5, 2.0), (2.0, 1.0), (2.0, 0.5), (math.inf, 2.0), (math.nan, 2.0)])
    def test_rejects_invalid(self, k, r):
        with pytest.raises(DomainError):
            GroupParams(k, r)


class TestGenerators:
    def test_dilation_action(self):
        f = hyperbolic_generator(3.0)
        assert f(2.0) == pytest.approx(18.0)  # z -> k^2 z

    def test_dilation_is_hyperbolic(self):
        f = hyperbolic_generator(2.5)
        assert classify(f).tag == "hyperbolic"
        assert fixed_points(f) == (0.0, math.inf)

    def test_parabolic_fixes_one(self):
        g = parabolic_generator(1.7)
        assert classify(g).tag == "parabolic"
        assert fixed_points(g)[0] == pytest.approx(1.0, abs=1e-12)

    def test_parabolic_pairs_tangent_circles(self):
        # g sends the outside of the disk about (r+1)/(2r) onto the inside
        # of the disk about (r+1)/2, both tangent at the fixed point 1
        r = 2.0
        g = parabolic_generator(r)
        inner_center, inner_rad = (r + 1.0) / (2.0 * r), (r - 1.0) / (2.0 * r)
        outer_center, outer_rad = (r + 1.0) / 2.0, (r - 1.0) / 2.0
        for phi in np.linspace(0.1, math.pi - 0.1, 9):
            z = inner_center + inner_rad * complex(math.cos(phi), math.sin(phi))
            w = g(z)
            assert abs(w - outer_center) == pytest.approx(outer_rad, rel=1e-12)

    def test_parabolic_near_one_stays_finite(self):
        g = parabolic_generator(1.0 + 1e-9)
        assert classify(g).tag == "parabolic"

    def test_build_group_returns_both(self):
        f, g = build_group(GroupParams(3.0, 2.0))
        assert classify(f).tag == "hyperbolic"
        assert classify(g).tag == "parabolic"

    @pytest.mark.parametrize("bad", [1.0, 0.5, math.inf])
    def test_generator_domains(self, bad):
        with pytest.raises(DomainError):
            hyperbolic_generator(bad)
        with pytest.raises(DomainError):
            parabolic_generator(bad)


class TestGeodesicLengths:
    def test_first_length_closed_form(self):
        l1, _ = geodesic_lengths(GroupParams(5.0, 2.0))
        assert l1 == pytest.approx(2.0 * math.log(5.0), rel=1e-15)

    def test_first_length_is_translation_length(self):
        params = GroupParams(3.2, 1.4)
        f, _ = build_group(params)
        l1, _ = geodesic_lengths(params)
        assert translation_length(f) == pytest.approx(l1, rel=1e-13)

    def test_second_length_is_composite_translation_length(self):
        params = GroupParams(4.0, 1.8)
        f, g = build_group(params)
        _, l2 = geodesic_lengths(params)
        assert translation_length(f.compose(g.inverse())) == pytest.approx(l2, rel=1e-10)

    @given(group_params)
    @settings(max_examples=150)
    def test_lengths_positive(self, params):
        l1, l2 = geodesic_lengths(params)
        assert l1 > 0.0 and l2 > 0.0

    def test_second_length_shrinks_as_r_meets_k(self):
        k = 3.0
        _, l2a = geodesic_lengths(GroupParams(k, k - 1e-3))
        _, l2b = geodesic_lengths(GroupParams(k, k - 1e-6))
        assert l2b < l2a


class TestCompositeClosedForm:
    @given(group_params)
    @settings(max_examples=200)
    def test_entry_formula(self, params):
        k, r = params.k, params.r
        f, g = build_group(params)
        comp = f.compose(g.inverse())
        s = r - 1.0
        expect = (
            2.0 * k / s,
            -k * (r + 1.0) / s,
            (r + 1.0) / (k * s),
            -2.0 * r / (k * s),
        )
        scale = max(abs(e) for e in expect)
        for got, want in zip((comp.a, comp.b, comp.c, comp.d), expect):
            assert abs(got - want) <= 1e-12 * max(1.0, scale)

    def test_half_trace_formula(self):
        k, r = 2.0, 1.5
        f, g = build_group(GroupParams(k, r))
        comp = f.compose(g.inverse())
        assert 0.5 * comp.trace == pytest.approx((k - r / k) / (r - 1.0), rel=1e-14)


class TestCollarAngles:
    def test_first_angle_closed_form(self):
        rep = collar_angles(GroupParams(2.0, 1.5))
        assert rep.theta1 == pytest.approx(math.acos(0.5 / 2.5), rel=1e-14)

    def test_cross_route_identity(self):
        # the tangency construction and the length-only formula must agree
        rng = np.random.default_rng(20260823)
        worst = 0.0
        for _ in range(1000):
            params = random_params(rng)
            rep = collar_angles(params)
            alt1, alt2 = angles_from_lengths(rep.l1, rep.l2)
            worst = max(worst, abs(alt1 - rep.theta1), abs(alt2 - rep.theta2))
        assert worst < 1e-10

    @given(group_params)
    @settings(max_examples=200)
    def test_angles_in_range(self, params):
        rep = collar_angles(params)
        assert 0.0 < rep.theta1 < 0.5 * math.pi
        assert 0.0 < rep.theta2 < 0.5 * math.pi

    @given(group_params)
    @settings(max_examples=200)
    def test_tangency_scalar_interval(self, params):
        rep = collar_angles(params)
        r = params.r
        assert 0.5 * (r + 1.0) ** 2 * (1 - 1e-9) < rep.delta < r * (r + 1.0) * (1 + 1e-9)
        assert rep.t > 1.0

    def test_tangency_scalar_matches_naive_form(self):
        k, r = 2.0, 1.5
        rep = collar_angles(GroupParams(k, r))
        naive = k * k + r - math.sqrt((k * k - 1.0) * (k * k - r * r))
        assert rep.delta == pytest.approx(naive, rel=1e-13)

    def test_large_scale_no_cancellation(self):
        # the naive form of delta loses every digit near k = 1e8; the
        # quotient form must still satisfy its defining quadratic
        k, r = 1e8, 2.0
        rep = collar_angles(GroupParams(k, r))
        d = rep.delta
        # delta solves d^2 - 2(k^2 + r)d + k^2 (r+1)^2 = 0
        residual = d * d - 2.0 * (k * k + r) * d + k * k * (r + 1.0) ** 2
        assert abs(residual) < 1e-6 * k * k

    def test_second_angle_from_matching_scale(self):
        rep = collar_angles(GroupParams(3.0, 2.0))
        assert rep.theta2 == pytest.approx(math.acos((rep.t - 1.0) / (rep.t + 1.0)), rel=1e-14)


class TestAnglesFromLengths:
    def test_symmetric_lengths(self):
        t1, t2 = angles_from_lengths(2.0, 2.0)
        assert t1 == pytest.approx(t2, rel=1e-15)
        expected = math.acos(math.sinh(1.0) / (2.0 * math.cosh(1.0)))
        assert t1 == pytest.approx(expected, rel=1e-14)

    def test_moderate_lengths_match_direct_formula(self):
        l1, l2 = 1.3, 2.9
        t1, t2 = angles_from_lengths(l1, l2)
        den = math.cosh(0.5 * l1) + math.cosh(0.5 * l2)
        assert t1 == pytest.approx(math.acos(math.sinh(0.5 * l1) / den), rel=1e-14)
        assert t2 == pytest.approx(math.acos(math.sinh(0.5 * l2) / den), rel=1e-14)

    def test_huge_lengths_do_not_overflow(self):
        # theta1 ~ sqrt(2) e^{-50} survives; theta2 rounds to pi/2 itself
        t1, t2 = angles_from_lengths(1600.0, 1400.0)
        assert t1 == pytest.approx(2.7276641934156177e-22, rel=1e-12)
        assert t1 < t2 <= 0.5 * math.pi

    def test_vanishing_second_length_limit(self):
        # as l2 -> 0 the first angle tends to arccos(tanh(l1/4))
        l1 = 2.0
        t1, _ = angles_from_lengths(l1, 1e-8)
        assert t1 == pytest.approx(math.acos(math.tanh(0.25 * l1)), abs=1e-8)

    @pytest.mark.parametrize("l1,l2", [(0.0, 1.0), (-1.0, 1.0), (1.0, math.inf)])
    def test_rejects_bad_lengths(self, l1, l2):
        with pytest.raises(DomainError):
            angles_from_lengths(l1, l2)

    @given(
        st.floats(min_value=1e-3, max_value=60.0),
        st.floats(min_value=1e-3, max_value=60.0),
    )
    @settings(max_examples=200)
    def test_longer_geodesic_narrower_collar(self, l1, l2):
        t1, t2 = angles_from_lengths(l1, l2)
        if l1 > l2:
            assert t1 <= t2
        else:
            assert t2 <= t1


class TestCollarLemma:
    def test_formula(self):
        l = 1.8
        assert collar_lemma_angle(l) == pytest.approx(
            math.atan(1.0 / math.sinh(0.5 * l)), rel=1e-14
        )

    def test_long_geodesic_no_overflow(self):
        # atan(x) ~ x deep in the tail; e^{-300} is still a normal float
        assert collar_lemma_angle(600.0) == pytest.approx(2.0 * math.exp(-300.0), rel=1e-12)

    @given(group_params)
    @settings(max_examples=200)
    def test_strictly_narrower_than_maximal(self, params):
        rep = collar_angles(params)
        assert collar_lemma_angle(rep.l1) < rep.theta1
        assert collar_lemma_angle(rep.l2) < rep.theta2

    def test_rejects_bad_length(self):
        with pytest.raises(DomainError):
            collar_lemma_angle(0.0)


class TestWidthToDistance:
    def test_round_shape(self):
        assert width_to_distance(0.25 * math.pi) == pytest.approx(
            0.5 * math.asinh(1.0), rel=1e-15
        )

    def test_monotone(self):
        assert width_to_distance(0.3) < width_to_distance(1.2)

    @pytest.mark.parametrize("theta", [0.0, 0.5 * math.pi, 2.0])
    def test_rejects_out_of_range(self, theta):
        with pytest.raises(DomainError):
            width_to_distance(theta)


class TestPantsSeparation:
    def test_moderate_lengths(self):
        l1, l2 = 2.0, 3.0
        d = pants_separation(l1, l2)
        expected = math.asinh(
            (math.cosh(0.5 * l1) + math.cosh(0.5 * l2))
            / (math.sinh(0.5 * l1) * math.sinh(0.5 * l2))
        )
        assert d == pytest.approx(expected, rel=1e-13)

    def test_long_cuffs_no_overflow(self):
        assert pants_separation(1200.0, 1200.0) > 0.0

    def test_maximal_collar_wider_than_guaranteed(self):
        for k, r in ((2.0, 1.5), (10.0, 3.0), (1.2, 1.1)):
            rep = collar_angles(GroupParams(k, r))
            assert width_to_distance(collar_lemma_angle(rep.l1)) < width_to_distance(rep.theta1)
            assert width_to_distance(collar_lemma_angle(rep.l2)) < width_to_distance(rep.theta2)

    def test_rejects_bad_lengths(self):
        with pytest.raises(DomainError):
            pants_separation(-1.0, 1.0)


class TestTrichotomy:
    def test_representative_parameters(self):
        assert trichotomy(GroupParams(10.0, 2.0)) == "theta1_gt"
        assert trichotomy(GroupParams(math.sqrt(5.0), 2.0)) == "equal"
        assert trichotomy(GroupParams(5.0, 4.0)) == "theta1_lt"

    def test_matches_measured_angles(self):
        rng = np.random.default_rng(99)
        for _ in range(300):
            params = random_params(rng, k_max=20.0)
            rep = collar_angles(params)
            verdict = trichotomy(params)
            if verdict == "theta1_gt":
                assert rep.theta1 > rep.theta2 - 1e-9
            elif verdict == "theta1_lt":
                assert rep.theta1 < rep.theta2 + 1e-9
            else:
                assert rep.theta1 == pytest.approx(rep.theta2, abs=1e-9)

    def test_large_r_always_theta1_lt(self):
        for k in (3.5, 10.0, 500.0):
            assert trichotomy(GroupParams(k, 3.0)) == "theta1_lt"
        assert trichotomy(GroupParams(100.0, 50.0)) == "theta1_lt"

    def test_below_pivot_theta1_lt(self):
        r = 2.0
        pivot = equal_length_scale(r)
        assert trichotomy(GroupParams(pivot * 0.999, r)) == "theta1_lt"
        assert trichotomy(GroupParams(pivot * 1.001, r)) == "theta1_gt"


class TestEqualLengthScale:
    def test_closed_form(self):
        assert equal_length_scale(2.0) == pytest.approx(math.sqrt(5.0), rel=1e-15)

    @given(st.floats(min_value=1.001, max_value=3.0 - 1e-6))
    @settings(max_examples=100)
    def test_pivot_exceeds_r(self, r):
        # the margin is (r-1)^3 / ((3-r)(pivot+r)), below float resolution
        # for r within ~1e-5 of 1
        assert equal_length_scale(r) > r

    def test_midpoint_group_balances_angles(self):
        rep = collar_angles(midpoint_group(1.8))
        assert rep.theta1 == pytest.approx(rep.theta2, abs=1e-12)

    @pytest.mark.parametrize("r", [1.0, 3.0, 5.0, 0.5])
    def test_rejects_out_of_band(self, r):
        with pytest.raises(DomainError):
            equal_length_scale(r)
