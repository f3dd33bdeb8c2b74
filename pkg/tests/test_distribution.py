"""Density, moments, and sampler of the generalized normal family."""

import dataclasses
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import stats as sp_stats

from gennorm_fisher import (
    GenNormParams,
    MomentSpec,
    exact_moment,
    expected_abs_moment,
    log_pdf,
    pdf,
    pdf_normalization,
    sample,
)

mp.mp.dps = 50


class TestParams:
    @pytest.mark.parametrize("theta,beta", [(0.0, 2.0), (-1.0, 2.0), (1.0, 0.0),
                                            (1.0, -3.0), (float("nan"), 2.0),
                                            (1.0, float("inf")), ("a", 2.0)])
    def test_validation(self, theta, beta):
        with pytest.raises(ValueError):
            GenNormParams(theta=theta, beta=beta)

    def test_fields_coerced_to_float(self):
        p = GenNormParams(theta=1, beta=2)
        assert isinstance(p.theta, float) and isinstance(p.beta, float)

    def test_frozen(self):
        p = GenNormParams(theta=1.0, beta=2.0)
        with pytest.raises(dataclasses.FrozenInstanceError):
            p.theta = 3.0

    @pytest.mark.parametrize("k", [-1, 1.5, "2"])
    def test_moment_spec_validation(self, k):
        with pytest.raises(ValueError):
            MomentSpec(k=k, params=GenNormParams(1.0, 2.0))


class TestLogPdf:
    def test_gaussian_shape_peak(self):
        # log(beta/2) vanishes at beta=2, leaving -log Gamma(1/2) = -ln sqrt(pi)
        p = GenNormParams(theta=1.0, beta=2.0)
        assert log_pdf(p, 0.0) == pytest.approx(-0.5723649429247001, rel=1e-12)

    def test_laplace_peak(self):
        p = GenNormParams(theta=1.0, beta=1.0)
        assert log_pdf(p, 0.0) == math.log(0.5)

    def test_symmetry_bit_for_bit(self):
        p = GenNormParams(theta=1.3, beta=2.7)
        for x in (0.1, 1.0, 2.5, 17.0, 1e-9):
            assert log_pdf(p, x) == log_pdf(p, -x)

    def test_extreme_argument_gives_minus_inf(self):
        p = GenNormParams(theta=1.0, beta=128.0)
        assert log_pdf(p, 1e300) == -math.inf

    @pytest.mark.parametrize("x", [float("nan"), float("inf"), float("-inf"), "y"])
    def test_non_finite_x_rejected(self, x):
        with pytest.raises(ValueError):
            log_pdf(GenNormParams(1.0, 2.0), x)

    @given(
        st.floats(min_value=0.1, max_value=10.0),
        st.floats(min_value=0.5, max_value=16.0),
        st.floats(min_value=-50.0, max_value=50.0, allow_nan=False),
    )
    def test_symmetry_and_range_property(self, theta, beta, x):
        p = GenNormParams(theta=theta, beta=beta)
        value = log_pdf(p, x)
        assert log_pdf(p, -x) == value
        assert value <= log_pdf(p, 0.0)  # unimodal with mode at 0


class TestPdf:
    def test_laplace_peak(self):
        assert pdf(GenNormParams(1.0, 1.0), 0.0) == 0.5

    def test_ratio_kills_normalizer(self):
        p = GenNormParams(theta=1.0, beta=2.0)
        assert pdf(p, 1.0) / pdf(p, 0.0) == pytest.approx(math.exp(-1.0), rel=1e-12)

    def test_strictly_positive_on_moderate_grid(self):
        p = GenNormParams(theta=0.7, beta=3.3)
        for x in np.linspace(-4, 4, 41):  # (4/0.7)^3.3 ~ 315, still representable
            assert pdf(p, float(x)) > 0.0
        # far tail underflows to exactly zero, never negative
        assert pdf(p, 8.0) == 0.0

    @pytest.mark.parametrize("theta", [0.5, 1.0, 2.0])
    @pytest.mark.parametrize("beta", [1.0, 2.0, 4.0, 8.0])
    def test_normalization(self, theta, beta):
        res = pdf_normalization(GenNormParams(theta, beta))
        assert res.value == pytest.approx(1.0, abs=1e-10)

    @pytest.mark.parametrize("theta,beta", [(1.0, 2.0), (0.5, 1.0), (2.0, 4.5), (1.0, 8.0)])
    def test_against_scipy_gennorm(self, theta, beta):
        # independent implementation of the same family
        p = GenNormParams(theta, beta)
        dist = sp_stats.gennorm(beta, scale=theta)
        for x in (-3.0, -0.4, 0.0, 0.9, 2.2):
            assert pdf(p, x) == pytest.approx(float(dist.pdf(x)), rel=1e-12)


class TestExactMoment:
    def test_odd_moments_identically_zero(self):
        p = GenNormParams(theta=3.0, beta=1.7)
        for k in (1, 3, 5, 7, 11):
            assert exact_moment(MomentSpec(k=k, params=p)) == 0.0

    def test_zeroth_moment_is_one(self):
        assert exact_moment(MomentSpec(k=0, params=GenNormParams(2.5, 0.8))) == 1.0

    def test_gaussian_variance(self):
        spec = MomentSpec(k=2, params=GenNormParams(1.0, 2.0))
        assert exact_moment(spec) == pytest.approx(0.5, rel=1e-13)

    @pytest.mark.parametrize("k", [2, 4, 6, 8])
    @pytest.mark.parametrize("beta", [1.0, 2.0, 3.5, 7.0])
    @pytest.mark.parametrize("theta", [0.5, 2.0])
    def test_against_gamma_ratio_oracle(self, k, beta, theta):
        spec = MomentSpec(k=k, params=GenNormParams(theta, beta))
        expected = mp.mpf(theta) ** k * mp.gamma(mp.mpf(k + 1) / beta) / mp.gamma(
            mp.mpf(1) / beta
        )
        assert exact_moment(spec) == pytest.approx(float(expected), rel=1e-12)

    def test_overflow_for_huge_orders(self):
        spec = MomentSpec(k=300, params=GenNormParams(2.0, 0.25))
        with pytest.raises(OverflowError):
            exact_moment(spec)


class TestExpectedAbsMoment:
    def test_known_values(self):
        assert expected_abs_moment(GenNormParams(1.0, 2.0)) == 0.5
        assert expected_abs_moment(GenNormParams(2.0, 4.0)) == 4.0

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    @pytest.mark.parametrize("theta", [0.5, 1.0, 2.0])
    def test_agrees_with_gamma_ratio_route(self, n, theta):
        # theta^beta/beta against exact_moment(k=beta): two derivations of E[|X|^beta]
        beta = 2 * n
        p = GenNormParams(theta, float(beta))
        short = expected_abs_moment(p)
        ratio = exact_moment(MomentSpec(k=beta, params=p))
        assert ratio * beta / theta**beta == pytest.approx(1.0, rel=1e-12)
        assert short == pytest.approx(ratio, rel=1e-12)

    @pytest.mark.parametrize("beta", [1.0, 3.0, 2.5, 0.5])
    def test_rejects_non_even_shapes(self, beta):
        with pytest.raises(ValueError):
            expected_abs_moment(GenNormParams(1.0, beta))


class TestSample:
    def test_deterministic(self):
        p = GenNormParams(1.0, 2.0)
        a = sample(p, 5000, seed=42)
        b = sample(p, 5000, seed=42)
        assert np.array_equal(a, b)
        assert not np.array_equal(a, sample(p, 5000, seed=43))

    def test_scale_equivariance_bitwise(self):
        base = sample(GenNormParams(1.0, 4.0), 4096, seed=11)
        scaled = sample(GenNormParams(2.0, 4.0), 4096, seed=11)
        assert np.array_equal(scaled, 2.0 * base)

    def test_multi_chunk_paths(self):
        # crosses the 2**18 chunk boundary
        n = (1 << 18) + 3
        p = GenNormParams(1.0, 2.0)
        a = sample(p, n, seed=5)
        assert a.shape == (n,)
        assert np.array_equal(a, sample(p, n, seed=5))
        scaled = sample(GenNormParams(3.0, 2.0), n, seed=5)
        assert np.array_equal(scaled, 3.0 * a)

    @pytest.mark.parametrize("count", [0, -1, 2.5])
    def test_count_validation(self, count):
        with pytest.raises(ValueError):
            sample(GenNormParams(1.0, 2.0), count, seed=1)

    def test_seed_validation(self):
        with pytest.raises(ValueError):
            sample(GenNormParams(1.0, 2.0), 10, seed=-1)

    def test_mean_vanishes(self):
        draws = sample(GenNormParams(1.0, 2.0), 10**6, seed=42)
        stderr = draws.std(ddof=1) / math.sqrt(draws.size)
        assert abs(draws.mean()) <= 4.0 * stderr

    def test_second_moment_matches_exact(self):
        p = GenNormParams(1.0, 2.0)
        sq = sample(p, 10**6, seed=101) ** 2
        target = exact_moment(MomentSpec(k=2, params=p))
        stderr = sq.std(ddof=1) / math.sqrt(sq.size)
        assert abs(sq.mean() - target) <= 4.0 * stderr

    def test_fourth_abs_moment_matches_short_route(self):
        p = GenNormParams(1.0, 4.0)
        quads = np.abs(sample(p, 10**6, seed=202)) ** 4
        target = expected_abs_moment(p)  # theta^beta/beta = 0.25
        stderr = quads.std(ddof=1) / math.sqrt(quads.size)
        assert abs(quads.mean() - target) <= 4.0 * stderr

    @pytest.mark.parametrize("beta", [0.7, 1.0, 2.0, 8.0, 64.0])
    def test_distribution_matches_scipy_gennorm(self, beta):
        # KS test against an independent implementation; covers both the
        # direct gamma path (beta <= 1) and the boosted one (beta > 1)
        draws = sample(GenNormParams(1.5, beta), 10**5, seed=77)
        ks = sp_stats.kstest(draws, sp_stats.gennorm(beta, scale=1.5).cdf)
        assert ks.pvalue > 1e-3

    def test_large_beta_stays_in_range(self):
        draws = sample(GenNormParams(1.0, 128.0), 10**5, seed=9)
        assert np.all(np.isfinite(draws))
        assert np.all(draws != 0.0)  # the boost construction never collapses to 0
        assert np.abs(draws).max() < 1.2  # essentially uniform on [-1, 1]
