import math

import numpy as np
import pytest

from chronopair.errors import PhysicsDomainError
from chronopair.gaussmodel import (GAMMA, AnalyticCwf, GaussParams,
                                   analytic_cwf, analytic_summary,
                                   chirp_param, duration_bandwidth_check,
                                   marginal_spectral_width,
                                   marginal_temporal_width, spectral_width,
                                   temporal_width, x_param)
from chronopair.presets import REFERENCE_CHIRP, get_preset, preset_jsa
from chronopair.singlephoton import (cwf_moment_fit, purity_schmidt,
                                     reduce_density, to_diagonal_view,
                                     wigner_from_density)
from chronopair.twophoton import gaussian_grid, gaussian_jsa


def random_params(rng):
    sigma = 10 ** rng.uniform(12.3, 14.3)
    tau_s = rng.uniform(-2e-12, 2e-12)
    tau_i = rng.uniform(-2e-12, 2e-12)
    beta = rng.uniform(-2e-25, 2e-25)
    return GaussParams(sigma=sigma, beta=beta, tau_s=tau_s, tau_i=tau_i)


class TestXParam:
    def test_zero_gvm_limit(self):
        p = GaussParams(sigma=5e13, beta=0.0, tau_s=0.0, tau_i=0.0)
        for pair in (("s", "s"), ("i", "i"), ("s", "i")):
            assert x_param(p, *pair) == pytest.approx(1.0 / (5e13) ** 2, rel=1e-12)

    def test_symmetric_in_labels(self):
        p = GaussParams(sigma=4e13, beta=0.0, tau_s=3e-13, tau_i=-5e-13)
        assert x_param(p, "s", "i") == x_param(p, "i", "s")

    def test_equal_taus_collapse(self):
        p = GaussParams(sigma=4e13, beta=0.0, tau_s=7e-13, tau_i=7e-13)
        assert x_param(p, "s", "i") == pytest.approx(x_param(p, "s", "s"), rel=1e-12)
        assert x_param(p, "s", "i") == pytest.approx(x_param(p, "i", "i"), rel=1e-12)

    def test_inequality_over_random_draws(self, rng):
        # X_si^2 <= X_ss * X_ii, zero violations over 1e4 draws
        violations = 0
        for _ in range(10_000):
            p = random_params(rng)
            x_ss = x_param(p, "s", "s")
            x_ii = x_param(p, "i", "i")
            x_si = x_param(p, "s", "i")
            if x_si**2 > x_ss * x_ii * (1 + 1e-12):
                violations += 1
        assert violations == 0

    def test_label_validation(self):
        p = GaussParams(sigma=4e13, beta=0.0, tau_s=0.0, tau_i=0.0)
        with pytest.raises(ValueError):
            x_param(p, "s", "p")


class TestWidths:
    def test_spectral_width_beta_zero_reduction(self):
        # at beta = 0: dw^2 = X_ii / (2*(X_ss*X_ii - X_si^2))
        p = GaussParams(sigma=5e13, beta=0.0, tau_s=4e-13, tau_i=-2e-13)
        x_ss = x_param(p, "s", "s")
        x_ii = x_param(p, "i", "i")
        x_si = x_param(p, "s", "i")
        expected = math.sqrt(x_ii / (2.0 * (x_ss * x_ii - x_si**2)))
        assert spectral_width(p) == pytest.approx(expected, rel=1e-10)

    def test_temporal_width_beta_zero_reduction(self):
        # at beta = 0: dt^2 = 2*X_ss
        p = GaussParams(sigma=5e13, beta=0.0, tau_s=4e-13, tau_i=-2e-13)
        assert temporal_width(p) == pytest.approx(
            math.sqrt(2.0 * x_param(p, "s", "s")), rel=1e-10)

    def test_temporal_width_increases_with_chirp(self):
        p0 = GaussParams(sigma=5e13, beta=0.0, tau_s=4e-13, tau_i=-2e-13)
        widths = [temporal_width(GaussParams(sigma=5e13, beta=b,
                                             tau_s=4e-13, tau_i=-2e-13))
                  for b in (0.0, 2e-26, 4e-26, 8e-26)]
        assert widths[0] == temporal_width(p0)
        assert all(b > a for a, b in zip(widths, widths[1:]))

    def test_anticorrelated_limit_overflows(self):
        p = GaussParams(sigma=5e13, beta=1e-26, tau_s=7e-13, tau_i=7e-13)
        assert spectral_width(p) == math.inf
        assert math.isfinite(temporal_width(p))

    def test_dimensional_homogeneity(self):
        # expressing all inputs in rad/fs and fs leaves the chirp
        # unchanged and scales the widths by the unit factors
        p_si = GaussParams(sigma=5.5e13, beta=6e-26, tau_s=4.4e-13, tau_i=-1e-13)
        scale_w = 1e-15   # rad/s -> rad/fs
        p_fs = GaussParams(sigma=p_si.sigma * scale_w, beta=p_si.beta / scale_w**2,
                           tau_s=p_si.tau_s / scale_w, tau_i=p_si.tau_i / scale_w)
        assert chirp_param(p_fs) == pytest.approx(chirp_param(p_si), rel=1e-9)
        assert spectral_width(p_fs) == pytest.approx(
            spectral_width(p_si) * scale_w, rel=1e-9)
        assert temporal_width(p_fs) == pytest.approx(
            temporal_width(p_si) / scale_w, rel=1e-9)


class TestChirpParam:
    def test_zero_without_pump_chirp(self, rng):
        for _ in range(100):
            p = random_params(rng)
            p0 = GaussParams(sigma=p.sigma, beta=0.0, tau_s=p.tau_s, tau_i=p.tau_i)
            assert chirp_param(p0) == 0.0

    def test_zero_when_idler_matched(self):
        p = GaussParams(sigma=5e13, beta=REFERENCE_CHIRP, tau_s=7e-13, tau_i=0.0)
        assert chirp_param(p) == pytest.approx(0.0, abs=1e-15)

    def test_bounded_over_random_draws(self, rng):
        violations = 0
        for _ in range(10_000):
            p = random_params(rng)
            if abs(chirp_param(p)) > 1.0 + 1e-12:
                violations += 1
        assert violations == 0

    def test_odd_in_beta(self, rng):
        for _ in range(200):
            p = random_params(rng)
            flipped = GaussParams(sigma=p.sigma, beta=-p.beta,
                                  tau_s=p.tau_s, tau_i=p.tau_i)
            assert chirp_param(flipped) == pytest.approx(-chirp_param(p), rel=1e-12)

    def test_exchange_asymmetric(self, rng):
        # numerator ~ beta*tau_i*(tau_s - tau_i): generic draws break the
        # signal/idler exchange symmetry
        asym = 0
        for _ in range(100):
            p = random_params(rng)
            swapped = GaussParams(sigma=p.sigma, beta=p.beta,
                                  tau_s=p.tau_i, tau_i=p.tau_s)
            if abs(chirp_param(p) - chirp_param(swapped)) > 1e-6:
                asym += 1
        assert asym > 90

    def test_anticorrelated_limit_is_zero(self):
        p = GaussParams(sigma=5e13, beta=REFERENCE_CHIRP, tau_s=7e-13,
                        tau_i=7e-13 * (1 + 1e-9))
        assert p.is_anticorrelated_limit()
        assert chirp_param(p) == 0.0

    def test_limit_consistency_along_a_sequence(self):
        # Along tau_s -> tau_i the closed form's directional limit is a
        # finite chirp (0/0 resolved along the path), NOT the value of
        # the exactly anti-correlated state; the spectral width runs
        # away.  Once inside the detection tolerance the model switches
        # to the exact-state limit values: chirp 0, width overflow.
        tau_i = 7e-13
        chirps, widths = [], []
        for eps in (3e-1, 1e-1, 3e-2, 1e-3, 1e-5, 1e-7, 0.0):
            p = GaussParams(sigma=5e13, beta=REFERENCE_CHIRP,
                            tau_s=tau_i * (1 + eps), tau_i=tau_i)
            chirps.append(abs(chirp_param(p)))
            widths.append(spectral_width(p))
        assert all(c <= 1.0 + 1e-12 for c in chirps)
        assert all(b > a or b == math.inf for a, b in zip(widths, widths[1:]))
        # the last two points sit inside the gate
        assert chirps[-1] == 0.0 and chirps[-2] == 0.0
        assert widths[-1] == math.inf and widths[-2] == math.inf


class TestAnalyticCwf:
    def test_normalization(self):
        p = GaussParams(sigma=5e13, beta=4e-26, tau_s=4e-13, tau_i=-2e-13)
        dw = marginal_spectral_width(p)
        dt = marginal_temporal_width(p)
        nu = np.linspace(-8 * dw, 8 * dw, 801)
        t = np.linspace(-8 * dt, 8 * dt, 801)
        w = analytic_cwf(p, nu[:, None], t[None, :])
        integral = w.sum() * (nu[1] - nu[0]) * (t[1] - t[0])
        assert integral == pytest.approx(1.0, abs=1e-6)

    def test_zero_chirp_axis_aligned(self):
        p = GaussParams(sigma=5e13, beta=0.0, tau_s=4e-13, tau_i=-2e-13)
        dw = spectral_width(p)
        dt = temporal_width(p)
        nu = np.linspace(-6 * dw, 6 * dw, 301)
        t = np.linspace(-6 * dt, 6 * dt, 301)
        w = analytic_cwf(p, nu[:, None], t[None, :])
        cross = (w * nu[:, None] * t[None, :]).sum() * (nu[1] - nu[0]) * (t[1] - t[0])
        assert abs(cross / (dw * dt)) < 1e-8

    @pytest.mark.parametrize("target", [+0.5, -0.5])
    def test_cross_moment_sign_matches_chirp(self, target):
        # pick tau values giving |C| = 0.5 via a beta scan, then check
        # the signed cross moment
        tau_s, tau_i = 4e-13, -2e-13
        betas = np.linspace(1e-28, 3e-25, 4000)
        vals = [chirp_param(GaussParams(sigma=5e13, beta=b, tau_s=tau_s,
                                        tau_i=tau_i)) for b in betas]
        idx = int(np.argmin(np.abs(np.array(vals) - abs(target))))
        beta = betas[idx] * np.sign(target) * np.sign(vals[idx])
        p = GaussParams(sigma=5e13, beta=beta, tau_s=tau_s, tau_i=tau_i)
        c = chirp_param(p)
        assert abs(abs(c) - 0.5) < 0.05
        dw = marginal_spectral_width(p)
        dt = marginal_temporal_width(p)
        nu = np.linspace(-6 * dw, 6 * dw, 301)
        t = np.linspace(-6 * dt, 6 * dt, 301)
        w = analytic_cwf(p, nu[:, None], t[None, :])
        cross = (w * nu[:, None] * t[None, :]).sum()
        assert np.sign(cross) == np.sign(c) == np.sign(target)

    def test_anticorrelated_limit_rejected(self):
        p = GaussParams(sigma=5e13, beta=1e-26, tau_s=7e-13, tau_i=7e-13)
        with pytest.raises(PhysicsDomainError):
            analytic_cwf(p, 0.0, 0.0)

    def test_summary_bundle(self):
        p = GaussParams(sigma=5e13, beta=4e-26, tau_s=4e-13, tau_i=-2e-13)
        s = analytic_summary(p)
        assert isinstance(s, AnalyticCwf)
        assert s.delta_omega == spectral_width(p)
        assert s.delta_t == temporal_width(p)
        assert s.chirp == chirp_param(p)
        assert not s.anticorrelated_limit


class TestAgainstNumericPipeline:
    """The closed forms against the full numeric transform chain on the
    same Gaussian amplitude (the model's own input)."""

    def fit(self, params, n=None):
        grid = gaussian_grid(params, n=n)
        jsa = gaussian_jsa(params, grid)
        wg = wigner_from_density(to_diagonal_view(reduce_density(jsa)))
        return jsa, cwf_moment_fit(wg), wg

    def test_kdp_widths_within_two_percent(self):
        params = get_preset("vertical").gauss_params(beta=REFERENCE_CHIRP)
        _, (dw_fit, dt_fit, _), _ = self.fit(params)
        assert dw_fit == pytest.approx(marginal_spectral_width(params), rel=0.02)
        assert dt_fit == pytest.approx(marginal_temporal_width(params), rel=0.02)

    def test_unchirped_positive_widths(self):
        params = get_preset("positive").gauss_params(beta=0.0)
        _, (dw_fit, dt_fit, c_fit), _ = self.fit(params)
        assert dw_fit == pytest.approx(spectral_width(params), rel=0.02)
        assert dt_fit == pytest.approx(temporal_width(params), rel=0.02)
        assert abs(c_fit) < 0.01

    def test_pointwise_cwf_agreement(self):
        params = get_preset("circular").gauss_params(beta=REFERENCE_CHIRP)
        _, _, wg = self.fit(params)
        nu = wg.omega_axis[:, None] - wg.omega_axis.mean()
        wan = analytic_cwf(params, nu, wg.time_axis[None, :])
        mask = wan >= np.exp(-2.0) * wan.max()
        err = np.abs(wg.w - wan)[mask].max() / wan.max()
        assert err < 0.05

    def test_duration_bandwidth_factorable(self):
        sigma = 5e13
        tau = 2.0 / (np.sqrt(GAMMA) * sigma)
        params = GaussParams(sigma=sigma, beta=0.0, tau_s=tau, tau_i=-tau)
        jsa, _, _ = self.fit(params, n=256)
        p_num = purity_schmidt(jsa).purity
        assert p_num == pytest.approx(1.0, abs=1e-4)
        assert duration_bandwidth_check(params, p_num) < 0.1

    def test_duration_bandwidth_beta_sweep(self):
        base = get_preset("positive").gauss_params()
        for beta in (0.0, 1e-26, 2e-26, 4e-26, 8e-26):
            params = GaussParams(sigma=base.sigma, beta=beta,
                                 tau_s=base.tau_s, tau_i=base.tau_i)
            grid = gaussian_grid(params, n=512)
            p_num = purity_schmidt(gaussian_jsa(params, grid)).purity
            assert duration_bandwidth_check(params, p_num) < 0.1

    def test_duration_bandwidth_skips_anticorrelated(self):
        params = GaussParams(sigma=5e13, beta=1e-26, tau_s=7e-13, tau_i=7e-13)
        assert duration_bandwidth_check(params, 0.1) is None
