"""The transform helper is the backbone of every Wigner/coherence
computation, so it gets checked against direct quadrature and analytic
Gaussian pairs."""
import numpy as np
import pytest

from chronopair.fourier import axis_step, cft, conjugate_axis, dft_at


def direct_sum(values, x, y, sign, scale):
    dx = x[1] - x[0]
    kernel = np.exp(sign * 1j * np.outer(y, x))
    return scale * dx * kernel @ values


def test_cft_matches_direct_quadrature():
    rng = np.random.default_rng(7)
    n = 97
    x = np.linspace(-3.0, 5.0, n)   # deliberately offset axis
    g = rng.normal(size=n) + 1j * rng.normal(size=n)
    for sign in (-1, +1):
        y, big_g = cft(g, x, sign=sign, scale=0.25)
        ref = direct_sum(g, x, y, sign, 0.25)
        assert np.max(np.abs(big_g - ref)) < 1e-10 * np.max(np.abs(ref))


def test_cft_gaussian_pair():
    # exp(-x^2/s^2) -> s*sqrt(pi)*exp(-s^2 y^2 / 4) under sum g e^{-ixy} dx
    s = 0.8
    x = np.linspace(-12, 12, 601)
    g = np.exp(-(x / s) ** 2)
    y, big_g = cft(g, x, sign=-1, scale=1.0)
    expected = s * np.sqrt(np.pi) * np.exp(-(s * y / 2.0) ** 2)
    assert np.max(np.abs(big_g - expected)) < 1e-12 * expected.max()
    assert np.max(np.abs(big_g.imag)) < 1e-12 * expected.max()


def test_cft_round_trip_exact_on_grid():
    # zero-centered odd-count axes (the physics pipeline's layout) are
    # reproduced exactly by conjugate_axis twice, so forward+backward
    # with scales 1/2pi and 1 invert on the nose
    rng = np.random.default_rng(11)
    n = 129
    x = (np.arange(n) - n // 2) * 0.0625
    g = rng.normal(size=n) + 1j * rng.normal(size=n)
    y, forward = cft(g, x, sign=-1, scale=1.0 / (2 * np.pi))
    x2, back = cft(forward, y, sign=+1, scale=1.0)
    assert x2 == pytest.approx(x, abs=1e-12 * axis_step(x))
    assert np.max(np.abs(back - g)) < 1e-12 * np.max(np.abs(g))


def test_cft_2d_rows():
    rng = np.random.default_rng(3)
    x = np.linspace(0.0, 2.0, 33)
    g = rng.normal(size=(5, 33))
    y, big_g = cft(g, x, sign=-1, axis=1)
    for row in range(5):
        ref = direct_sum(g[row], x, y, -1, 1.0)
        assert np.max(np.abs(big_g[row] - ref)) < 1e-11 * np.max(np.abs(ref))


def test_dft_at_matches_direct():
    rng = np.random.default_rng(5)
    x = np.linspace(-1.0, 1.0, 41)
    y = rng.uniform(-20, 20, size=17)
    g = rng.normal(size=41) + 1j * rng.normal(size=41)
    out = dft_at(g, x, y, sign=+1, scale=2.0)
    ref = direct_sum(g, x, y, +1, 2.0)
    assert np.max(np.abs(out - ref)) < 1e-11 * np.max(np.abs(ref))


def test_conjugate_axis_is_centered_and_conjugate():
    x = np.linspace(10.0, 11.0, 64)
    y = conjugate_axis(x)
    assert y[64 // 2] == 0.0
    assert axis_step(y) * axis_step(x) == pytest.approx(2 * np.pi / 64, rel=1e-12)


def test_nonuniform_axis_rejected():
    x = np.array([0.0, 1.0, 2.5])
    with pytest.raises(ValueError):
        cft(np.ones(3), x)
