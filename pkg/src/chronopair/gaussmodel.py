"""Closed-form Gaussian model of the heralded photon's chronocyclic
Wigner function: X parameters, spectral width, temporal width, the
single-photon chirp parameter, and the analytic CWF itself.

Internally everything is evaluated in rad/fs and fs (beta in fs^2):
the width formulas mix beta^2 with products of X parameters, and in SI
those intermediates sit at 1e-52 where double precision gets
uncomfortable.  Interfaces are SI.

The anti-correlated configuration tau_s = tau_i is singular (infinite
spectral width); it is detected by a relative tolerance and handled by
the model's limit values: chirp -> 0, spectral width -> overflow.
"""
import math
from dataclasses import dataclass

import numpy as np

from .errors import PhysicsDomainError

# sinc(x)^2 ~ exp(-gamma * x^2) Gaussian replacement of the
# phasematching function; fixed by the model.
GAMMA = 0.193

# relative |tau_s - tau_i| below which the model switches to its
# anti-correlated limit values
ANTICORRELATED_RTOL = 1e-6

# spectral widths above this cap are reported as infinite
DELTA_OMEGA_CAP = 1e18  # rad/s

_FS = 1e-15  # seconds per femtosecond


@dataclass(frozen=True)
class GaussParams:
    """Inputs of the Gaussian model, SI units.

    sigma: pump amplitude 1/e half-width (rad/s); beta: quadratic pump
    chirp (s^2); tau_s, tau_i: group-velocity-mismatch parameters (s);
    gamma: Gaussian phasematching fit constant.
    """
    sigma: float
    beta: float
    tau_s: float
    tau_i: float
    gamma: float = GAMMA

    def __post_init__(self):
        if self.sigma <= 0:
            raise PhysicsDomainError("pump sigma must be > 0")

    @classmethod
    def from_source(cls, pump, gvm, gamma=GAMMA):
        """Build from a PumpSpec and GvmParams pair."""
        return cls(sigma=pump.amplitude_sigma, beta=pump.chirp,
                   tau_s=gvm.tau_s, tau_i=gvm.tau_i, gamma=gamma)

    def is_anticorrelated_limit(self):
        scale = max(abs(self.tau_s), abs(self.tau_i))
        return scale > 0 and abs(self.tau_s - self.tau_i) < ANTICORRELATED_RTOL * scale


@dataclass(frozen=True)
class AnalyticCwf:
    """Derived CWF parameters: spectral width (rad/s), temporal width
    (s), chirp parameter in [-1, 1], and whether the anti-correlated
    limit rules were applied."""
    delta_omega: float
    delta_t: float
    chirp: float
    anticorrelated_limit: bool = False


def _tau_fs(params, which):
    return (params.tau_s if which == "s" else params.tau_i) / _FS


def x_param(params, lam, mu):
    """X_{lam,mu} = 1/sigma^2 + gamma*tau_lam*tau_mu/4 in s^2;
    lam, mu in {'s', 'i'}; symmetric in its two mode labels."""
    for label in (lam, mu):
        if label not in ("s", "i"):
            raise ValueError(f"mode label must be 's' or 'i', got {label!r}")
    x = _x_fs(params, lam, mu)
    return x * _FS**2


def _x_fs(params, lam, mu):
    sigma_fs = params.sigma * _FS  # rad/fs
    return 1.0 / sigma_fs**2 + params.gamma * _tau_fs(params, lam) * _tau_fs(params, mu) / 4.0


def _abc(params):
    """(X_ss, X_ii, X_si, beta) in fs units."""
    return (_x_fs(params, "s", "s"), _x_fs(params, "i", "i"),
            _x_fs(params, "s", "i"), params.beta / _FS**2)


def spectral_width(params):
    """Spectral width parameter (rad/s) of the analytic CWF.

    Diverges as tau_s -> tau_i; values above DELTA_OMEGA_CAP (and the
    detected limit itself) are reported as math.inf.
    """
    if params.is_anticorrelated_limit():
        return math.inf
    a, b, c, beta = _abc(params)
    denom = 2.0 * (beta**2 * (a - 2.0 * c + b) + a * (a * b - c**2))
    if denom <= 0.0:
        raise PhysicsDomainError(
            "degenerate configuration: spectral-width denominator is not "
            f"positive (tau_s={params.tau_s}, tau_i={params.tau_i})")
    dw_fs = math.sqrt((beta**2 + a * b) / denom)  # rad/fs
    dw = dw_fs / _FS
    return math.inf if dw > DELTA_OMEGA_CAP else dw


def temporal_width(params):
    """Temporal width parameter (s): dt^2 = 2*(beta^2 + X_ss*X_ii)/X_ii."""
    a, b, c, beta = _abc(params)
    del c
    return math.sqrt(2.0 * (beta**2 + a * b) / b) * _FS


def chirp_param(params):
    """Single-photon chirp parameter, dimensionless, |C| <= 1.

    C = beta*(X_ii - X_si) / sqrt(X_ii*[beta^2*(X_ss - 2*X_si + X_ii)
          + X_ss*(X_ss*X_ii - X_si^2)]).

    Positive C means frequency and emission time are positively
    correlated.  The tau_s -> tau_i limit returns exactly 0.
    """
    if params.is_anticorrelated_limit():
        return 0.0
    a, b, c, beta = _abc(params)
    if beta == 0.0:
        return 0.0
    radicand = b * (beta**2 * (a - 2.0 * c + b) + a * (a * b - c**2))
    if radicand <= 0.0:
        raise PhysicsDomainError(
            "degenerate configuration: chirp-parameter radicand is not positive")
    return beta * (b - c) / math.sqrt(radicand)


def analytic_summary(params):
    """AnalyticCwf bundle (spectral width, temporal width, chirp)."""
    return AnalyticCwf(delta_omega=spectral_width(params),
                       delta_t=temporal_width(params),
                       chirp=chirp_param(params),
                       anticorrelated_limit=params.is_anticorrelated_limit())


def analytic_cwf(params, nu, t):
    """Closed-form CWF density at detuning nu (rad/s) and time t (s):

        W = sqrt(1-C^2)/(pi*dt*dw) * exp(-(nu/dw)^2) * exp(-(t/dt)^2)
              * exp(+2*C*(nu/dw)*(t/dt))

    normalized to unit integral.  The cross term carries the sign that
    makes sign(<nu*t>) = sign(C); with it, the Fourier conventions used
    by the numeric pipeline reproduce this form from the Gaussian JSA.
    """
    if params.is_anticorrelated_limit():
        raise PhysicsDomainError(
            "anti-correlated limit: spectral width diverges, the closed "
            "form is not evaluable")
    dw = spectral_width(params)
    dt = temporal_width(params)
    c = chirp_param(params)
    if not abs(c) < 1.0:
        raise PhysicsDomainError(f"|C| = {abs(c)} >= 1: degenerate distribution")
    if not math.isfinite(dw):
        raise PhysicsDomainError("spectral width overflow; too close to the "
                                 "anti-correlated configuration")
    nu_h = np.asarray(nu) / dw
    t_h = np.asarray(t) / dt
    norm = math.sqrt(1.0 - c * c) / (math.pi * dt * dw)
    return norm * np.exp(-nu_h**2 - t_h**2 + 2.0 * c * nu_h * t_h)


def marginal_spectral_width(params):
    """1/e half-width (rad/s) of the photon's spectral marginal,
    delta_omega / sqrt(1 - C^2).

    Unlike the conditional width of the closed form, this one is
    independent of the pump chirp (the joint spectrum depends on beta
    only through a phase); within the model the two are tied by
    marginal = conditional / sqrt(1 - C^2).
    """
    c = chirp_param(params)
    dw = spectral_width(params)
    if not math.isfinite(dw):
        return math.inf
    return dw / math.sqrt(1.0 - c * c)


def marginal_temporal_width(params):
    """1/e half-width (s) of the photon's temporal marginal,
    delta_t / sqrt(1 - C^2)."""
    c = chirp_param(params)
    return temporal_width(params) / math.sqrt(1.0 - c * c)


def duration_bandwidth_check(params, numeric_purity):
    """Residual |dt * dw_marginal * p - 1| of the duration-bandwidth-
    purity relation, with dt the model's temporal width parameter,
    dw_marginal the chirp-independent marginal spectral width, and p a
    numerically computed purity.

    For the model's own Gaussian the product dt * dw_marginal equals
    1/p identically; at zero chirp it reduces to dt * dw * p.  Returns
    None (skip) in the anti-correlated limit where the spectral width
    diverges."""
    if params.is_anticorrelated_limit():
        return None
    dw = marginal_spectral_width(params)
    if not math.isfinite(dw):
        return None
    return abs(temporal_width(params) * dw * numeric_purity - 1.0)
