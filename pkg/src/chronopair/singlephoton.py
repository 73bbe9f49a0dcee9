"""Heralded single-photon analysis.

Tracing the two-photon amplitude over the idler gives the signal
photon's spectral density matrix; from it come the purity (two
independent routes), the chronocyclic Wigner function via the rotated
(diagonal/anti-diagonal) frequency coordinates, spectral and temporal
intensities, and the first-order spectral/temporal coherence functions.

Transform conventions (signs and 2*pi factors) follow the continuous
definitions:

    W(w, t)      = 1/(2*pi) * Int dw' rho_d(w, w') exp(-i*w'*t)
    rho_d(w, w') = Int dt W(w, t) exp(+i*w'*t)
    Gamma(t1,t2) = Int dw dw' rho_d(w,w') exp(-i*(w'/2)*(t1+t2))
                                          * exp(+i*w*(t1-t2))
"""
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import RectBivariateSpline
from scipy.optimize import curve_fit

from .errors import ContractError, NumericalError
from .fourier import cft, conjugate_axis, dft_at

# relative ceiling on the imaginary residue of transforms whose result
# must be real (Hermiticity consequence)
IMAG_RESIDUE_RTOL = 1e-10


@dataclass(frozen=True)
class DensityMatrix:
    """rho(w1, w2) of the heralded photon on a uniform frequency axis."""
    axis: np.ndarray
    rho: np.ndarray
    trace_normalized: bool = True

    @property
    def step(self):
        a = self.axis
        return (a[-1] - a[0]) / (a.size - 1)

    def trace(self):
        return float(np.real(np.trace(self.rho)) * self.step)

    def hermiticity_residue(self):
        scale = np.max(np.abs(self.rho))
        if scale == 0.0:
            return 0.0
        return float(np.max(np.abs(self.rho - self.rho.conj().T)) / scale)


@dataclass(frozen=True)
class DiagonalView:
    """rho_d(w, w') = rho(w + w'/2, w - w'/2) on a rectangular
    (diagonal w) x (anti-diagonal w') grid; w' is symmetric about 0."""
    omega_axis: np.ndarray
    omega_prime_axis: np.ndarray
    rho_d: np.ndarray

    @property
    def omega_step(self):
        a = self.omega_axis
        return (a[-1] - a[0]) / (a.size - 1)

    @property
    def omega_prime_step(self):
        a = self.omega_prime_axis
        return (a[-1] - a[0]) / (a.size - 1)


@dataclass(frozen=True)
class WignerGrid:
    """Real chronocyclic Wigner function W(w, t); axis 0 = frequency."""
    omega_axis: np.ndarray
    time_axis: np.ndarray
    w: np.ndarray

    @property
    def omega_step(self):
        a = self.omega_axis
        return (a[-1] - a[0]) / (a.size - 1)

    @property
    def time_step(self):
        a = self.time_axis
        return (a[-1] - a[0]) / (a.size - 1)

    def total_integral(self):
        return float(self.w.sum() * self.omega_step * self.time_step)


@dataclass(frozen=True)
class CoherenceGrid:
    """First-order temporal coherence Gamma(t1, t2)."""
    t1_axis: np.ndarray
    t2_axis: np.ndarray
    gamma: np.ndarray


@dataclass(frozen=True)
class SchmidtResult:
    purity: float
    schmidt_number: float
    weights: np.ndarray


def reduce_density(jsa):
    """Trace the normalized JSA over the idler:
    rho(w1, w2) = sum_k f(w1, wk) f*(w2, wk) * dwi."""
    if not jsa.normalized:
        raise ContractError("reduce_density requires a normalized JsaGrid")
    f = jsa.amplitude
    rho = (f @ f.conj().T) * jsa.grid.idler_step
    dm = DensityMatrix(jsa.grid.signal_axis.copy(), rho, trace_normalized=False)
    tr = dm.trace()
    return DensityMatrix(dm.axis, rho / tr, trace_normalized=True)


def purity_trace(dm):
    """p = Tr(rho^2) = sum |rho(w1,w2)|^2 dw1 dw2."""
    if not dm.trace_normalized:
        raise ContractError("purity_trace requires a trace-normalized density matrix")
    return float(np.sum(np.abs(dm.rho) ** 2) * dm.step**2)


def purity_schmidt(jsa):
    """Schmidt route: SVD of the amplitude scaled by sqrt(dws*dwi).

    Returns SchmidtResult(purity = sum lambda_k^2, K = 1/purity,
    weights).  Independent oracle for purity_trace.
    """
    if not jsa.normalized:
        raise ContractError("purity_schmidt requires a normalized JsaGrid")
    scaled = jsa.amplitude * np.sqrt(jsa.grid.measure)
    try:
        s = np.linalg.svd(scaled, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(
            f"SVD failed on a {scaled.shape} amplitude grid "
            f"(steps {jsa.grid.signal_step:.3g}, {jsa.grid.idler_step:.3g})") from exc
    weights = s**2
    p = float(np.sum(weights**2))
    return SchmidtResult(purity=p, schmidt_number=1.0 / p, weights=weights)


def _spline_eval(axis_x, axis_y, values, xq, yq):
    """Bicubic-spline evaluation of complex grid data at scattered
    points, zero-filled outside the data rectangle."""
    inside = ((xq >= axis_x[0]) & (xq <= axis_x[-1])
              & (yq >= axis_y[0]) & (yq <= axis_y[-1]))
    out = np.zeros(xq.shape, dtype=complex)
    xi, yi = xq[inside], yq[inside]
    for part, comp in ((values.real, 1.0), (values.imag, 1.0j)):
        spl = RectBivariateSpline(axis_x, axis_y, part, kx=3, ky=3, s=0)
        out[inside] += comp * spl.ev(xi, yi)
    return out


def to_diagonal_view(dm):
    """Rotate rho(w1, w2) to rho_d(w, w') with w' on a symmetric
    (2N-1)-point axis of the same step.

    Half-step sample points are filled by bicubic interpolation; points
    outside the data square are zero (the density matrix decays to
    machine zero at the grid edge by construction).
    """
    n = dm.axis.size
    d = dm.step
    omega = dm.axis
    omega_prime = (np.arange(2 * n - 1) - (n - 1)) * d
    w, wp = np.meshgrid(omega, omega_prime, indexing="ij")
    rho_d = _spline_eval(omega, omega, dm.rho, w + wp / 2.0, w - wp / 2.0)
    return DiagonalView(omega.copy(), omega_prime, rho_d)


def from_diagonal_view(dv, trace_normalized=True):
    """Inverse rotation back to rho(w1, w2) on dv.omega_axis."""
    omega = dv.omega_axis
    w1, w2 = np.meshgrid(omega, omega, indexing="ij")
    rho = _spline_eval(omega, dv.omega_prime_axis, dv.rho_d,
                       (w1 + w2) / 2.0, w1 - w2)
    return DensityMatrix(omega.copy(), rho, trace_normalized=trace_normalized)


def purity_from_diagonal(dv):
    """Tr(rho^2) evaluated in rotated coordinates (unit Jacobian)."""
    return float(np.sum(np.abs(dv.rho_d) ** 2) * dv.omega_step * dv.omega_prime_step)


def wigner_from_density(dv):
    """W(w, t) = 1/(2*pi) * Int dw' rho_d(w, w') exp(-i*w'*t) along each
    frequency row; the time axis is the conjugate of the w' axis.

    The result of the transform must be real (Hermiticity); its
    relative imaginary residue is checked against 1e-10.
    """
    t, wc = cft(dv.rho_d, dv.omega_prime_axis, sign=-1,
                scale=1.0 / (2.0 * np.pi), axis=1)
    scale = np.max(np.abs(wc.real))
    residue = np.max(np.abs(wc.imag)) / scale if scale > 0 else 0.0
    if residue > IMAG_RESIDUE_RTOL:
        raise NumericalError(
            f"Wigner transform imaginary residue {residue:.2e} exceeds "
            f"{IMAG_RESIDUE_RTOL:.0e}; upstream density matrix is not Hermitian")
    return WignerGrid(dv.omega_axis.copy(), t, wc.real.copy())


def density_from_wigner(wg):
    """Inverse transform rho_d(w, w') = Int dt W(w, t) exp(+i*w'*t);
    exact on-grid inverse of wigner_from_density."""
    wp, rho_d = cft(wg.w.astype(complex), wg.time_axis, sign=+1, scale=1.0, axis=1)
    return DiagonalView(wg.omega_axis.copy(), wp, rho_d)


def spectral_intensity(dm):
    """Single-photon spectrum I_w(w) = rho(w, w), on dm.axis."""
    return np.real(np.diag(dm.rho)).copy()


def temporal_intensity(dv):
    """Temporal intensity I_t(t) = 1/(2*pi) Int dw' [Int dw rho_d] e^{-iw't};
    returns (time_axis, I_t).  Equals the frequency marginal of the CWF."""
    g = dv.rho_d.sum(axis=0) * dv.omega_step
    t, it = cft(g, dv.omega_prime_axis, sign=-1, scale=1.0 / (2.0 * np.pi))
    scale = np.max(np.abs(it.real))
    residue = np.max(np.abs(it.imag)) / scale if scale > 0 else 0.0
    if residue > 1e-9:
        raise NumericalError(f"temporal intensity came out complex "
                             f"(relative residue {residue:.2e})")
    return t, it.real.copy()


def spectral_coherence(dm):
    """First-order spectral coherence S(w1, w2) = rho*(w1, w2)."""
    return dm.rho.conj().copy()


def default_coherence_axis(dv, n=128, span_sigmas=3.0):
    """Uniform time axis sized to the photon's temporal intensity:
    +- span_sigmas times the rms duration, clipped to the Wigner time
    window, with n points."""
    t, it = temporal_intensity(dv)
    mass = np.clip(it, 0.0, None)
    mass_sum = mass.sum()
    if mass_sum <= 0:
        raise NumericalError("temporal intensity has no positive mass")
    mean = float((mass * t).sum() / mass_sum)
    rms = float(np.sqrt((mass * (t - mean) ** 2).sum() / mass_sum))
    half = min(span_sigmas * rms, 0.999 * (t[-1] - t[0]) / 2.0)
    return mean + np.linspace(-half, half, n)


def temporal_coherence(dv, t_axis=None, n=128):
    """Gamma(t1, t2) by the double transform of rho_d (see module
    docstring), evaluated on a uniform time axis (default: sized from
    the temporal intensity)."""
    t = default_coherence_axis(dv, n) if t_axis is None else np.asarray(t_axis, float)
    m = t.size
    dt = (t[-1] - t[0]) / (m - 1)
    # both (t1 - t2) and (t1 + t2)/2 live on small uniform lattices
    tau_axis = (np.arange(2 * m - 1) - (m - 1)) * dt
    tbar_axis = t[0] + np.arange(2 * m - 1) * dt / 2.0
    # stage 1: C(w', tau) = Int dw rho_d(w, w') e^{+i w tau}
    c = dft_at(dv.rho_d.T, dv.omega_axis, tau_axis, sign=+1)      # (M, 2m-1)
    # stage 2: per tau, w' -> tbar
    g = dft_at(c.T, dv.omega_prime_axis, tbar_axis, sign=-1)      # (2m-1, 2m-1)
    i = np.arange(m)
    gamma = g[(i[:, None] - i[None, :]) + (m - 1), i[:, None] + i[None, :]]
    return CoherenceGrid(t.copy(), t.copy(), gamma)


def temporal_coherence_from_wigner(wg, t_axis):
    """Gamma(t1, t2) = 2*pi * Int dw W(w, (t1+t2)/2) e^{+i*w*(t1-t2)}.

    ``t_axis`` must be an even-stride subset of the Wigner time axis so
    every midpoint (t1+t2)/2 lands exactly on a stored time column.
    """
    t = np.asarray(t_axis, float)
    dt_w = wg.time_step
    idx = np.round((t - wg.time_axis[0]) / dt_w).astype(int)
    if (np.any(idx < 0) or np.any(idx >= wg.time_axis.size)
            or not np.allclose(wg.time_axis[idx], t, rtol=0, atol=1e-9 * dt_w)
            or np.unique(idx % 2).size != 1):
        raise ContractError("t_axis must be a same-parity subset of the "
                            "Wigner time axis")
    m = t.size
    mid = (idx[:, None] + idx[None, :]) // 2
    gamma = np.empty((m, m), dtype=complex)
    for i in range(m):
        kernel = np.exp(1j * np.outer(wg.omega_axis, t[i] - t))
        gamma[i, :] = (wg.w[:, mid[i, :]] * kernel).sum(axis=0)
    gamma *= 2.0 * np.pi * wg.omega_step
    return CoherenceGrid(t.copy(), t.copy(), gamma)


def antidiagonal_width(dv):
    """Fitted 1/e half-width sigma' of |Int dw rho_d(w, w')| vs w'.

    Gaussian least-squares fit seeded by the second moment; diagnostic
    only (the modulus need not be Gaussian far from the impure limit).
    """
    g = np.abs(dv.rho_d.sum(axis=0) * dv.omega_step)
    x = dv.omega_prime_axis
    scale_x = np.sqrt((g * x**2).sum() / g.sum())
    if scale_x == 0:
        raise NumericalError("degenerate anti-diagonal profile")
    xn = x / scale_x

    def model(w, a, s):
        return a * np.exp(-((w / s) ** 2))

    popt, _ = curve_fit(model, xn, g, p0=(float(g.max()), np.sqrt(2.0)))
    return float(abs(popt[1]) * scale_x)


def fwhm(axis, values):
    """Full width at half maximum of a sampled profile, with linear
    interpolation of the outermost half-max crossings."""
    values = np.asarray(values, dtype=float)
    axis = np.asarray(axis, dtype=float)
    peak = values.max()
    if peak <= 0:
        raise NumericalError("profile has no positive peak")
    half = 0.5 * peak
    above = np.nonzero(values >= half)[0]
    lo, hi = above[0], above[-1]

    def cross(i, j):
        if i == j or values[i] == values[j]:
            return axis[i]
        frac = (half - values[j]) / (values[i] - values[j])
        return axis[j] + frac * (axis[i] - axis[j])

    left = cross(lo, lo - 1) if lo > 0 else axis[0]
    right = cross(hi, hi + 1) if hi < values.size - 1 else axis[-1]
    return float(right - left)


def cwf_moment_fit(wg, contour=None):
    """Second-moment Gaussian fit of a Wigner grid.

    Returns (delta_omega, delta_t, chirp): the 1/e amplitude half-widths
    of the spectral and temporal MARGINALS (dw^2 = 2<nu^2>,
    dt^2 = 2<t^2>), plus the Pearson correlation C of the W mass.  For
    the Gaussian exp(-(nu/a)^2 - (t/b)^2 + 2C nu t/(a b)) the marginal
    widths relate to the conditional parameters a, b by
    marginal = conditional / sqrt(1 - C^2).  Marginal moments stay well
    conditioned as |C| -> 1, where recovering the conditional widths
    would amplify any C error by 2C/(1-C^2).

    With ``contour`` set (e.g. exp(-2)), only cells with
    W >= contour * max(W) enter the moments and the variances are
    rescaled by the exact Gaussian truncation factor.  For a Gaussian
    the amplitude-contour cut is an ellipse of the distribution itself,
    so the correlation is unbiased and the widths are recovered exactly;
    for the real sinc-tailed states it keeps the slowly decaying (and
    grid-span dependent) phasematching tails out of the moments.
    """
    w = wg.w
    if contour is None:
        mass = w * wg.omega_step * wg.time_step
        trunc = 1.0
    else:
        mass = np.where(w >= contour * w.max(), w, 0.0) * wg.omega_step * wg.time_step
        q = -np.log(contour)
        trunc = (1.0 - (1.0 + q) * np.exp(-q)) / (1.0 - np.exp(-q))
    total = mass.sum()
    nu = wg.omega_axis[:, None]
    t = wg.time_axis[None, :]
    nu0 = (mass * nu).sum() / total
    t0 = (mass * t).sum() / total
    m_nn = (mass * (nu - nu0) ** 2).sum() / total / trunc
    m_tt = (mass * (t - t0) ** 2).sum() / total / trunc
    m_nt = (mass * (nu - nu0) * (t - t0)).sum() / total / trunc
    chirp = m_nt / np.sqrt(m_nn * m_tt)
    dw = np.sqrt(2.0 * m_nn)
    dt = np.sqrt(2.0 * m_tt)
    return float(dw), float(dt), float(chirp)
