"""Two-photon joint spectral amplitudes on frequency grids.

The JSA is the product of the crystal phasematching function
sinc(L*dk/2), the Gaussian pump envelope, and the quadratic pump chirp
phase exp(i*beta*(omega_s + omega_i - omega_p0)^2).  A closed-form
Gaussian surrogate built from the X parameters of :mod:`gaussmodel` is
also provided for analytic-versus-numeric cross checks.
"""
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from . import gaussmodel
from .dispersion import phase_mismatch, spdc_modes, transparency_window
from .errors import ContractError, PhysicsDomainError
from .units import FWHM_TO_SIGMA, omega_from_wavelength, wavelength_from_omega


@dataclass(frozen=True)
class PumpSpec:
    """Gaussian pump pulse: amplitude exp[-(w-w0)^2/sigma^2] with a
    quadratic spectral chirp phase exp[i*beta*(w-w0)^2].

    ``intensity_fwhm_bandwidth`` is the FWHM of the spectral intensity
    in rad/s; sigma and the transform-limited intensity-FWHM duration
    are derived from it.
    """
    center_wavelength: float        # m
    intensity_fwhm_bandwidth: float  # rad/s
    chirp: float = 0.0              # s^2

    def __post_init__(self):
        if self.center_wavelength <= 0:
            raise PhysicsDomainError("pump wavelength must be > 0")
        if self.intensity_fwhm_bandwidth <= 0:
            raise PhysicsDomainError("pump bandwidth must be > 0")

    @classmethod
    def from_wavelength_fwhm(cls, center_wavelength, wavelength_fwhm, chirp=0.0):
        dw = 2.0 * np.pi * 299792458.0 * wavelength_fwhm / center_wavelength**2
        return cls(center_wavelength, dw, chirp)

    @property
    def center_frequency(self):
        return omega_from_wavelength(self.center_wavelength)

    @property
    def amplitude_sigma(self):
        return self.intensity_fwhm_bandwidth * FWHM_TO_SIGMA

    @property
    def transform_limited_duration(self):
        # Gaussian intensity-FWHM time-bandwidth product: dt*dw = 4 ln 2
        return 4.0 * np.log(2.0) / self.intensity_fwhm_bandwidth

    def with_chirp(self, beta):
        return replace(self, chirp=beta)


@dataclass(frozen=True)
class FrequencyGrid:
    """Rectangular uniform grid of signal x idler angular frequencies.
    Array layout everywhere: axis 0 = signal, axis 1 = idler."""
    signal_axis: np.ndarray
    idler_axis: np.ndarray

    def __post_init__(self):
        for name, ax in (("signal", self.signal_axis), ("idler", self.idler_axis)):
            ax = np.asarray(ax, dtype=float)
            if ax.size < 2:
                raise ContractError(f"{name} axis needs at least 2 points")
            d = np.diff(ax)
            if np.any(d <= 0) or not np.allclose(d, d[0], rtol=1e-9, atol=0.0):
                raise ContractError(f"{name} axis must be uniform and increasing")
        object.__setattr__(self, "signal_axis", np.asarray(self.signal_axis, float))
        object.__setattr__(self, "idler_axis", np.asarray(self.idler_axis, float))

    @classmethod
    def centered(cls, signal_center, idler_center, signal_half_span,
                 idler_half_span, n_signal, n_idler=None):
        n_idler = n_signal if n_idler is None else n_idler
        return cls(signal_center + np.linspace(-signal_half_span, signal_half_span, n_signal),
                   idler_center + np.linspace(-idler_half_span, idler_half_span, n_idler))

    @property
    def signal_step(self):
        a = self.signal_axis
        return (a[-1] - a[0]) / (a.size - 1)

    @property
    def idler_step(self):
        a = self.idler_axis
        return (a[-1] - a[0]) / (a.size - 1)

    @property
    def measure(self):
        return self.signal_step * self.idler_step

    def mesh(self):
        return np.meshgrid(self.signal_axis, self.idler_axis, indexing="ij")


@dataclass(frozen=True)
class JsaGrid:
    grid: FrequencyGrid
    amplitude: np.ndarray   # complex, (n_signal, n_idler)
    normalized: bool = False

    def norm_squared(self):
        """sum |f|^2 dws dwi on the grid."""
        return float(np.sum(np.abs(self.amplitude) ** 2) * self.grid.measure)

    def intensity(self):
        return np.abs(self.amplitude) ** 2

    def normalized_copy(self):
        n2 = self.norm_squared()
        if n2 <= 0.0:
            raise PhysicsDomainError("cannot normalize an all-zero amplitude grid")
        return JsaGrid(self.grid, self.amplitude / np.sqrt(n2), normalized=True)


class FilterTarget(Enum):
    SIGNAL = "signal"
    IDLER = "idler"
    BOTH = "both"


@dataclass(frozen=True)
class FilterResult:
    jsa: JsaGrid
    heralding_efficiency: float


def _check_grid_window(crystal, grid):
    """Transparency-window check for all three modes over the grid,
    naming the offending axis extreme."""
    lo, hi = transparency_window(crystal.material)
    checks = [
        ("signal axis", grid.signal_axis[0], grid.signal_axis[-1]),
        ("idler axis", grid.idler_axis[0], grid.idler_axis[-1]),
        ("pump (signal+idler) axis",
         grid.signal_axis[0] + grid.idler_axis[0],
         grid.signal_axis[-1] + grid.idler_axis[-1]),
    ]
    for name, wmin, wmax in checks:
        for which, w in (("minimum", wmin), ("maximum", wmax)):
            lam = wavelength_from_omega(w)
            if not lo <= lam <= hi:
                raise PhysicsDomainError(
                    f"{name} {which} ({w:.4g} rad/s, {lam:.4g} m) falls outside "
                    f"the {crystal.material.value.upper()} window [{lo:.3g}, {hi:.3g}] m")


def pmf(crystal, grid, signal_polarization=None):
    """Phasematching function sinc(L*dk/2) on the grid (real array).

    sinc(x) = sin(x)/x with the removable singularity patched by its
    Taylor value at |x| < 1e-8.
    """
    _check_grid_window(crystal, grid)
    ws, wi = grid.mesh()
    x = crystal.length * phase_mismatch(crystal, ws, wi, signal_polarization) / 2.0
    # np.sinc is sin(pi u)/(pi u) and handles the x -> 0 limit
    return np.sinc(x / np.pi)


def pef(pump, grid):
    """Pump envelope on the grid: exp[-nu^2/sigma^2] * exp[i*beta*nu^2]
    with nu = omega_s + omega_i - omega_p0 (complex array)."""
    ws, wi = grid.mesh()
    nu = ws + wi - pump.center_frequency
    sigma = pump.amplitude_sigma
    return np.exp(-(nu / sigma) ** 2) * np.exp(1j * pump.chirp * nu**2)


def build_jsa(crystal, pump, grid, signal_polarization=None):
    """Normalized JSA = pmf * pef on the grid."""
    amp = pmf(crystal, grid, signal_polarization).astype(complex)
    amp *= pef(pump, grid)
    raw = JsaGrid(grid, amp)
    if raw.norm_squared() <= 0.0:
        raise PhysicsDomainError(
            "joint amplitude vanished on the whole grid; the grid misses "
            "the phase-matched region")
    return raw.normalized_copy()


def apply_filter(jsa, center, intensity_fwhm, which=FilterTarget.BOTH):
    """Gaussian spectral filter applied to the amplitude as the square
    root of an intensity profile with the given FWHM.

    ``intensity_fwhm=None`` is the identity filter.  Returns a
    FilterResult with the renormalized JsaGrid and the heralding
    efficiency (fraction of |f|^2 transmitted before renormalizing).
    """
    if intensity_fwhm is None:
        return FilterResult(jsa, 1.0)
    if intensity_fwhm <= 0:
        raise PhysicsDomainError("filter bandwidth must be > 0")
    sigma_amp = intensity_fwhm * FWHM_TO_SIGMA  # amplitude = sqrt(intensity)

    def amp_profile(axis):
        return np.exp(-(((axis - center) / sigma_amp) ** 2) / 1.0)

    amp = jsa.amplitude.copy()
    if which in (FilterTarget.SIGNAL, FilterTarget.BOTH):
        amp *= np.sqrt(amp_profile(jsa.grid.signal_axis))[:, None]
    if which in (FilterTarget.IDLER, FilterTarget.BOTH):
        amp *= np.sqrt(amp_profile(jsa.grid.idler_axis))[None, :]
    filtered = JsaGrid(jsa.grid, amp)
    transmitted = filtered.norm_squared()
    if transmitted < 1e-12:
        raise PhysicsDomainError(
            f"filter at {center:.4g} rad/s (FWHM {intensity_fwhm:.4g}) misses "
            "the spectrum; post-filter norm < 1e-12")
    efficiency = transmitted / jsa.norm_squared()
    return FilterResult(filtered.normalized_copy(), float(efficiency))


def gaussian_jsa(params, grid):
    """Gaussian-model JSA on detunings nu = omega - omega0 per axis:

        f = exp(-[X_ss nu_s^2 + X_ii nu_i^2 + 2 X_si nu_s nu_i])
            * exp(i*beta*(nu_s + nu_i)^2)

    with the X parameters of :mod:`gaussmodel`.  The chirp enters as the
    full quadratic phase of the pump envelope so that the closed-form
    width/chirp expressions derived from it apply verbatim.
    Grid axes are re-centered on their own midpoints.
    """
    x_ss = gaussmodel.x_param(params, "s", "s")
    x_ii = gaussmodel.x_param(params, "i", "i")
    x_si = gaussmodel.x_param(params, "s", "i")
    if x_ss <= 0 or x_ii <= 0:
        raise PhysicsDomainError("X_ss and X_ii must be positive")
    det = x_ss * x_ii - x_si**2
    if det < -1e-12 * x_ss * x_ii:
        raise PhysicsDomainError(
            "indefinite quadratic form: X_si^2 > X_ss*X_ii; the Gaussian "
            "amplitude is not normalizable")
    ws, wi = grid.mesh()
    nu_s = ws - 0.5 * (grid.signal_axis[0] + grid.signal_axis[-1])
    nu_i = wi - 0.5 * (grid.idler_axis[0] + grid.idler_axis[-1])
    quad = x_ss * nu_s**2 + x_ii * nu_i**2 + 2.0 * x_si * nu_s * nu_i
    amp = np.exp(-quad) * np.exp(1j * params.beta * (nu_s + nu_i) ** 2)
    return JsaGrid(grid, amp).normalized_copy()


def ridge_curvature(jsa, column_threshold=0.05):
    """Curvature of the joint-spectrum intensity ridge, measured as the
    quadratic sag (rad/s) across the populated signal window.

    For each signal frequency whose column peaks above
    ``column_threshold`` of the global maximum, the ridge point is the
    intensity centroid over the idler axis.  A mass-weighted quadratic
    fit idler(signal) = a + b*s + c*s^2 gives the curvature coefficient
    c, which is reported as the sag |c|*(2*std_s)^2 over the
    mass-weighted signal spread.  The raw |c| of an (ideally parabolic)
    ridge is window-invariant, so it cannot register that a spectral
    filter straightens the observable strip; the sag does.
    """
    inten = jsa.intensity()
    col_max = inten.max(axis=1)
    keep_cols = col_max >= column_threshold * inten.max()
    if np.count_nonzero(keep_cols) < 5:
        raise PhysicsDomainError("too few populated columns for a ridge fit")
    sub = inten[keep_cols]
    s_ax = jsa.grid.signal_axis[keep_cols]
    mass = sub.sum(axis=1)
    centroid = (sub * jsa.grid.idler_axis[None, :]).sum(axis=1) / mass
    # center/scale for a well-conditioned fit
    s0 = (mass * s_ax).sum() / mass.sum()
    scale = max(s_ax.max() - s_ax.min(), jsa.grid.signal_step)
    x = (s_ax - s0) / scale
    coeffs = np.polyfit(x, centroid, deg=2, w=np.sqrt(mass / mass.max()))
    sigma_x = np.sqrt((mass * x**2).sum() / mass.sum())
    return float(abs(coeffs[0]) * (2.0 * sigma_x) ** 2)


def gaussian_grid(params, n=None, center_signal=0.0, center_idler=0.0,
                  n_sigmas=6.0, max_n=4096):
    """Frequency grid adapted to a Gaussian-model JSA.

    Axis half-spans cover ``n_sigmas`` intensity standard deviations of
    each marginal.  When n is None the point count is chosen (power of
    two, capped) so the signal step both resolves the density matrix's
    anti-diagonal coherence ridge and gives the conjugate time axis
    enough range for the chirped photon's full duration.
    """
    x_ss = gaussmodel.x_param(params, "s", "s")
    x_ii = gaussmodel.x_param(params, "i", "i")
    x_si = gaussmodel.x_param(params, "s", "i")
    det = x_ss * x_ii - x_si**2
    if det <= 0:
        raise PhysicsDomainError(
            "gaussian_grid needs a positive-definite quadratic form; the "
            "anti-correlated ridge has no finite marginal width")
    # |f|^2 = exp(-2 nu^T A nu): covariance (4A)^-1
    var_s = x_ii / (4.0 * det)
    var_i = x_ss / (4.0 * det)
    r_s = n_sigmas * np.sqrt(var_s)
    r_i = n_sigmas * np.sqrt(var_i)
    if n is None:
        dt_cond = gaussmodel.temporal_width(params)
        chirp = min(abs(gaussmodel.chirp_param(params)), 0.999)
        dt_marginal = dt_cond / np.sqrt(1.0 - chirp**2)
        # resolve the coherence ridge AND give the conjugate time axis
        # room for the full marginal duration
        step_max = min(0.8 / dt_cond, np.pi / (3.2 * dt_marginal))
        n = 2 ** int(np.ceil(np.log2(max(2.0 * r_s / step_max, 128.0))))
        n = min(n, max_n)
    return FrequencyGrid.centered(center_signal, center_idler, r_s, r_i, n)


def _axis_support(mass, axis, keep=0.9975):
    """Minimal symmetric-about-center half-span containing ``keep`` of
    the marginal mass."""
    total = mass.sum()
    if total <= 0:
        return axis[-1] - axis[0]
    center = 0.5 * (axis[0] + axis[-1])
    r = np.abs(axis - center)
    order = np.argsort(r)
    cum = np.cumsum(mass[order])
    idx = int(np.searchsorted(cum, keep * total))
    idx = min(idx, axis.size - 1)
    return max(r[order][idx], (axis[1] - axis[0]))


def default_grid(crystal, pump, n=512, signal_polarization=None,
                 probe_points=161, keep=0.9975, pad=1.2):
    """Frequency grid sized to the joint spectrum's actual support.

    Starts each daughter axis at +-3*sqrt(2)*sigma around the degenerate
    frequency (comfortably covering the pump envelope), then grows any
    axis whose marginal |pmf*pef|^2 mass still touches the probe
    boundary, and finally tightens each axis to ``pad`` times the
    ``keep``-mass half-span.  Spans are clamped to the transparency
    window.  This resolves both pump-limited and phasematching-limited
    joint spectra, including the long curved strip of anti-correlated
    sources that a fixed pump-based span would clip.
    """
    sigma = pump.amplitude_sigma
    w0 = pump.center_frequency / 2.0
    lam_lo, lam_hi = transparency_window(crystal.material)
    w_d_lo = omega_from_wavelength(lam_hi)
    w_d_hi = omega_from_wavelength(lam_lo)
    # daughters in-window and the pump sum in-window (shared material)
    r_axis_max = 0.999 * min(w0 - w_d_lo, w_d_hi - w0)
    r_sum_max = 0.999 * min(2 * w0 - w_d_lo, w_d_hi - 2 * w0)
    r_max = min(r_axis_max, r_sum_max / 2.0)

    base = 3.0 * np.sqrt(2.0) * sigma
    if base > r_max:
        raise PhysicsDomainError("pump bandwidth does not fit the transparency window")
    r_s = r_i = base

    for _ in range(8):
        probe = FrequencyGrid.centered(w0, w0, r_s, r_i, probe_points)
        inten = np.abs(pmf(crystal, probe, signal_polarization)
                       * pef(pump, probe)) ** 2
        m_s = inten.sum(axis=1)
        m_i = inten.sum(axis=0)
        edge = max(2, probe_points // 32)
        total = inten.sum()
        grow_s = (m_s[:edge].sum() + m_s[-edge:].sum()) > 1e-3 * total
        grow_i = (m_i[:edge].sum() + m_i[-edge:].sum()) > 1e-3 * total
        if (not grow_s and not grow_i) or (r_s >= r_max and r_i >= r_max):
            break
        if grow_s:
            r_s = min(1.6 * r_s, r_max)
        if grow_i:
            r_i = min(1.6 * r_i, r_max)

    r_s = min(max(pad * _axis_support(m_s, probe.signal_axis, keep), sigma), r_max)
    r_i = min(max(pad * _axis_support(m_i, probe.idler_axis, keep), sigma), r_max)
    return FrequencyGrid.centered(w0, w0, r_s, r_i, n)
