"""Dispersion quantities for uniaxial SPDC crystals (BBO, KDP).

Refractive indices come from pinned published Sellmeier sets (tables
below); everything else — wavenumbers, group-delay derivatives, phase
mismatch, group-velocity-mismatch parameters and the pump-frequency
acceptance bandwidth — is derived from them.

Conventions:
  * collinear propagation at the fixed cut angle theta_pm; no walkoff;
  * both crystals are negative uniaxial, so the pump is extraordinary;
  * type I places both daughters on the ordinary axis, type II places
    one daughter on each axis (which daughter is called "signal" is a
    source-level choice, see ``spdc_modes``).
"""
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import NumericalError, PhysicsDomainError
from .units import C, omega_from_wavelength, wavelength_from_omega


class Material(Enum):
    BBO = "bbo"
    KDP = "kdp"


class Interaction(Enum):
    TYPE_I = "type-i"
    TYPE_II = "type-ii"


class Polarization(Enum):
    ORDINARY = "o"
    EXTRAORDINARY = "e"


class Role(Enum):
    PUMP = "pump"
    SIGNAL = "signal"
    IDLER = "idler"


@dataclass(frozen=True)
class SellmeierSet:
    """n^2(lam) = a + b/(lam^2 - c) + d*lam^2/(lam^2 - e), lam in um.

    With e = 0 the last term is taken as the plain d*lam^2 infrared
    tail.  ``window`` is the wavelength validity window in metres.
    """
    a: float
    b: float
    c: float
    d: float
    e: float
    window: tuple
    citation: str

    def index(self, lam_m):
        lam = np.asarray(lam_m) * 1e6
        l2 = lam * lam
        tail = self.d * l2 if self.e == 0.0 else self.d * l2 / (l2 - self.e)
        return np.sqrt(self.a + self.b / (l2 - self.c) + tail)


# Pinned coefficient sets.  BBO: K. Kato, IEEE J. Quantum Electron. 22,
# 1013 (1986).  The nominal fit range is 0.205-1.06 um; the window below
# extends into the near IR where the set is in common use (and where it
# reproduces the 757 -> 1514 nm type-II degenerate phase-matching angle).
# KDP: F. Zernike, J. Opt. Soc. Am. 54, 1215 (1964).
SELLMEIER = {
    (Material.BBO, Polarization.ORDINARY): SellmeierSet(
        a=2.7359, b=0.01878, c=0.01822, d=-0.01354, e=0.0,
        window=(0.205e-6, 2.5e-6),
        citation="Kato 1986, beta-BaB2O4, ordinary",
    ),
    (Material.BBO, Polarization.EXTRAORDINARY): SellmeierSet(
        a=2.3753, b=0.01224, c=0.01667, d=-0.01516, e=0.0,
        window=(0.205e-6, 2.5e-6),
        citation="Kato 1986, beta-BaB2O4, extraordinary",
    ),
    (Material.KDP, Polarization.ORDINARY): SellmeierSet(
        a=2.259276, b=0.01008956, c=0.012942625, d=13.00522, e=400.0,
        window=(0.21e-6, 1.5e-6),
        citation="Zernike 1964, KH2PO4, ordinary",
    ),
    (Material.KDP, Polarization.EXTRAORDINARY): SellmeierSet(
        a=2.132668, b=0.008637494, c=0.012281043, d=3.2279924, e=400.0,
        window=(0.21e-6, 1.5e-6),
        citation="Zernike 1964, KH2PO4, extraordinary",
    ),
}


@dataclass(frozen=True)
class CrystalSpec:
    """A cut uniaxial crystal: material, interaction type, cut angle
    theta_pm (rad) and length (m)."""
    material: Material
    interaction: Interaction
    cut_angle: float
    length: float

    def __post_init__(self):
        if not 0.0 < self.cut_angle < np.pi / 2:
            raise PhysicsDomainError(
                f"cut angle must lie in (0, pi/2), got {self.cut_angle}")
        if self.length <= 0.0:
            raise PhysicsDomainError(f"crystal length must be > 0, got {self.length}")


@dataclass(frozen=True)
class ModeRole:
    role: Role
    polarization: Polarization


@dataclass(frozen=True)
class GvmParams:
    """Group-velocity mismatch parameters tau = L*(k_p' - k_lambda'),
    in seconds, one per daughter mode."""
    tau_s: float
    tau_i: float


def transparency_window(material):
    """Wavelength validity window (m) of the pinned coefficient set."""
    return SELLMEIER[(material, Polarization.ORDINARY)].window


def _check_window(material, lam_m):
    lo, hi = transparency_window(material)
    lam = np.asarray(lam_m)
    if np.any(lam < lo) or np.any(lam > hi):
        bad = lam.flat[int(np.argmax((lam < lo) | (lam > hi)))]
        raise PhysicsDomainError(
            f"wavelength {bad:.4g} m outside the {material.value.upper()} "
            f"coefficient window [{lo:.3g}, {hi:.3g}] m")


def refractive_index(material, polarization, theta, lam_m):
    """Refractive index at vacuum wavelength lam_m (m).

    Ordinary rays ignore theta; extraordinary rays get the angle-tuned
    index 1/n_e(theta)^2 = cos^2(theta)/n_o^2 + sin^2(theta)/n_ebar^2
    where n_ebar is the principal extraordinary index.
    """
    _check_window(material, lam_m)
    n_o = SELLMEIER[(material, Polarization.ORDINARY)].index(lam_m)
    if polarization is Polarization.ORDINARY:
        return n_o
    n_e = SELLMEIER[(material, Polarization.EXTRAORDINARY)].index(lam_m)
    s, c = np.sin(theta), np.cos(theta)
    return 1.0 / np.sqrt((c / n_o) ** 2 + (s / n_e) ** 2)


def default_polarization(material, interaction, role):
    """Standard negative-uniaxial polarization assignment.

    Pump is always extraordinary.  Type I: both daughters ordinary.
    Type II: signal ordinary, idler extraordinary by default; sources
    that herald the extraordinary daughter swap this via ``spdc_modes``.
    """
    del material  # both supported materials are negative uniaxial
    if role is Role.PUMP:
        return Polarization.EXTRAORDINARY
    if interaction is Interaction.TYPE_I:
        return Polarization.ORDINARY
    return Polarization.ORDINARY if role is Role.SIGNAL else Polarization.EXTRAORDINARY


def spdc_modes(crystal, signal_polarization=None):
    """(pump, signal, idler) ModeRoles for a crystal.

    For type II, ``signal_polarization`` selects which daughter axis is
    the heralded signal; the idler takes the other axis.  For type I a
    non-ordinary request is rejected.
    """
    pump = ModeRole(Role.PUMP, Polarization.EXTRAORDINARY)
    if signal_polarization is None:
        signal_polarization = default_polarization(
            crystal.material, crystal.interaction, Role.SIGNAL)
    if crystal.interaction is Interaction.TYPE_I:
        if signal_polarization is not Polarization.ORDINARY:
            raise PhysicsDomainError("type-I daughters are both ordinary")
        idler_polarization = Polarization.ORDINARY
    else:
        idler_polarization = (Polarization.EXTRAORDINARY
                              if signal_polarization is Polarization.ORDINARY
                              else Polarization.ORDINARY)
    return (pump,
            ModeRole(Role.SIGNAL, signal_polarization),
            ModeRole(Role.IDLER, idler_polarization))


def wavenumber(crystal, mode, omega):
    """k(omega) = n(omega) * omega / c (rad/m) for the given mode."""
    lam = wavelength_from_omega(np.asarray(omega, dtype=float))
    n = refractive_index(crystal.material, mode.polarization, crystal.cut_angle, lam)
    return n * np.asarray(omega) / C


def dk_domega(k_fn, omega, step=1e11):
    """Central finite difference of an arbitrary k(omega) callable, s/m."""
    return (k_fn(omega + step) - k_fn(omega - step)) / (2.0 * step)


def group_delay_derivative(crystal, mode, omega, step=1e11):
    """k' = dk/domega (s/m) by central difference.

    Requires omega +- step to stay inside the transparency window; the
    window check inside ``wavenumber`` enforces the margin.
    """
    return dk_domega(lambda w: wavenumber(crystal, mode, w), omega, step)


def phase_mismatch(crystal, omega_s, omega_i, signal_polarization=None):
    """Collinear phase mismatch
    dk = k_p(omega_s + omega_i) - k_s(omega_s) - k_i(omega_i)  (rad/m)."""
    pump, sig, idl = spdc_modes(crystal, signal_polarization)
    omega_s = np.asarray(omega_s, dtype=float)
    omega_i = np.asarray(omega_i, dtype=float)
    return (wavenumber(crystal, pump, omega_s + omega_i)
            - wavenumber(crystal, sig, omega_s)
            - wavenumber(crystal, idl, omega_i))


def gvm_params(crystal, pump_center_omega, signal_polarization=None, step=1e11):
    """tau_lambda = L*(k_p' - k_lambda') for frequency-degenerate,
    collinear SPDC: pump k' at the pump center, daughter k' at half."""
    pump, sig, idl = spdc_modes(crystal, signal_polarization)
    kp = group_delay_derivative(crystal, pump, pump_center_omega, step)
    ks = group_delay_derivative(crystal, sig, pump_center_omega / 2.0, step)
    ki = group_delay_derivative(crystal, idl, pump_center_omega / 2.0, step)
    return GvmParams(tau_s=crystal.length * (kp - ks),
                     tau_i=crystal.length * (kp - ki))


def _bisect(f, lo, hi, iterations=100):
    flo = f(lo)
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if flo * fm <= 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def phase_matched_pump_frequency(crystal, pump_hint_omega=None,
                                 signal_polarization=None, scan_points=2001):
    """Pump angular frequency at which the crystal is collinearly
    degenerate phase matched (dk(omega/2, omega/2) = 0).

    Scans the window (or +-10% around ``pump_hint_omega``) for a sign
    change and refines it by bisection.
    """
    lo_m, hi_m = transparency_window(crystal.material)
    # pump and half-frequency daughters must both stay in the window
    w_lo = omega_from_wavelength(hi_m) * 2.0
    w_hi = omega_from_wavelength(lo_m)
    if pump_hint_omega is not None:
        w_lo = max(w_lo, 0.9 * pump_hint_omega)
        w_hi = min(w_hi, 1.1 * pump_hint_omega)
    if w_lo >= w_hi:
        raise PhysicsDomainError(
            "no pump frequency admits in-window degenerate daughters")

    def f(w):
        return phase_mismatch(crystal, w / 2.0, w / 2.0, signal_polarization)

    grid = np.linspace(w_lo * (1 + 1e-9), w_hi * (1 - 1e-9), scan_points)
    vals = f(grid)
    crossings = np.nonzero(np.diff(np.sign(vals)) != 0)[0]
    if crossings.size == 0:
        raise NumericalError(
            f"no degenerate phase-matching point in pump scan window "
            f"[{w_lo:.4g}, {w_hi:.4g}] rad/s")
    if pump_hint_omega is not None:
        i = crossings[np.argmin(np.abs(grid[crossings] - pump_hint_omega))]
    else:
        i = crossings[0]
    return _bisect(f, grid[i], grid[i + 1])


def acceptance_bandwidth(crystal, pump_hint_omega=None, signal_polarization=None):
    """FWHM (rad/s, in pump angular frequency) of the crystal acceptance
    |sinc(L*dk(omega/2, omega/2)/2)|^2 around the phase-matched center."""
    wc = phase_matched_pump_frequency(crystal, pump_hint_omega, signal_polarization)

    def intensity(w):
        x = crystal.length * phase_mismatch(
            crystal, w / 2.0, w / 2.0, signal_polarization) / 2.0
        return float(np.sinc(x / np.pi) ** 2)

    def half_crossing(direction):
        # expand geometrically until we fall below half max, then bisect
        step = abs(wc) * 1e-6
        prev = wc
        for _ in range(200):
            cand = wc + direction * step
            if intensity(cand) < 0.5:
                return _bisect(lambda w: intensity(w) - 0.5, prev, cand)
            prev = cand
            step *= 1.35
        raise NumericalError(
            f"no half-max crossing of the acceptance function within "
            f"[{wc - step:.4g}, {wc + step:.4g}] rad/s")

    hi = half_crossing(+1.0)
    lo = half_crossing(-1.0)
    return abs(hi - lo)
