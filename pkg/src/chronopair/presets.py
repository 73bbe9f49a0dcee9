"""Catalog of the five reference SPDC sources, one per spectral
correlation archetype: anti-correlated ("negative"), positively
correlated ("positive"), and three near-factorable joint-spectrum
orientations ("horizontal", "vertical", "circular").

Each preset stores the crystal cut, the pump wavelength/bandwidth, and
which daughter polarization is heralded; pump angular bandwidth and
transform-limited duration are derived from the wavelength figures.
``nominal`` carries the catalogued reference numbers the derivations
are cross-checked against.

Notes on the catalog data:
  * The horizontal and vertical rows share one crystal and pump; they
    differ only in which daughter (ordinary or extraordinary) is
    heralded.  In KDP at this operating point the ordinary daughter is
    group-matched to the pump.
  * The circular row's pump bandwidth is 15 nm (sometimes misprinted
    as 15 mm); 15 nm at 757 nm reproduces its quoted 49.3 Trad/s and
    56.2 fs.
"""
from dataclasses import dataclass

import numpy as np

from .dispersion import (CrystalSpec, GvmParams, Interaction, Material,
                         Polarization, gvm_params)
from .gaussmodel import GaussParams
from .twophoton import PumpSpec, apply_filter, build_jsa, default_grid

# reference quadratic pump chirp used throughout the chirped scenarios
REFERENCE_CHIRP = 8e-26  # s^2


@dataclass(frozen=True)
class NominalValues:
    """Catalogued reference values: pump angular bandwidth (rad/s),
    transform-limited duration (s), crystal acceptance bandwidth (rad/s)."""
    pump_bandwidth: float
    pump_duration: float
    acceptance_bandwidth: float


@dataclass(frozen=True)
class SourcePreset:
    name: str
    crystal: CrystalSpec
    pump: PumpSpec
    heralded_polarization: Polarization
    nominal: NominalValues

    def gvm(self) -> GvmParams:
        return gvm_params(self.crystal, self.pump.center_frequency,
                          signal_polarization=self.heralded_polarization)

    def gauss_params(self, beta=None) -> GaussParams:
        g = self.gvm()
        return GaussParams(sigma=self.pump.amplitude_sigma,
                           beta=self.pump.chirp if beta is None else beta,
                           tau_s=g.tau_s, tau_i=g.tau_i)


def _preset(name, material, interaction, angle_deg, length, pump_nm, dlam_nm,
            heralded, nominal):
    return SourcePreset(
        name=name,
        crystal=CrystalSpec(material, interaction, np.radians(angle_deg), length),
        pump=PumpSpec.from_wavelength_fwhm(pump_nm * 1e-9, dlam_nm * 1e-9),
        heralded_polarization=heralded,
        nominal=nominal,
    )


PRESETS = {
    "horizontal": _preset(
        "horizontal", Material.KDP, Interaction.TYPE_II, 67.8, 5e-3, 415.0, 5.0,
        Polarization.ORDINARY,
        NominalValues(54.7e12, 50.7e-15, 15.6e12)),
    "vertical": _preset(
        "vertical", Material.KDP, Interaction.TYPE_II, 67.8, 5e-3, 415.0, 5.0,
        Polarization.EXTRAORDINARY,
        NominalValues(54.7e12, 50.7e-15, 15.6e12)),
    "positive": _preset(
        "positive", Material.BBO, Interaction.TYPE_II, 28.8, 10e-3, 757.0, 20.0,
        Polarization.ORDINARY,
        NominalValues(65.8e12, 42.1e-15, 208.2e12)),
    "negative": _preset(
        "negative", Material.BBO, Interaction.TYPE_I, 29.2, 2e-3, 400.0, 5.0,
        Polarization.ORDINARY,
        NominalValues(58.9e12, 47.1e-15, 28.3e12)),
    "circular": _preset(
        "circular", Material.BBO, Interaction.TYPE_II, 28.8, 2.293e-3, 757.0, 15.0,
        Polarization.ORDINARY,
        NominalValues(49.3e12, 56.2e-15, 328.9e12)),
}

FACTORABLE_PRESETS = ("horizontal", "vertical", "circular")


def get_preset(name):
    key = str(name).strip().lower()
    if key not in PRESETS:
        raise ValueError(
            f"unknown preset {name!r}; available: {', '.join(sorted(PRESETS))}")
    return PRESETS[key]


def preset_jsa(preset, beta=None, n=512, grid=None, filter_spec=None):
    """Build the (optionally chirped, optionally filtered) normalized JSA
    of a preset.

    filter_spec: None or (center_or_None, intensity_fwhm, FilterTarget);
    a None center defaults to the degenerate daughter frequency.
    Returns (JsaGrid, heralding_efficiency).
    """
    pump = preset.pump if beta is None else preset.pump.with_chirp(beta)
    if grid is None:
        grid = default_grid(preset.crystal, pump, n=n,
                            signal_polarization=preset.heralded_polarization)
    jsa = build_jsa(preset.crystal, pump, grid,
                    signal_polarization=preset.heralded_polarization)
    if filter_spec is None:
        return jsa, 1.0
    center, fwhm, which = filter_spec
    if center is None:
        center = pump.center_frequency / 2.0
    res = apply_filter(jsa, center, fwhm, which)
    return res.jsa, res.heralding_efficiency
