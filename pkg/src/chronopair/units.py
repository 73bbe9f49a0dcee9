"""Unit helpers.

All internal frequencies are angular (rad/s); wavelengths only appear at
interfaces.  Bandwidths called "FWHM" are intensity full-widths at half
maximum unless stated otherwise.
"""
import re

import numpy as np

C = 299792458.0  # vacuum speed of light, m/s

# intensity-FWHM <-> Gaussian amplitude 1/e half-width, exp(-x^2/s^2) convention
FWHM_TO_SIGMA = 1.0 / np.sqrt(2.0 * np.log(2.0))


def omega_from_wavelength(lam):
    """Angular frequency (rad/s) of vacuum wavelength lam (m)."""
    return 2.0 * np.pi * C / lam


def wavelength_from_omega(omega):
    """Vacuum wavelength (m) of angular frequency omega (rad/s)."""
    return 2.0 * np.pi * C / omega


def omega_bandwidth_from_wavelength(dlam, lam):
    """Convert a small wavelength width dlam around lam to an angular
    frequency width (both FWHM-like linear measures)."""
    return 2.0 * np.pi * C * dlam / lam**2


def wavelength_bandwidth_from_omega(domega, lam):
    """Inverse of :func:`omega_bandwidth_from_wavelength`."""
    return domega * lam**2 / (2.0 * np.pi * C)


# CLI quantity suffixes, applied multiplicatively to the leading float.
# "THz" follows the source-table usage and means Trad/s.
_SUFFIXES = {
    "nm": 1e-9,
    "um": 1e-6,
    "mm": 1e-3,
    "m": 1.0,
    "fs": 1e-15,
    "ps": 1e-12,
    "s": 1.0,
    "fs2": 1e-30,
    "s2": 1.0,
    "thz": 1e12,
    "trad/s": 1e12,
    "rad/s": 1.0,
    "deg": np.pi / 180.0,
    "rad": 1.0,
}

_QUANTITY_RE = re.compile(r"^\s*([-+0-9.eE]+)\s*([a-zA-Z/0-9]*)\s*$")


def parse_quantity(text):
    """Parse '5nm', '2mm', '8e-26', '54.7THz', '29.2deg' ... into SI.

    A bare number is taken as already being in SI units.
    Raises ValueError on malformed input or unknown suffix.
    """
    m = _QUANTITY_RE.match(str(text))
    if not m:
        raise ValueError(f"cannot parse quantity {text!r}")
    value = float(m.group(1))
    suffix = m.group(2).lower()
    if not suffix:
        return value
    if suffix not in _SUFFIXES:
        raise ValueError(f"unknown unit suffix {suffix!r} in {text!r}")
    return value * _SUFFIXES[suffix]
