"""Exception types shared across the package.

The CLI maps these onto exit codes (physics-domain errors -> 3,
numerical errors -> 4); library users catch them directly.
"""


class ChronopairError(Exception):
    """Base class for all package errors."""


class PhysicsDomainError(ChronopairError, ValueError):
    """Input is outside the physical domain a routine is valid for
    (wavelength outside a transparency window, indefinite quadratic
    form, filter missing the spectrum, ...)."""


class NumericalError(ChronopairError, RuntimeError):
    """A numerical consistency check failed (residues above threshold,
    SVD breakdown, no bracketing interval found, ...)."""


class ContractError(ChronopairError, ValueError):
    """A caller violated an interface contract, e.g. passed an
    unnormalized amplitude grid where a normalized one is required."""
