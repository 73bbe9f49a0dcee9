"""chronopair: joint time-frequency (chronocyclic) simulation of heralded
single photons from spontaneous parametric downconversion.

The pipeline: a crystal + pump define a joint spectral amplitude
(`twophoton`), tracing out the idler gives the heralded photon's density
matrix, purity, chronocyclic Wigner function and coherence functions
(`singlephoton`), and a closed-form Gaussian model (`gaussmodel`)
cross-validates the numerics.  `presets` holds the five catalogued
sources; `cli` runs scenarios and exports CSVs.
"""
from .dispersion import (
    CrystalSpec,
    GvmParams,
    Interaction,
    Material,
    ModeRole,
    Polarization,
    Role,
    acceptance_bandwidth,
    gvm_params,
    group_delay_derivative,
    phase_mismatch,
    phase_matched_pump_frequency,
    refractive_index,
    spdc_modes,
    wavenumber,
)
from .errors import ChronopairError, ContractError, NumericalError, PhysicsDomainError
from .gaussmodel import (
    AnalyticCwf,
    GaussParams,
    analytic_cwf,
    analytic_summary,
    chirp_param,
    duration_bandwidth_check,
    marginal_spectral_width,
    marginal_temporal_width,
    spectral_width,
    temporal_width,
    x_param,
)
from .presets import PRESETS, REFERENCE_CHIRP, SourcePreset, get_preset, preset_jsa
from .singlephoton import (
    CoherenceGrid,
    DensityMatrix,
    DiagonalView,
    SchmidtResult,
    WignerGrid,
    antidiagonal_width,
    cwf_moment_fit,
    density_from_wigner,
    from_diagonal_view,
    fwhm,
    purity_from_diagonal,
    purity_schmidt,
    purity_trace,
    reduce_density,
    spectral_coherence,
    spectral_intensity,
    temporal_coherence,
    temporal_coherence_from_wigner,
    temporal_intensity,
    to_diagonal_view,
    wigner_from_density,
)
from .twophoton import (
    FilterResult,
    FilterTarget,
    FrequencyGrid,
    JsaGrid,
    PumpSpec,
    apply_filter,
    build_jsa,
    default_grid,
    gaussian_grid,
    gaussian_jsa,
    pef,
    pmf,
    ridge_curvature,
)

__version__ = "0.1.0"
