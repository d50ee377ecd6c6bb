"""Bound states of the hyperbolic coth-squared molecular well.

Closed-form spectrum via an improved centrifugal replacement, normalized
Jacobi-polynomial wavefunctions, and an independent Numerov shooting
oracle, with a CLI that reproduces the bundled benchmark table.
"""

from .errors import (
    BracketError,
    ConvergenceError,
    DomainError,
    HyperwellError,
    InsufficientSamplingError,
    StateLabelError,
    TailTooLargeError,
    UnboundStateError,
)
from .numerov import (
    NumericLevel,
    ShootingConfig,
    effective_potential,
    find_level,
    numerov_integrate,
    resolve_config,
)
from .potential import (
    MATCH_GAMMA,
    ApproxConstants,
    PotentialParams,
    approx_relative_error,
    centrifugal_approx,
    matching_slope_residual,
    matching_value_residual,
    potential_value,
    solve_approx_constants,
)
from .reference import ReferenceRow, StateLabel, parse_state_label, reference_rows
from .spectrum import (
    EnergyLevel,
    QuantumState,
    SpectralParams,
    compute_beta,
    compute_delta,
    compute_nu,
    energy_level,
    s_wave_energy,
    sigma1_energy,
    spectral_params,
)
from .wavefunctions import (
    JacobiParams,
    RadialSolution,
    count_nodes,
    jacobi_eval,
    normalization_analytic,
    normalization_audit,
    normalization_quadrature,
    overlap_integral,
    radial_wavefunction,
    sample_radial,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxConstants",
    "BracketError",
    "ConvergenceError",
    "DomainError",
    "EnergyLevel",
    "HyperwellError",
    "InsufficientSamplingError",
    "JacobiParams",
    "MATCH_GAMMA",
    "NumericLevel",
    "PotentialParams",
    "QuantumState",
    "RadialSolution",
    "ReferenceRow",
    "ShootingConfig",
    "SpectralParams",
    "StateLabel",
    "StateLabelError",
    "TailTooLargeError",
    "UnboundStateError",
    "approx_relative_error",
    "centrifugal_approx",
    "compute_beta",
    "compute_delta",
    "compute_nu",
    "count_nodes",
    "effective_potential",
    "energy_level",
    "find_level",
    "jacobi_eval",
    "matching_slope_residual",
    "matching_value_residual",
    "normalization_analytic",
    "normalization_audit",
    "normalization_quadrature",
    "numerov_integrate",
    "overlap_integral",
    "parse_state_label",
    "potential_value",
    "radial_wavefunction",
    "reference_rows",
    "resolve_config",
    "s_wave_energy",
    "sample_radial",
    "sigma1_energy",
    "solve_approx_constants",
    "spectral_params",
    "__version__",
]
