"""Viscous-dispersive shock profiles for Navier-Stokes-Korteweg fluids.

Library surface: fluid models with nonlinear viscosity/capillarity, Lax
shock construction, rest-point classification, heteroclinic profile
shooting, essential-spectrum dispersion curves with consistent-splitting
certificates, and the Eulerian-frame mirror of the profile machinery.
"""

from .equilibria import (
    MONOTONE,
    OSCILLATORY,
    EquilibriumReport,
    analyze_equilibrium,
    oscillation_criterion,
)
from .errors import (
    BracketError,
    CenterRootError,
    DegenerateError,
    DomainError,
    EscapeError,
    FrameError,
    LaxError,
    NSKError,
    OrderError,
    OrderingError,
    QuadratureError,
    RangeError,
    ScenarioError,
    SmallDenominatorError,
)
from .eulerian import (
    EulerianShockData,
    build_shock_euler,
    f_hat,
    f_hat_prime,
    hamiltonian_euler,
    oscillation_criterion_euler,
    oscillation_threshold_euler,
    rhs_aux_euler,
    rhs_full_euler,
    shoot_profile_euler,
    write_profile_csv_euler,
)
from .fluid import (
    EULERIAN,
    LAGRANGIAN,
    CallbackPotential,
    FluidModel,
    PowerLaw,
    eta,
    model_from_dict,
    model_to_dict,
    to_eulerian,
    to_lagrangian,
)
from .profile import (
    ProfileSolution,
    dissipation_identity_residual,
    f_integral,
    find_vbar,
    hamiltonian,
    homoclinic_loop,
    integrate_planar,
    loglog_slope,
    min_dissipation_rate,
    profile_derivatives,
    rhs_aux,
    rhs_full,
    shoot_profile,
    small_amplitude_report,
    write_profile_csv,
)
from .shock import (
    ShockData,
    ShockFamily,
    build_shock,
    char_speeds,
    f_prime,
    f_profile,
    rh_residuals,
)
from .spectrum import (
    EnergyDiagnostics,
    SpectrumReport,
    SplittingCounts,
    consistent_splitting,
    delta_tilde,
    dispersion_residual,
    dispersion_roots,
    energy_diagnostics,
    fredholm_borders,
    point_condition_m,
    power_law_check,
    quartic_coeffs,
    quartic_roots,
    write_spectrum_csv,
)

__version__ = "0.1.0"
