"""Shared fixtures: the gamma-law reference fluid and friends."""

import pytest

from nskshock import EULERIAN, FluidModel, PowerLaw, ShockFamily, build_shock


@pytest.fixture(scope="session")
def gamma_model():
    """Adiabatic gamma-law pressure with algebraic viscosity and capillarity:
    p = v^(-5/3), mu = 1.2 v^(-2), kappa = 10 v^(-7)."""
    return FluidModel(
        pressure=PowerLaw(1.0, -5.0 / 3.0),
        viscosity=PowerLaw(1.2, -2.0),
        capillarity=PowerLaw(10.0, -7.0),
    )


@pytest.fixture(scope="session")
def gamma_shock(gamma_model):
    """Backward 1-shock between V- = 1.5 and V+ = 1 at rest upstream."""
    return build_shock(gamma_model, 1.5, 1.0, 0.0, ShockFamily.LAX1_BACKWARD)


@pytest.fixture(scope="session")
def const_model():
    """Constant viscosity/capillarity with a gamma-law pressure."""
    return FluidModel(
        pressure=PowerLaw(1.0, -1.4),
        viscosity=PowerLaw(0.8, 0.0),
        capillarity=PowerLaw(1.5, 0.0),
    )


@pytest.fixture(scope="session")
def eulerian_gamma_model():
    """Eulerian twin of the gamma-law fluid: p~ = rho^(5/3), mu~ = 1.2 rho^2,
    kappa~ = 10 rho^2 (whose Lagrangian image is kappa = 10 v^(-7))."""
    return FluidModel(
        pressure=PowerLaw(1.0, 5.0 / 3.0),
        viscosity=PowerLaw(1.2, 2.0),
        capillarity=PowerLaw(10.0, 2.0),
        frame=EULERIAN,
    )


def random_backward_states(rng, lo=0.6, hi=3.0, min_amp=0.05, max_amp=1.2):
    """Admissible (v_minus, v_plus) pair for a backward 1-shock."""
    v_plus = rng.uniform(lo, hi)
    v_minus = v_plus + rng.uniform(min_amp, max_amp)
    return v_minus, v_plus


def random_forward_states(rng, lo=0.6, hi=3.0, min_amp=0.05, max_amp=1.2):
    v_minus = rng.uniform(lo, hi)
    v_plus = v_minus + rng.uniform(min_amp, max_amp)
    return v_minus, v_plus
