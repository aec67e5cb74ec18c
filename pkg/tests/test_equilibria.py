"""Rest-point linearization, classification, and the oscillation criterion."""

import math

import numpy as np
import pytest

from nskshock import (
    MONOTONE,
    OSCILLATORY,
    DegenerateError,
    FluidModel,
    PowerLaw,
    ShockData,
    ShockFamily,
    analyze_equilibrium,
    build_shock,
    eta,
    f_prime,
    oscillation_criterion,
)
from conftest import random_backward_states

# frozen from a 40-digit evaluation of the closed-form spectra
DELTA_VP = 0.2878238328253909
LAM_S = -0.2087741143665096
LAM_U = 0.3277180410518068
AUX_LAM_U = 0.2615703419398277
DELTA_VM = -2.4886114151406344
OSC_THRESHOLD_VM = 1.9549006856098311


def char_residual(lam, damping, const):
    return abs(lam * lam + damping * lam + const)


def test_saddle_report(gamma_shock, gamma_model):
    rep = analyze_equilibrium(gamma_shock, gamma_model, "plus")
    assert rep.class_full == "saddle"
    assert rep.class_aux == "saddle"
    assert rep.discriminant == pytest.approx(DELTA_VP, rel=1e-12)
    assert rep.discriminant > 0
    lam_s, lam_u = rep.full_eigs
    assert lam_s.imag == 0 and lam_u.imag == 0
    assert lam_s.real == pytest.approx(LAM_S, rel=1e-12)
    assert lam_u.real == pytest.approx(LAM_U, rel=1e-12)
    assert rep.aux_eigs[1].real == pytest.approx(AUX_LAM_U, rel=1e-12)
    # interlacing of full and auxiliary growth rates
    assert lam_u.real > rep.aux_eigs[1].real > 0 > lam_s.real > rep.aux_eigs[0].real


def test_eigenvector_form(gamma_shock, gamma_model):
    rep = analyze_equilibrium(gamma_shock, gamma_model, "plus")
    for (one, lam), eig in zip(rep.full_eigvecs, rep.full_eigs):
        assert one == 1.0 and lam == eig
    for (one, lam), eig in zip(rep.aux_eigvecs, rep.aux_eigs):
        assert one == 1.0 and lam == eig


def test_focus_report(gamma_shock, gamma_model):
    rep = analyze_equilibrium(gamma_shock, gamma_model, "minus")
    assert rep.class_full == "unstable_focus"
    assert rep.class_aux == "centre"
    assert rep.discriminant < 0
    assert rep.discriminant == pytest.approx(DELTA_VM, rel=1e-12)
    assert rep.full_eigs[0].real > 0 and rep.full_eigs[1].imag != 0
    assert rep.aux_eigs[0].real == 0  # purely imaginary pair at a centre
    assert rep.osc_threshold == pytest.approx(OSC_THRESHOLD_VM, rel=1e-12)


def test_characteristic_residuals(gamma_shock, gamma_model):
    for which in ("minus", "plus"):
        rep = analyze_equilibrium(gamma_shock, gamma_model, which)
        v = rep.v_star
        damping = gamma_shock.speed * gamma_model.mu(v) / (gamma_model.kappa(v) * v)
        const = rep.f_prime / gamma_model.kappa(v)
        for lam in rep.full_eigs:
            assert char_residual(lam, damping, const) <= 1e-10
        for lam in rep.aux_eigs:
            assert char_residual(lam, 0.0, const) <= 1e-10


def test_degenerate_error(gamma_model):
    # hand-built data with s^2 = -p'(V+) makes f'(V+) vanish identically
    v_plus = 1.0
    s = -math.sqrt(-gamma_model.p(v_plus, 1))
    sh = ShockData(
        v_minus=1.5, v_plus=v_plus, u_minus=0.0, u_plus=0.0, speed=s,
        family=ShockFamily.LAX1_BACKWARD, a_const=0.0, b_const=0.0,
        c_const=s * s * v_plus + gamma_model.p(v_plus), amplitude=0.5,
    )
    with pytest.raises(DegenerateError):
        analyze_equilibrium(sh, gamma_model, "plus")


def test_oscillation_reference(gamma_shock, gamma_model):
    assert oscillation_criterion(gamma_shock, gamma_model) == OSCILLATORY
    # the inequality form agrees: 0 < eta(V-) < threshold
    assert 0 < eta(gamma_model, 1.5) < OSC_THRESHOLD_VM


def test_large_viscosity_turns_monotone(gamma_model):
    heavy = FluidModel(
        pressure=gamma_model.pressure,
        viscosity=PowerLaw(100.0, -2.0),
        capillarity=gamma_model.capillarity,
    )
    sh = build_shock(heavy, 1.5, 1.0)
    assert oscillation_criterion(sh, heavy) == MONOTONE
    assert eta(heavy, 1.5) > analyze_equilibrium(sh, heavy, "minus").osc_threshold


def test_small_amplitude_limit_is_monotone(gamma_model):
    sh = build_shock(gamma_model, 1.001, 1.0)
    assert oscillation_criterion(sh, gamma_model) == MONOTONE
    rep = analyze_equilibrium(sh, gamma_model, "minus")
    assert rep.class_full == "unstable_node"
    assert rep.discriminant > 0


def test_forward_family_mirror(gamma_model):
    sh = build_shock(gamma_model, 1.0, 1.5, 0.0, ShockFamily.LAX2_FORWARD)
    saddle = analyze_equilibrium(sh, gamma_model, "minus")
    interior = analyze_equilibrium(sh, gamma_model, "plus")
    assert saddle.class_full == "saddle"
    # forward shocks approach the interior point, so it attracts
    assert interior.class_full in ("stable_focus", "stable_node")
    assert oscillation_criterion(sh, gamma_model) == (
        OSCILLATORY if interior.class_full == "stable_focus" else MONOTONE
    )


def test_borderline_discriminant_flag(gamma_model):
    sh = build_shock(gamma_model, 1.5, 1.0)
    fp = f_prime(sh, gamma_model, 1.5)
    ka = gamma_model.kappa(1.5)
    # viscosity coefficient tuned so the discriminant vanishes at V-
    mu_star = 2.0 * 1.5 * math.sqrt(fp * ka) / abs(sh.speed)
    tuned = FluidModel(
        pressure=gamma_model.pressure,
        viscosity=PowerLaw(mu_star * 1.5**2, -2.0),
        capillarity=gamma_model.capillarity,
    )
    rep = analyze_equilibrium(sh, tuned, "minus")
    assert rep.borderline
    assert rep.class_full == "unstable_node"


def test_oscillation_equivalence_sweep(gamma_model):
    rng = np.random.default_rng(11)
    hits = {OSCILLATORY: 0, MONOTONE: 0}
    for _ in range(50):
        vm, vp = random_backward_states(rng)
        mu_coeff = rng.uniform(0.2, 8.0)
        model = FluidModel(
            pressure=PowerLaw(1.0, -rng.uniform(1.1, 3.0)),
            viscosity=PowerLaw(mu_coeff, -2.0),
            capillarity=PowerLaw(rng.uniform(0.5, 20.0), -rng.uniform(0.0, 7.0)),
        )
        sh = build_shock(model, vm, vp)
        rep = analyze_equilibrium(sh, model, "minus")
        verdict = oscillation_criterion(sh, model)
        hits[verdict] += 1
        assert (verdict == OSCILLATORY) == (rep.discriminant < -1e-12)
        if abs(rep.eta_value - rep.osc_threshold) > 1e-9:
            assert (verdict == OSCILLATORY) == (rep.eta_value < rep.osc_threshold)
    assert hits[OSCILLATORY] > 5 and hits[MONOTONE] > 5


def test_interlacing_on_random_backward_shocks(gamma_model, const_model):
    rng = np.random.default_rng(3)
    for _ in range(100):
        model = gamma_model if rng.uniform() < 0.5 else const_model
        vm, vp = random_backward_states(rng)
        sh = build_shock(model, vm, vp, rng.uniform(-1, 1))
        rep = analyze_equilibrium(sh, model, "plus")
        lam_s, lam_u = (z.real for z in rep.full_eigs)
        aux_s, aux_u = (z.real for z in rep.aux_eigs)
        assert lam_u - aux_u >= 1e-10
        assert aux_u >= 1e-10
        assert -lam_s >= 1e-10
        assert lam_s - aux_s >= 1e-10
