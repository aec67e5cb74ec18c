"""Dispersion curves, quartic splitting, point condition, energy weights."""

import cmath
import math

import numpy as np
import pytest

from nskshock import (
    CenterRootError,
    FluidModel,
    PowerLaw,
    ShockFamily,
    SmallDenominatorError,
    build_shock,
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
    shoot_profile,
    write_spectrum_csv,
)
from nskshock.profile import ProfileSolution
from conftest import random_backward_states, random_forward_states

M_REFERENCE = -0.9557935247042133


def assert_same_roots(computed, expected, tol):
    """Multiset comparison robust to ordering of nearly-equal real parts."""
    pool = list(expected)
    for z in computed:
        dists = [abs(z - w) for w in pool]
        k = int(np.argmin(dists))
        assert dists[k] <= tol, f"{z} has no partner within {tol}"
        pool.pop(k)
    assert not pool


def test_dispersion_at_zero_frequency(gamma_shock, gamma_model):
    for which in ("minus", "plus"):
        l1, l2 = dispersion_roots(gamma_shock, gamma_model, which, 0.0)
        assert l1 == 0.0 and l2 == 0.0


def test_dispersion_roots_satisfy_relation(gamma_shock, gamma_model):
    for which in ("minus", "plus"):
        for xi in (0.5, -0.5, 1.7, 3.0):
            for lam in dispersion_roots(gamma_shock, gamma_model, which, xi):
                assert abs(dispersion_residual(gamma_shock, gamma_model, which, xi, lam)) <= 1e-10


def test_dispersion_closed_form_vs_quadratic_formula(gamma_shock, gamma_model):
    s = gamma_shock.speed
    for which, v in (("minus", 1.5), ("plus", 1.0)):
        mu = gamma_model.mu(v)
        ka = gamma_model.kappa(v)
        dp = gamma_model.p(v, 1)
        for xi in np.linspace(-3, 3, 41):
            b = xi**2 * mu / v - 2j * s * xi
            c = -(s**2 + dp) * xi**2 - 1j * s * mu / v * xi**3 + ka * xi**4
            root = cmath.sqrt(b * b - 4.0 * c)
            oracle = [(-b + root) / 2.0, (-b - root) / 2.0]
            mine = dispersion_roots(gamma_shock, gamma_model, which, xi)
            assert_same_roots(mine, oracle, 1e-10)


def test_negative_discriminant_real_parts(gamma_shock, gamma_model):
    # for this fluid delta_tilde < 0 at every nonzero frequency
    for which, v in (("minus", 1.5), ("plus", 1.0)):
        for xi in (0.3, 1.0, 2.5):
            assert delta_tilde(gamma_shock, gamma_model, which, xi) < 0
            l1, l2 = dispersion_roots(gamma_shock, gamma_model, which, xi)
            expected = -xi**2 * gamma_model.mu(v) / (2.0 * v)
            assert l1.real == pytest.approx(expected, rel=1e-12)
            assert l2.real == pytest.approx(expected, rel=1e-12)


def test_conjugate_symmetry(gamma_shock, gamma_model):
    for which in ("minus", "plus"):
        for xi in (0.25, 1.1, 2.9):
            fwd = dispersion_roots(gamma_shock, gamma_model, which, xi)
            bwd = dispersion_roots(gamma_shock, gamma_model, which, -xi)
            fwd_conj = sorted((z.conjugate() for z in fwd), key=lambda z: (z.real, z.imag))
            bwd_sorted = sorted(bwd, key=lambda z: (z.real, z.imag))
            for za, zb in zip(fwd_conj, bwd_sorted):
                assert abs(za - zb) <= 1e-12


def test_fredholm_borders_confinement(gamma_shock, gamma_model):
    report = fredholm_borders(gamma_shock, gamma_model, (-3.0, 3.0), 601)
    assert report.max_re <= 1e-12
    assert len(report.xi_grid) == 601
    mask = np.abs(report.xi_grid) >= 0.01
    for curve in report.curves.values():
        assert np.all(curve.real[mask] <= -1e-12 * report.xi_grid[mask] ** 2)
    # curves touch the origin exactly at xi = 0
    i0 = np.argmin(np.abs(report.xi_grid))
    mods = [np.abs(c) for c in report.curves.values()]
    for mod in mods:
        assert mod[i0] == 0.0
        assert np.argmin(mod) == i0


def test_spectrum_csv_schema(gamma_shock, gamma_model, tmp_path):
    report = fredholm_borders(gamma_shock, gamma_model, (-1.0, 1.0), 11)
    path = tmp_path / "spec.csv"
    write_spectrum_csv(report, path)
    lines = path.read_text().splitlines()
    assert lines[0] == (
        "xi,re_l1_minus,im_l1_minus,re_l2_minus,im_l2_minus,"
        "re_l1_plus,im_l1_plus,re_l2_plus,im_l2_plus"
    )
    assert len(lines) == 12
    row0 = lines[6].split(",")  # xi = 0 row
    assert float(row0[0]) == 0.0
    assert all(float(x) == 0.0 for x in row0[1:])
    write_spectrum_csv(report, tmp_path / "spec2.csv")
    assert path.read_bytes() == (tmp_path / "spec2.csv").read_bytes()


def test_quartic_coeffs_structure(gamma_shock, gamma_model):
    a4, a3, a2, a1, a0 = quartic_coeffs(gamma_shock, gamma_model, "plus", 0.0)
    assert a1 == 0.0 and a0 == 0.0
    s = gamma_shock.speed
    a4, a3, a2, a1, a0 = quartic_coeffs(gamma_shock, gamma_model, "plus", 10.0)
    assert a4 == 1.0
    assert a3 == pytest.approx(s * 1.2 / 10.0, rel=1e-13)
    assert a0 == pytest.approx(100.0 / 10.0, rel=1e-13)
    assert all(isinstance(a, float) for a in (a4, a3, a2, a1, a0))


def test_quartic_roots_residual(gamma_shock, gamma_model):
    for which in ("minus", "plus"):
        coeffs = quartic_coeffs(gamma_shock, gamma_model, which, 100.0)
        roots = quartic_roots(gamma_shock, gamma_model, which, 100.0)
        scale = max(abs(c) for c in coeffs)
        # cross-check against an independent polynomial solver
        assert_same_roots(roots, np.roots(coeffs), 1e-9)
        for th in roots:
            val = sum(c * th ** (4 - k) for k, c in enumerate(coeffs))
            assert abs(val) / scale <= 1e-9


def test_consistent_splitting_reference(gamma_shock, gamma_model):
    for which in ("minus", "plus"):
        counts = consistent_splitting(gamma_shock, gamma_model, which, 100.0)
        assert (counts.n_stable, counts.n_unstable, counts.n_center) == (2, 2, 0)


def test_splitting_and_descartes_sign_audit(gamma_model, const_model):
    rng = np.random.default_rng(23)
    for family in (ShockFamily.LAX1_BACKWARD, ShockFamily.LAX2_FORWARD):
        for _ in range(20):
            model = gamma_model if rng.uniform() < 0.5 else const_model
            if family is ShockFamily.LAX1_BACKWARD:
                vm, vp = random_backward_states(rng)
            else:
                vm, vp = random_forward_states(rng)
            sh = build_shock(model, vm, vp, rng.uniform(-0.5, 0.5), family)
            probe = 100.0 * (1.0 + abs(sh.speed))
            for which in ("minus", "plus"):
                counts = consistent_splitting(sh, model, which, probe)
                assert (counts.n_stable, counts.n_unstable, counts.n_center) == (2, 2, 0)
                a4, a3, a2, a1, a0 = quartic_coeffs(sh, model, which, probe)
                signs = tuple(np.sign([a4, a3, a2, a1, a0]))
                if family is ShockFamily.LAX1_BACKWARD:
                    assert signs == (1, -1, -1, 1, 1)
                else:
                    assert signs == (1, 1, -1, -1, 1)


def test_center_root_error_at_origin_probe(gamma_shock, gamma_model):
    # the quartic at lambda = 0 factors with a double root at zero
    with pytest.raises(CenterRootError):
        consistent_splitting(gamma_shock, gamma_model, "plus", 0.0)


def test_point_condition_reference(gamma_model):
    assert point_condition_m(gamma_model, 1.5) == pytest.approx(M_REFERENCE, rel=1e-12)
    assert point_condition_m(gamma_model, 1.5) < 0


def test_point_condition_constant_capillarity(const_model):
    # kappa' = 0 so M reduces to kappa * p'' > 0
    for v in (0.8, 1.0, 2.5):
        m = point_condition_m(const_model, v)
        assert m == pytest.approx(1.5 * const_model.p(v, 2), rel=1e-13)
        assert m > 0


def test_point_condition_power_law_identity():
    rng = np.random.default_rng(17)
    count = 0
    while count < 50:
        gamma = rng.uniform(1.0, 8.0)
        beta = rng.uniform(-6.0, 3.0)
        if abs(gamma - beta - 4.0) < 0.05:
            continue  # stay away from the sign boundary
        count += 1
        v_minus = rng.uniform(0.5, 3.0)
        model = FluidModel(
            pressure=PowerLaw(1.0, -gamma),
            viscosity=PowerLaw(1.0, 0.0),
            capillarity=PowerLaw(1.0, -beta - 5.0),
        )
        m = point_condition_m(model, v_minus)
        closed = (-gamma * (beta + 5.0) + gamma * (gamma + 1.0)) * v_minus ** (
            -gamma - beta - 7.0
        )
        assert m == pytest.approx(closed, rel=1e-10)
        assert math.copysign(1.0, m) == math.copysign(1.0, gamma - beta - 4.0)
        check = power_law_check(model)
        assert check["passes"] == (m > 0)


def test_power_law_check_none_for_callbacks(gamma_model):
    from nskshock import CallbackPotential

    model = FluidModel(
        gamma_model.pressure,
        gamma_model.viscosity,
        CallbackPotential((lambda v: 1.0,)),
    )
    assert power_law_check(model) is None


def _constant_solution(v_value, n=64):
    v = np.full(n, v_value)
    q = np.zeros(n)
    return ProfileSolution(
        y_grid=np.arange(n, dtype=float), v_samples=v, q_samples=q,
        u_samples=q, h_samples=q, converged=True, terminal_distance=0.0,
        monotone=True, sign_changes=0, integrator="rk4", step=1.0,
    )


def test_energy_diagnostics_constant_state(gamma_shock, gamma_model):
    diag = energy_diagnostics(_constant_solution(1.5), gamma_shock, gamma_model)
    assert np.allclose(diag.f1, -gamma_model.p(1.5, 1), rtol=1e-13)
    assert np.allclose(diag.f2, 0.0, atol=1e-15)
    assert np.allclose(diag.f3, 0.0, atol=1e-15)


def test_energy_diagnostics_positive_condition(const_model):
    # constant capillarity: M > 0, so f2 and f3 are positive and |V'|-pinched
    sh = build_shock(const_model, 1.06, 1.0)
    sol = shoot_profile(sh, const_model, step=1e-2)
    diag = energy_diagnostics(sol, sh, const_model)
    assert float(np.min(diag.f1)) > 0
    speed = np.abs(sol.q_samples)
    mask = speed > 1e-3 * speed.max()
    assert np.all(diag.f2[mask] > 0)
    assert np.all(diag.f3[mask] > 0)
    for arr in (diag.f2, diag.f3):
        ratio = arr[mask] / speed[mask]
        assert 0 < ratio.min() <= ratio.max() < np.inf


def test_energy_diagnostics_negative_condition(gamma_model):
    # the reference fluid violates the point condition, f3 dips negative
    sh = build_shock(gamma_model, 1.5, 1.44)
    sol = shoot_profile(sh, gamma_model, step=1e-2)
    diag = energy_diagnostics(sol, sh, gamma_model)
    assert float(np.min(diag.f1)) > 0
    assert float(np.min(diag.f3)) < 0


def test_energy_diagnostics_small_denominator(gamma_shock, gamma_model):
    n = 8
    sol = ProfileSolution(
        y_grid=np.arange(n, dtype=float),
        v_samples=np.full(n, 1.5),
        q_samples=np.full(n, 0.81),  # tuned so f1 crosses zero
        u_samples=np.zeros(n),
        h_samples=np.zeros(n),
        converged=True, terminal_distance=0.0, monotone=True,
        sign_changes=0, integrator="rk4", step=1.0,
    )
    with pytest.raises(SmallDenominatorError):
        energy_diagnostics(sol, gamma_shock, gamma_model)
