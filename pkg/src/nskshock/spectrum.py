"""Essential-spectrum dispersion curves, consistent splitting, point condition.

The linearization about the profile, frozen at either end state, yields a
quadratic dispersion relation in the temporal eigenvalue and a quartic
characteristic equation for spatial modes.  Both are handled here, together
with the scalar condition whose positivity certifies point spectral
stability of weak shocks and the pointwise weight functions entering the
spectral energy estimate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._jets import compose
from .errors import CenterRootError, SmallDenominatorError
from .fluid import PowerLaw
from .profile import state_jet

#: quartic roots with |Re theta| below this count as center modes
CENTER_DEAD_ZONE = 1e-9


@dataclass(frozen=True)
class SplittingCounts:
    n_stable: int
    n_unstable: int
    n_center: int


@dataclass
class SpectrumReport:
    """Dispersion curves over a frequency grid plus stability certificates."""

    xi_grid: np.ndarray
    curves: dict
    delta_tilde: dict
    max_re: float
    splitting: SplittingCounts | None = None
    m_value: float | None = None
    power_law_check: dict | None = None


def _endpoint_volume(shock, which):
    if which not in ("minus", "plus"):
        raise ValueError("which must be 'minus' or 'plus'")
    return shock.v_minus if which == "minus" else shock.v_plus


def delta_tilde(shock, model, which, xi):
    """Discriminant ``xi^4 mu^2/V^2 + 4 p' xi^2 - 4 kappa xi^4`` at one endpoint."""
    v = _endpoint_volume(shock, which)
    mu = model.mu(v)
    xi = np.asarray(xi, dtype=float)
    return xi**4 * mu**2 / v**2 + 4.0 * model.p(v, 1) * xi**2 - 4.0 * model.kappa(v) * xi**4


def dispersion_roots(shock, model, which, xi):
    """Both roots of the endpoint dispersion relation at frequency ``xi``.

    Closed form: ``-xi^2 mu/(2V) + i xi s +- sqrt(delta_tilde)/2`` with the
    principal square root; branch 1 carries the plus sign.
    """
    v = _endpoint_volume(shock, which)
    mu = model.mu(v)
    s = shock.speed
    xi_arr = np.asarray(xi, dtype=float)
    base = -xi_arr**2 * mu / (2.0 * v) + 1j * s * xi_arr
    root = np.sqrt(np.asarray(delta_tilde(shock, model, which, xi), dtype=complex))
    lam1 = base + 0.5 * root
    lam2 = base - 0.5 * root
    if np.ndim(xi) == 0:
        return complex(lam1), complex(lam2)
    return lam1, lam2


def dispersion_residual(shock, model, which, xi, lam):
    """Value of the dispersion polynomial at ``lam`` (zero for true roots)."""
    v = _endpoint_volume(shock, which)
    mu = model.mu(v)
    s = shock.speed
    return (
        lam**2
        + (xi**2 * mu / v - 2.0j * xi * s) * lam
        - (s**2 + model.p(v, 1)) * xi**2
        - 1j * s * mu / v * xi**3
        + model.kappa(v) * xi**4
    )


def fredholm_borders(shock, model, xi_range=(-3.0, 3.0), n=601):
    """Sample the dispersion curves for both endpoints on a uniform grid.

    The four curve families are the Fredholm borders of the linearized
    operator; their maximum real part certifies essential-spectrum stability.
    """
    lo, hi = xi_range
    if not (n >= 2 and lo < hi):
        raise ValueError("xi_range must be increasing and n >= 2")
    xi = np.linspace(lo, hi, n)
    curves = {}
    deltas = {}
    for which in ("minus", "plus"):
        l1, l2 = dispersion_roots(shock, model, which, xi)
        curves[f"l1_{which}"] = l1
        curves[f"l2_{which}"] = l2
        deltas[which] = np.asarray(delta_tilde(shock, model, which, xi))
    max_re = max(float(np.max(c.real)) for c in curves.values())
    return SpectrumReport(xi_grid=xi, curves=curves, delta_tilde=deltas, max_re=max_re)


def quartic_coeffs(shock, model, which, lam):
    """Coefficients ``(a4, a3, a2, a1, a0)`` of the asymptotic spatial quartic.

    For real ``lam`` all coefficients are real; ``a2`` equals minus the
    standard second-order coefficient ``alpha(lam)``.
    """
    v = _endpoint_volume(shock, which)
    mu = model.mu(v)
    ka = model.kappa(v)
    s = shock.speed
    alpha = lam * mu / (v * ka) - (s**2 + model.p(v, 1)) / ka
    return (1.0, s * mu / (v * ka), -alpha, -2.0 * lam * s / ka, lam**2 / ka)


def quartic_roots(shock, model, which, lam):
    """All four spatial roots via the companion-matrix eigenproblem."""
    a4, a3, a2, a1, a0 = quartic_coeffs(shock, model, which, lam)
    comp = np.zeros((4, 4), dtype=complex)
    comp[1, 0] = comp[2, 1] = comp[3, 2] = 1.0
    comp[0, 3] = -a0 / a4
    comp[1, 3] = -a1 / a4
    comp[2, 3] = -a2 / a4
    comp[3, 3] = -a3 / a4
    return np.linalg.eigvals(comp)


def consistent_splitting(shock, model, which, lambda_probe, dead_zone=CENTER_DEAD_ZONE):
    """Count stable/unstable/center spatial modes at a probe eigenvalue.

    For any probe to the right of the Fredholm borders the expected count is
    ``(2, 2, 0)``.  Raises :class:`CenterRootError` when a root falls inside
    the dead zone around the imaginary axis.
    """
    roots = quartic_roots(shock, model, which, lambda_probe)
    n_stable = int(np.count_nonzero(roots.real < -dead_zone))
    n_unstable = int(np.count_nonzero(roots.real > dead_zone))
    n_center = len(roots) - n_stable - n_unstable
    if n_center > 0:
        raise CenterRootError(
            f"{n_center} quartic root(s) within {dead_zone:.1e} of the imaginary axis",
            roots=roots,
        )
    return SplittingCounts(n_stable, n_unstable, n_center)


def point_condition_m(model, v_minus):
    """Scalar ``M = -kappa'(V-) p'(V-) + kappa(V-) p''(V-)``.

    Positive ``M`` certifies (for sufficiently weak shocks) stability of the
    point spectrum of the integrated linearized operator.
    """
    return -model.kappa(v_minus, 1) * model.p(v_minus, 1) + model.kappa(v_minus) * model.p(v_minus, 2)


def power_law_check(model, v_minus=None):
    """For power-law pressure/capillarity, the sign condition ``gamma > beta + 4``.

    ``gamma`` is the adiabatic exponent of ``p(v) = c v**(-gamma)`` and
    ``beta`` the Eulerian capillarity exponent of ``kappa(v) = c v**(-beta-5)``.
    Returns ``None`` when either potential is not a power law.
    """
    if not (isinstance(model.pressure, PowerLaw) and isinstance(model.capillarity, PowerLaw)):
        return None
    gamma = -model.pressure.exponent
    beta = -model.capillarity.exponent - 5.0
    return {"gamma": gamma, "beta": beta, "passes": bool(gamma > beta + 4.0)}


@dataclass(frozen=True)
class EnergyDiagnostics:
    """Pointwise weight functions of the spectral energy estimate."""

    f1: np.ndarray
    f2: np.ndarray
    f3: np.ndarray


def energy_diagnostics(solution, shock, model):
    """Sample the energy-estimate weights ``f1, f2, f3`` along a profile.

    ``f1 = -p'(V) + ((mu' V - mu)/V^2) U'`` must stay positive;
    ``f2 = (s/(2 f1) - (mu/(2 V f1))')'`` and ``f3 = (s/2) (kappa/f1)'`` are
    positive and pinched by ``|V'|`` for weak shocks when the point condition
    holds.  All derivatives are taken analytically along the profile.

    Raises :class:`SmallDenominatorError` when ``min f1 < 1e-8``.
    """
    s = shock.speed
    vj = state_jet(shock, model, solution.v_samples, solution.q_samples, order=3)
    qj = vj.deriv()  # order 2

    # w(V) = (mu'(V) V - mu(V)) / V^2, composed to order 2 (needs mu''')
    mu_j = compose(lambda x, k: model.mu(x, k), vj, 2)
    dmu_j = compose(lambda x, k: model.mu(x, k + 1), vj, 2)
    v2j = vj.truncate(2)
    w_j = (dmu_j * v2j - mu_j) / (v2j * v2j)

    dp_j = compose(lambda x, k: model.p(x, k + 1), vj, 2)
    f1_j = -dp_j - s * (w_j * qj)  # U' = -s V'

    f1 = f1_j.c[0]
    if float(np.min(f1)) < 1e-8:
        raise SmallDenominatorError(
            f"min f1 = {float(np.min(f1)):.3e} below the positivity floor"
        )

    b_j = mu_j / (2.0 * v2j * f1_j)           # order 2
    a_j = s / (2.0 * f1_j.truncate(1)) - b_j.deriv()   # order 1
    f2 = a_j.deriv().c[0]

    ka_j = compose(lambda x, k: model.kappa(x, k), vj, 1)
    f3 = (0.5 * s) * (ka_j / f1_j.truncate(1)).deriv().c[0]

    return EnergyDiagnostics(f1=f1, f2=f2, f3=f3)


def write_spectrum_csv(report, path):
    """Dump the four dispersion curves as CSV with 17 significant digits."""
    cols = [
        report.xi_grid,
        report.curves["l1_minus"].real,
        report.curves["l1_minus"].imag,
        report.curves["l2_minus"].real,
        report.curves["l2_minus"].imag,
        report.curves["l1_plus"].real,
        report.curves["l1_plus"].imag,
        report.curves["l2_plus"].real,
        report.curves["l2_plus"].imag,
    ]
    header = (
        "xi,re_l1_minus,im_l1_minus,re_l2_minus,im_l2_minus,"
        "re_l1_plus,im_l1_plus,re_l2_plus,im_l2_plus"
    )
    with open(path, "w", newline="\n") as fh:
        fh.write(header + "\n")
        for row in zip(*cols):
            fh.write(",".join(format(x, ".17g") for x in row) + "\n")
