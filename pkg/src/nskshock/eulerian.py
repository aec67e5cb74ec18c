"""Shock construction and profile shooting in Eulerian (density) coordinates.

Mirrors the Lagrangian machinery for the density/momentum form of the
system.  The constant ``A = s R - J`` plays the role the Lagrangian speed
plays in the profile equations (it is negative for a compressive 1-shock),
and the conserved functional of the auxiliary system is

    H(R, Q) = -int_saddle^R fhat(z)/z^2 dz + kappa(R) Q^2 / (2 R),

whose weights follow from the same two-function ansatz used in the
Lagrangian frame (here ``g1 = 2 g2`` and ``g2 = kappa(R)/(2R)``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import quad

from .equilibria import MONOTONE, OSCILLATORY
from .errors import DomainError, EscapeError, FrameError, LaxError, OrderingError, QuadratureError
from .fluid import EULERIAN, PowerLaw, validate_interval
from .profile import (
    DEFAULT_H_TOL,
    DEFAULT_INTEGRATOR,
    DEFAULT_MAX_LEN,
    DEFAULT_SEED_OFFSET,
    DEFAULT_STEP,
    DEFAULT_TOL,
    ProfileSolution,
    _count_sign_changes,
    _fast_eval,
    _march,
    write_profile_csv,
)
from .shock import LAX_MARGIN_FLOOR, ShockFamily


@dataclass(frozen=True)
class EulerianShockData:
    """End densities and momenta, shock speed, and the mass-flux constant A."""

    r_minus: float
    r_plus: float
    j_minus: float
    j_plus: float
    speed: float
    family: ShockFamily
    a_const: float
    amplitude: float
    lax_margins: tuple = ()

    @property
    def saddle_density(self):
        return self.r_plus if self.family is ShockFamily.LAX1_BACKWARD else self.r_minus

    @property
    def interior_density(self):
        return self.r_minus if self.family is ShockFamily.LAX1_BACKWARD else self.r_plus

    @property
    def u_minus(self):
        return self.j_minus / self.r_minus

    @property
    def u_plus(self):
        return self.j_plus / self.r_plus


def build_shock_euler(model, r_minus, r_plus, u_minus=0.0,
                      family=ShockFamily.LAX1_BACKWARD):
    """Solve the Euler jump relations and certify the Lax conditions.

    ``A**2 = (p(R+) - p(R-)) / (1/R- - 1/R+)`` with ``A < 0`` for a 1-shock
    and ``A > 0`` for a 2-shock; the shock speed is ``u- + A/R-`` and the
    downstream momentum follows from ``A = s R+ - J+``.
    """
    family = ShockFamily(family)
    if model.frame != EULERIAN:
        raise FrameError("build_shock_euler expects an Eulerian model")
    if r_minus == r_plus:
        raise OrderingError("zero-amplitude shock: R- and R+ coincide")
    if family is ShockFamily.LAX1_BACKWARD and not r_plus > r_minus:
        raise OrderingError("a compressive 1-shock requires R+ > R-")
    if family is ShockFamily.LAX2_FORWARD and not r_minus > r_plus:
        raise OrderingError("a compressive 2-shock requires R- > R+")
    validate_interval(model, min(r_minus, r_plus), max(r_minus, r_plus))

    a_squared = (model.p(r_plus) - model.p(r_minus)) / (1.0 / r_minus - 1.0 / r_plus)
    if not a_squared > 0:
        raise ValueError("pressure is not increasing across the end states")
    a_const = math.sqrt(a_squared)
    if family is ShockFamily.LAX1_BACKWARD:
        a_const = -a_const

    speed = u_minus + a_const / r_minus
    j_minus = r_minus * u_minus
    j_plus = speed * r_plus - a_const
    u_plus = j_plus / r_plus

    c_minus = math.sqrt(model.p(r_minus, 1))
    c_plus = math.sqrt(model.p(r_plus, 1))
    if family is ShockFamily.LAX1_BACKWARD:
        margins = (
            speed - (u_plus - c_plus),
            (u_minus - c_minus) - speed,
            (u_plus + c_plus) - speed,
        )
    else:
        margins = (
            speed - (u_plus + c_plus),
            (u_minus + c_minus) - speed,
            speed - (u_minus - c_minus),
        )
    if min(margins) < LAX_MARGIN_FLOOR:
        raise LaxError(
            f"Lax inequalities fail or are below margin floor: margins={margins}",
            margins=margins,
        )

    return EulerianShockData(
        r_minus=r_minus,
        r_plus=r_plus,
        j_minus=j_minus,
        j_plus=j_plus,
        speed=speed,
        family=family,
        a_const=a_const,
        amplitude=abs(r_plus - r_minus),
        lax_margins=margins,
    )


def f_hat(es, model, r):
    """Forcing ``p(r) - p(R-) + A^2/r - A^2/R-``; vanishes at both end densities."""
    return (
        model.p(r) - model.p(es.r_minus)
        + es.a_const**2 / np.asarray(r, dtype=float)
        - es.a_const**2 / es.r_minus
    )


def f_hat_prime(es, model, r):
    """Derivative ``p'(r) - A^2 / r^2`` of the Eulerian forcing."""
    return model.p(r, 1) - es.a_const**2 / np.asarray(r, dtype=float) ** 2


def rhs_full_euler(es, model, state):
    """Right-hand side of the Eulerian profile system at ``state = (r, q)``."""
    r, q = state
    ka = model.kappa(r)
    dq = (
        f_hat(es, model, r) / (r * ka)
        - es.a_const * model.mu(r) * q / (r**3 * ka)
        - 0.5 * (model.kappa(r, 1) / ka - 1.0 / r) * q * q
    )
    return (q, dq)


def rhs_aux_euler(es, model, state):
    """Auxiliary Eulerian system (mass-flux damping term removed)."""
    r, q = state
    ka = model.kappa(r)
    dq = (
        f_hat(es, model, r) / (r * ka)
        - 0.5 * (model.kappa(r, 1) / ka - 1.0 / r) * q * q
    )
    return (q, dq)


def _make_scalar_rhs_euler(es, model, viscous=True, sign=1.0):
    p0 = _fast_eval(model.pressure, 0)
    mu0 = _fast_eval(model.viscosity, 0)
    ka0 = _fast_eval(model.capillarity, 0)
    ka1 = _fast_eval(model.capillarity, 1)
    a = es.a_const
    a2 = a * a
    offset = p0(es.r_minus) + a2 / es.r_minus
    rho_min = model.v_min

    if viscous:
        def rhs(r, q):
            if r < rho_min:
                raise DomainError(f"trajectory crossed the validity floor rho_min={rho_min}")
            ka = ka0(r)
            fh = p0(r) + a2 / r - offset
            return sign * q, sign * (
                fh / (r * ka)
                - a * mu0(r) * q / (r**3 * ka)
                - 0.5 * (ka1(r) / ka - 1.0 / r) * q * q
            )
    else:
        def rhs(r, q):
            if r < rho_min:
                raise DomainError(f"trajectory crossed the validity floor rho_min={rho_min}")
            ka = ka0(r)
            fh = p0(r) + a2 / r - offset
            return sign * q, sign * (
                fh / (r * ka) - 0.5 * (ka1(r) / ka - 1.0 / r) * q * q
            )
    return rhs


@lru_cache(maxsize=64)
def _fhat_integral_fn(es, model):
    """Vectorized ``int_saddle^r fhat(z)/z^2 dz`` (closed form for power-law pressure)."""
    base = es.saddle_density
    a2 = es.a_const**2
    k_const = float(model.p(es.r_minus) + a2 / es.r_minus)
    pot = model.pressure
    if isinstance(pot, PowerLaw):
        c, g = pot.coefficient, pot.exponent
        if g == 1.0:
            prim = lambda r: c * np.log(r) + k_const / r - 0.5 * a2 / r**2
        else:
            prim = lambda r: c * r ** (g - 1.0) / (g - 1.0) + k_const / r - 0.5 * a2 / r**2
        p_base = prim(base)

        def integral(r):
            return prim(np.asarray(r, dtype=float)) - p_base

        return integral

    p0 = _fast_eval(pot, 0)

    def integrand(z):
        return (p0(z) + a2 / z - k_const) / (z * z)

    def integral_quad(r):
        scalars = np.atleast_1d(np.asarray(r, dtype=float))
        out = np.empty_like(scalars)
        for i, ri in enumerate(scalars):
            val, err = quad(integrand, base, ri, epsabs=1e-12, epsrel=1e-12, limit=200)
            if err > 1e-10:
                raise QuadratureError(
                    f"fhat-integral error estimate {err:.2e} exceeds tolerance at r={ri}"
                )
            out[i] = val
        return out if np.ndim(r) else float(out[0])

    return integral_quad


def hamiltonian_euler(es, model, state):
    """Conserved energy of the auxiliary Eulerian system (zero at the saddle)."""
    r, q = state
    arr = np.asarray(r, dtype=float)
    if np.any(arr < model.v_min):
        raise DomainError(f"argument below validity floor rho_min={model.v_min}")
    return -_fhat_integral_fn(es, model)(r) + 0.5 * model.kappa(r) * np.asarray(q) ** 2 / arr


def _full_eigs_euler(es, model, r_star):
    """Eigenvalues of the full Eulerian linearization at ``(r_star, 0)``."""
    ka = model.kappa(r_star)
    damping = es.a_const * model.mu(r_star) / (r_star**3 * ka)
    fp = float(f_hat_prime(es, model, r_star))
    disc = damping**2 + 4.0 * fp / (r_star * ka)
    if disc >= 0:
        root = math.sqrt(disc)
        return ((-damping - root) / 2.0 + 0j, (-damping + root) / 2.0 + 0j), disc
    root = math.sqrt(-disc)
    return (complex(-damping / 2, -root / 2), complex(-damping / 2, root / 2)), disc


def oscillation_criterion_euler(es, model):
    """Oscillatory iff ``0 < eta(R*) < 2 sqrt(-R*^5 fhat'(R*)) / |A|`` at the interior state."""
    r_int = es.interior_density
    fp = float(f_hat_prime(es, model, r_int))
    if fp >= 0:
        raise ValueError("interior end state must have fhat'(R*) < 0")
    _, disc = _full_eigs_euler(es, model, r_int)
    return OSCILLATORY if disc < -1e-12 else MONOTONE


def oscillation_threshold_euler(es, model):
    """Right-hand side of the Eulerian oscillation inequality."""
    r_int = es.interior_density
    fp = float(f_hat_prime(es, model, r_int))
    return 2.0 * math.sqrt(-(r_int**5) * fp) / abs(es.a_const)


def shoot_profile_euler(es, model, *, integrator=DEFAULT_INTEGRATOR, step=DEFAULT_STEP,
                        seed_offset=DEFAULT_SEED_OFFSET, tol=DEFAULT_TOL,
                        max_len=DEFAULT_MAX_LEN, h_tol=DEFAULT_H_TOL):
    """Heteroclinic shooting for the Eulerian profile system.

    Same contract as the Lagrangian shooter: 1-shocks are seeded on the
    stable manifold of the saddle ``(R+, 0)`` and integrated in reversed
    dynamics toward ``(R-, 0)``; 2-shocks leave ``(R-, 0)`` forward along
    the unstable manifold.  The momentum is reconstructed from the first
    integral ``J = s R - A``.
    """
    time_sign = -1.0 if es.family is ShockFamily.LAX1_BACKWARD else 1.0
    rhs = _make_scalar_rhs_euler(es, model, viscous=True, sign=time_sign)

    eigs, _ = _full_eigs_euler(es, model, es.saddle_density)
    lam = eigs[0].real if es.family is ShockFamily.LAX1_BACKWARD else eigs[1].real
    direction = 1.0 if es.interior_density > es.saddle_density else -1.0
    r0 = es.saddle_density + direction * seed_offset
    q0 = direction * seed_offset * lam

    r_arr, q_arr, converged, terminal = _march(
        rhs, r0, q0, es.interior_density,
        integrator=integrator, step=step, tol=tol, max_len=int(max_len),
    )
    n = len(r_arr)
    y = time_sign * step * np.arange(n)
    if time_sign < 0:
        y = y[::-1].copy()
        r_arr = r_arr[::-1].copy()
        q_arr = q_arr[::-1].copy()

    h_arr = np.asarray(hamiltonian_euler(es, model, (r_arr, q_arr)))
    h_max = float(np.max(h_arr)) if n else 0.0
    if h_max > h_tol:
        raise EscapeError(
            f"trajectory left the invariant region: max H = {h_max:.3e} > {h_tol:.1e}"
        )

    j_arr = es.speed * r_arr - es.a_const
    changes = _count_sign_changes(q_arr)
    return ProfileSolution(
        y_grid=y,
        v_samples=r_arr,
        q_samples=q_arr,
        u_samples=j_arr,
        h_samples=h_arr,
        converged=converged,
        terminal_distance=terminal,
        monotone=(changes == 0),
        sign_changes=changes,
        integrator=integrator,
        step=step,
    )


def write_profile_csv_euler(solution, path):
    """CSV dump with Eulerian column names ``y, R, Q, J, H``."""
    write_profile_csv(solution, path, labels=("y", "R", "Q", "J", "H"))
