"""Profile ODEs, Hamiltonian machinery, and heteroclinic shooting.

The traveling-wave profile solves the planar system

    V' = Q,
    Q' = -(f(V) + s mu(V) Q / V + kappa'(V) Q^2 / 2) / kappa(V),

whose auxiliary (viscosity-free) version is Hamiltonian with energy
``H(V, Q) = F(V) + kappa(V) Q^2 / 2`` where ``F`` is the antiderivative of
the forcing ``f`` based at the saddle end state.  The heteroclinic is
computed by seeding on the saddle manifold and marching a fixed-step
integrator until the trajectory reaches the interior rest point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import quad

from ._jets import Jet, compose
from .errors import (
    BracketError,
    DomainError,
    EscapeError,
    QuadratureError,
    RangeError,
)
from .fluid import PowerLaw
from .shock import ShockFamily, f_profile

DEFAULT_INTEGRATOR = "rk4"
DEFAULT_STEP = 1e-3
DEFAULT_SEED_OFFSET = 1e-6
DEFAULT_TOL = 1e-4
DEFAULT_MAX_LEN = 1_000_000
DEFAULT_H_TOL = 1e-8


@dataclass(frozen=True)
class ProfileSolution:
    """Sampled heteroclinic with convergence and shape metadata."""

    y_grid: np.ndarray
    v_samples: np.ndarray
    q_samples: np.ndarray
    u_samples: np.ndarray
    h_samples: np.ndarray
    converged: bool
    terminal_distance: float
    monotone: bool
    sign_changes: int
    integrator: str
    step: float


# ---------------------------------------------------------------------------
# Right-hand sides
# ---------------------------------------------------------------------------

def rhs_full(shock, model, state):
    """Right-hand side of the full profile system at ``state = (v, q)``."""
    v, q = state
    f = f_profile(shock, model, v)
    ka = model.kappa(v)
    dq = -(f + shock.speed * model.mu(v) * q / v + 0.5 * model.kappa(v, 1) * q * q) / ka
    return (q, dq)


def rhs_aux(shock, model, state):
    """Right-hand side of the auxiliary system (viscous term removed)."""
    v, q = state
    f = f_profile(shock, model, v)
    ka = model.kappa(v)
    dq = -(f + 0.5 * model.kappa(v, 1) * q * q) / ka
    return (q, dq)


def _fast_eval(pot, order):
    """Scalar evaluation closure for one derivative order (hot loop use)."""
    if isinstance(pot, PowerLaw):
        fac = 1.0
        for k in range(order):
            fac *= pot.exponent - k
        coeff = pot.coefficient * fac
        expo = pot.exponent - order
        return lambda v: coeff * v**expo
    return lambda v: float(pot(v, order))


def _make_scalar_rhs(shock, model, viscous=True, sign=1.0):
    """Scalar right-hand side closure; ``sign=-1`` negates it (reversed dynamics)."""
    p0 = _fast_eval(model.pressure, 0)
    mu0 = _fast_eval(model.viscosity, 0)
    ka0 = _fast_eval(model.capillarity, 0)
    ka1 = _fast_eval(model.capillarity, 1)
    s = shock.speed
    s2 = s * s
    c_const = shock.c_const
    v_min = model.v_min

    if viscous:
        def rhs(v, q):
            if v < v_min:
                raise DomainError(f"trajectory crossed the validity floor v_min={v_min}")
            f = p0(v) + s2 * v - c_const
            return sign * q, -sign * (
                f + s * mu0(v) * q / v + 0.5 * ka1(v) * q * q
            ) / ka0(v)
    else:
        def rhs(v, q):
            if v < v_min:
                raise DomainError(f"trajectory crossed the validity floor v_min={v_min}")
            f = p0(v) + s2 * v - c_const
            return sign * q, -sign * (f + 0.5 * ka1(v) * q * q) / ka0(v)
    return rhs


# ---------------------------------------------------------------------------
# Energy machinery
# ---------------------------------------------------------------------------

def _forcing_scalar(shock, model):
    p0 = _fast_eval(model.pressure, 0)
    s2 = shock.speed**2
    c_const = shock.c_const
    return lambda v: p0(v) + s2 * v - c_const


@lru_cache(maxsize=64)
def _f_integral_fn(shock, model):
    """Vectorized ``F(v) = int_saddle^v f`` (closed form for power-law pressure)."""
    base = shock.saddle_volume
    s2 = shock.speed**2
    c_const = shock.c_const
    pot = model.pressure
    if isinstance(pot, PowerLaw):
        c, e = pot.coefficient, pot.exponent
        if e == -1.0:
            prim = lambda v: c * np.log(v)
        else:
            prim = lambda v: c * v ** (e + 1.0) / (e + 1.0)
        p_base = prim(base)

        def f_integral(v):
            v = np.asarray(v, dtype=float)
            return (
                prim(v) - p_base
                + 0.5 * s2 * (v * v - base * base)
                - c_const * (v - base)
            )

        return f_integral

    forcing = _forcing_scalar(shock, model)

    def f_integral_quad(v):
        scalars = np.atleast_1d(np.asarray(v, dtype=float))
        out = np.empty_like(scalars)
        for i, vi in enumerate(scalars):
            val, err = quad(forcing, base, vi, epsabs=1e-12, epsrel=1e-12, limit=200)
            if err > 1e-10:
                raise QuadratureError(
                    f"f-integral error estimate {err:.2e} exceeds tolerance at v={vi}"
                )
            out[i] = val
        return out if np.ndim(v) else float(out[0])

    return f_integral_quad


def f_integral(shock, model, v):
    """Antiderivative ``F(v)`` of the forcing, based at the saddle end state."""
    arr = np.asarray(v, dtype=float)
    if np.any(arr < model.v_min):
        raise DomainError(f"argument below validity floor v_min={model.v_min}")
    return _f_integral_fn(shock, model)(v)


def hamiltonian(shock, model, state):
    """Conserved energy ``H = F(v) + kappa(v) q^2 / 2`` of the auxiliary system."""
    v, q = state
    return f_integral(shock, model, v) + 0.5 * model.kappa(v) * np.asarray(q) ** 2


@lru_cache(maxsize=64)
def find_vbar(shock, model):
    """Locate the barrier volume where ``F`` returns to zero beyond the interior state.

    Scans outward from the interior end state until ``F`` changes sign, then
    bisects.  Raises :class:`BracketError` (with the scan trace) if no sign
    change appears before ten times the interior volume.
    """
    fint = _f_integral_fn(shock, model)
    start = shock.interior_volume
    limit = 10.0 * start
    v, f_v = start, float(fint(start))
    trace = [(v, f_v)]
    while v < limit and f_v < 0.0:
        v = min(v * 1.05, limit)
        f_v = float(fint(v))
        trace.append((v, f_v))
    if f_v < 0.0:
        raise BracketError("no sign change of F before 10x the interior volume", trace)
    if f_v == 0.0:
        return v

    lo, hi = trace[-2][0], v
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if fint(mid) < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-15 * hi:
            break
    vbar = 0.5 * (lo + hi)
    if abs(float(fint(vbar))) > 1e-10:
        raise BracketError(f"bisection stalled: |F({vbar})| > 1e-10", trace)
    return vbar


def homoclinic_loop(shock, model, v):
    """Upper and lower branches ``+-sqrt(-2 F(v) / kappa(v))`` of the zero level set.

    Defined for ``v`` between the saddle volume and the barrier volume; both
    branches vanish at the endpoints.
    """
    vbar = find_vbar(shock, model)
    lo = shock.saddle_volume
    arr = np.asarray(v, dtype=float)
    if np.any(arr < lo - 1e-9) or np.any(arr > vbar + 1e-9):
        raise RangeError(f"v outside the loop range [{lo}, {vbar}]")
    val = -2.0 * f_integral(shock, model, v) / model.kappa(v)
    q = np.sqrt(np.maximum(val, 0.0))
    return q, -q


# ---------------------------------------------------------------------------
# Fixed-step planar integrator
# ---------------------------------------------------------------------------

def _march(rhs, v0, q0, target_v, *, integrator, step, tol, max_len):
    if integrator not in ("euler", "rk4"):
        raise ValueError(f"unknown integrator {integrator!r}")
    h = step
    vs = [v0]
    qs = [q0]
    v, q = v0, q0
    tol2 = tol * tol
    converged = False
    if integrator == "euler":
        for _ in range(max_len):
            dv, dq = rhs(v, q)
            v += h * dv
            q += h * dq
            vs.append(v)
            qs.append(q)
            dvt = v - target_v
            if dvt * dvt + q * q <= tol2:
                converged = True
                break
    else:
        h2 = 0.5 * h
        h6 = h / 6.0
        for _ in range(max_len):
            k1v, k1q = rhs(v, q)
            k2v, k2q = rhs(v + h2 * k1v, q + h2 * k1q)
            k3v, k3q = rhs(v + h2 * k2v, q + h2 * k2q)
            k4v, k4q = rhs(v + h * k3v, q + h * k3q)
            v += h6 * (k1v + 2.0 * (k2v + k3v) + k4v)
            q += h6 * (k1q + 2.0 * (k2q + k3q) + k4q)
            vs.append(v)
            qs.append(q)
            dvt = v - target_v
            if dvt * dvt + q * q <= tol2:
                converged = True
                break
    terminal = math.hypot(v - target_v, q)
    return np.array(vs), np.array(qs), converged, terminal


def integrate_planar(rhs, seed, *, length, integrator="rk4", step=DEFAULT_STEP,
                     time_sign=1.0):
    """March a planar system over a fixed parameter span; returns ``(y, v, q)``.

    ``rhs`` maps ``(v, q)`` to the forward-time derivative; ``time_sign=-1``
    integrates the reversed dynamics (the right-hand side is negated, the
    step stays positive).
    """
    eff = rhs if time_sign > 0 else (lambda v, q, _r=rhs: tuple(-x for x in _r(v, q)))
    n = max(1, int(round(length / step)))
    v_arr, q_arr, _, _ = _march(
        eff, seed[0], seed[1], math.inf, integrator=integrator, step=step,
        tol=-1.0, max_len=n,
    )
    y = time_sign * step * np.arange(len(v_arr))
    if time_sign < 0:
        return y[::-1].copy(), v_arr[::-1].copy(), q_arr[::-1].copy()
    return y, v_arr, q_arr


def _count_sign_changes(q):
    signs = np.sign(q)
    signs = signs[signs != 0.0]
    if signs.size < 2:
        return 0
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def _saddle_seed(shock, model, seed_offset):
    from .equilibria import analyze_equilibrium

    saddle_which = "plus" if shock.family is ShockFamily.LAX1_BACKWARD else "minus"
    rep = analyze_equilibrium(shock, model, saddle_which)
    # reverse shooting leaves along the stable eigvec, forward along the unstable
    lam = rep.full_eigs[0].real if shock.family is ShockFamily.LAX1_BACKWARD \
        else rep.full_eigs[1].real
    direction = 1.0 if shock.interior_volume > shock.saddle_volume else -1.0
    v0 = shock.saddle_volume + direction * seed_offset
    q0 = direction * seed_offset * lam
    return v0, q0


def shoot_profile(shock, model, *, integrator=DEFAULT_INTEGRATOR, step=DEFAULT_STEP,
                  seed_offset=DEFAULT_SEED_OFFSET, tol=DEFAULT_TOL,
                  max_len=DEFAULT_MAX_LEN, h_tol=DEFAULT_H_TOL):
    """Compute the heteroclinic shock profile by saddle-manifold shooting.

    A backward 1-shock is seeded at ``(V+, 0) + seed_offset * (1, lam_s)``
    and integrated in decreasing y (reversed dynamics) until the state is
    within ``tol`` of ``(V-, 0)``; a forward 2-shock is seeded on the
    unstable manifold at ``(V-, 0)`` and integrated forward.  The velocity is
    reconstructed from the first integral ``U = -s V + A``.

    Raises :class:`EscapeError` when the sampled energy exceeds ``h_tol``
    (the trajectory left the invariant region) and :class:`DomainError` when
    the specific volume crosses the validity floor.
    """
    time_sign = -1.0 if shock.family is ShockFamily.LAX1_BACKWARD else 1.0
    rhs = _make_scalar_rhs(shock, model, viscous=True, sign=time_sign)
    v0, q0 = _saddle_seed(shock, model, seed_offset)
    v_arr, q_arr, converged, terminal = _march(
        rhs, v0, q0, shock.interior_volume,
        integrator=integrator, step=step, tol=tol, max_len=int(max_len),
    )
    n = len(v_arr)
    y = time_sign * step * np.arange(n)
    if time_sign < 0:
        y = y[::-1].copy()
        v_arr = v_arr[::-1].copy()
        q_arr = q_arr[::-1].copy()

    h_arr = np.asarray(
        f_integral(shock, model, v_arr) + 0.5 * model.kappa(v_arr) * q_arr**2
    )
    h_max = float(np.max(h_arr)) if n else 0.0
    if h_max > h_tol:
        raise EscapeError(
            f"trajectory left the invariant region: max H = {h_max:.3e} > {h_tol:.1e}"
        )

    u_arr = -shock.speed * v_arr + shock.a_const
    changes = _count_sign_changes(q_arr)
    return ProfileSolution(
        y_grid=y,
        v_samples=v_arr,
        q_samples=q_arr,
        u_samples=u_arr,
        h_samples=h_arr,
        converged=converged,
        terminal_distance=terminal,
        monotone=(changes == 0),
        sign_changes=changes,
        integrator=integrator,
        step=step,
    )


# ---------------------------------------------------------------------------
# Diagnostics
# ---------------------------------------------------------------------------

def dissipation_identity_residual(solution, shock, model):
    """Max residual of ``dH/dy = -s mu(V) Q^2 / V`` along the computed profile.

    ``dH/dy`` is estimated with the fourth-order centered five-point stencil
    on the sampled energy, so the residual converges at the integrator's
    order (capped at four).
    """
    h = solution.h_samples
    if len(h) < 5:
        return 0.0
    dy = solution.step
    dh = (-h[4:] + 8.0 * h[3:-1] - 8.0 * h[1:-3] + h[:-4]) / (12.0 * dy)
    v = solution.v_samples[2:-2]
    q = solution.q_samples[2:-2]
    target = -shock.speed * model.mu(v) * q**2 / v
    return float(np.max(np.abs(dh - target)))


def min_dissipation_rate(solution):
    """Minimum of the estimated ``dH/dy``; nonnegative (up to tolerance) for s < 0."""
    h = solution.h_samples
    if len(h) < 5:
        return 0.0
    dy = solution.step
    dh = (-h[4:] + 8.0 * h[3:-1] - 8.0 * h[1:-3] + h[:-4]) / (12.0 * dy)
    return float(np.min(dh))


def state_jet(shock, model, v, q, order=3):
    """Taylor jet of ``V`` along the profile coordinate at states ``(v, q)``.

    Coefficients beyond the first two come from substituting the profile ODE
    into itself, so no numerical differentiation is involved.
    """
    v = np.asarray(v, dtype=float)
    q = np.asarray(q, dtype=float)
    coeffs = [v, q]
    if order >= 2:
        g0 = np.asarray(rhs_full(shock, model, (v, q))[1])
        coeffs.append(0.5 * g0)
    if order >= 3:
        vj = Jet([v, q])
        qj = Jet([q, g0])
        g1 = _g_jet(shock, model, vj, qj, 1).c[1]
        coeffs.append(g1 / 6.0)
    if order > 3:
        raise ValueError("state_jet supports orders up to 3")
    return Jet(coeffs)


def _g_jet(shock, model, vjet, qjet, order):
    """Jet of the second component of the full right-hand side."""
    pj = compose(lambda x, k: model.p(x, k), vjet, order)
    muj = compose(lambda x, k: model.mu(x, k), vjet, order)
    kaj = compose(lambda x, k: model.kappa(x, k), vjet, order)
    dkaj = compose(lambda x, k: model.kappa(x, k + 1), vjet, order)
    fj = pj + shock.speed**2 * vjet - shock.c_const
    num = fj + shock.speed * muj * qjet / vjet + 0.5 * dkaj * qjet * qjet
    return -(num / kaj)


def profile_derivatives(shock, model, v, q):
    """Analytic ``(V', V'', V''')`` at profile states ``(v, q)``."""
    jet = state_jet(shock, model, v, q, order=3)
    return jet.c[1], 2.0 * jet.c[2], 6.0 * jet.c[3]


def small_amplitude_report(model, v_minus, epsilons, *, u_minus=0.0, **shoot_opts):
    """Shoot a family of weak shocks ``V+ = V- - eps`` and tabulate derivative sizes.

    Each row reports ``max|V'|``, ``max|V''| / max|V'|``, ``max|V'''| / max|V'|``
    and the monotonicity flag; log-log slopes against eps are fitted by the
    caller (see :func:`loglog_slope`).
    """
    from .shock import build_shock

    rows = []
    for eps in epsilons:
        sh = build_shock(model, v_minus, v_minus - eps, u_minus,
                         ShockFamily.LAX1_BACKWARD)
        sol = shoot_profile(sh, model, **shoot_opts)
        v1, v2, v3 = profile_derivatives(sh, model, sol.v_samples, sol.q_samples)
        max_v1 = float(np.max(np.abs(v1)))
        rows.append(
            {
                "epsilon": float(eps),
                "max_v1": max_v1,
                "ratio_v2_v1": float(np.max(np.abs(v2))) / max_v1,
                "ratio_v3_v1": float(np.max(np.abs(v3))) / max_v1,
                "monotone": sol.monotone,
                "converged": sol.converged,
                "sign_changes": sol.sign_changes,
            }
        )
    return rows


def loglog_slope(xs, ys):
    """Least-squares slope of log(ys) against log(xs)."""
    return float(np.polyfit(np.log(np.asarray(xs, dtype=float)),
                            np.log(np.asarray(ys, dtype=float)), 1)[0])


def write_profile_csv(solution, path, labels=("y", "V", "Q", "U", "H")):
    """Dump the profile as CSV ordered by increasing y, 17 significant digits."""
    cols = (
        solution.y_grid,
        solution.v_samples,
        solution.q_samples,
        solution.u_samples,
        solution.h_samples,
    )
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(labels) + "\n")
        for row in zip(*cols):
            fh.write(",".join(format(x, ".17g") for x in row) + "\n")
