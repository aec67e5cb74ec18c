"""Linearization and classification of the profile-system rest points.

Both the full profile system and the auxiliary (viscosity-free) system have
rest points at ``(V-, 0)`` and ``(V+, 0)``.  The full linearization solves
``lam^2 + (s mu / (kappa V*)) lam + f'(V*)/kappa = 0``; the auxiliary one
drops the damping term.  Complex eigenvalues are kept complex: focus
detection hinges on the imaginary part.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateError
from .fluid import eta
from .shock import ShockFamily, f_prime

#: |discriminant| below this is classified as a (borderline) node.
BORDERLINE_DISCRIMINANT = 1e-12

SADDLE = "saddle"
CENTRE = "centre"
UNSTABLE_NODE = "unstable_node"
UNSTABLE_FOCUS = "unstable_focus"
STABLE_NODE = "stable_node"
STABLE_FOCUS = "stable_focus"

OSCILLATORY = "oscillatory"
MONOTONE = "monotone"


@dataclass(frozen=True)
class EquilibriumReport:
    """Spectral data of one rest point for both profile systems."""

    which: str
    v_star: float
    f_prime: float
    discriminant: float
    full_eigs: tuple
    aux_eigs: tuple
    full_eigvecs: tuple
    aux_eigvecs: tuple
    class_full: str
    class_aux: str
    eta_value: float
    osc_threshold: float
    borderline: bool = False


def analyze_equilibrium(shock, model, which):
    """Linearize both profile systems at one end state and classify it.

    ``which`` is ``"minus"`` or ``"plus"``.  Raises :class:`DegenerateError`
    when ``|f'(V*)| < 1e-12`` (zero-amplitude limit).
    """
    if which not in ("minus", "plus"):
        raise ValueError("which must be 'minus' or 'plus'")
    v_star = shock.v_minus if which == "minus" else shock.v_plus
    fp = f_prime(shock, model, v_star)
    if abs(fp) < 1e-12:
        raise DegenerateError(f"f'(V_{which}) = {fp:.3e} is degenerate")

    s = shock.speed
    mu = model.mu(v_star)
    ka = model.kappa(v_star)
    damping = s * mu / (ka * v_star)  # linear coefficient of the full quadratic
    disc = damping**2 - 4.0 * fp / ka

    if disc >= 0:
        root = math.sqrt(disc)
        full = ((-damping - root) / 2.0 + 0j, (-damping + root) / 2.0 + 0j)
    else:
        root = math.sqrt(-disc)
        full = (
            complex(-damping / 2.0, -root / 2.0),
            complex(-damping / 2.0, root / 2.0),
        )

    aux_sq = -fp / ka
    if aux_sq >= 0:
        aux_root = math.sqrt(aux_sq)
        aux = (-aux_root + 0j, aux_root + 0j)
    else:
        aux_root = math.sqrt(-aux_sq)
        aux = (complex(0.0, -aux_root), complex(0.0, aux_root))

    borderline = False
    if fp < 0:
        class_full = SADDLE
        class_aux = SADDLE
    else:
        class_aux = CENTRE
        stable = full[0].real < 0  # both eigenvalues share the real part sign
        if abs(disc) < BORDERLINE_DISCRIMINANT:
            borderline = True
            class_full = STABLE_NODE if stable else UNSTABLE_NODE
        elif disc < 0:
            class_full = STABLE_FOCUS if stable else UNSTABLE_FOCUS
        else:
            class_full = STABLE_NODE if stable else UNSTABLE_NODE

    return EquilibriumReport(
        which=which,
        v_star=v_star,
        f_prime=fp,
        discriminant=disc,
        full_eigs=full,
        aux_eigs=aux,
        full_eigvecs=((1.0, full[0]), (1.0, full[1])),
        aux_eigvecs=((1.0, aux[0]), (1.0, aux[1])),
        class_full=class_full,
        class_aux=class_aux,
        eta_value=float(eta(model, v_star)),
        osc_threshold=2.0 * v_star * math.sqrt(abs(fp)) / abs(s),
        borderline=borderline,
    )


def oscillation_criterion(shock, model):
    """Classify the profile as ``"oscillatory"`` or ``"monotone"``.

    A backward 1-shock oscillates iff ``0 < eta(V-) < 2 V- sqrt(f'(V-)) / |s|``
    (the interior rest point is a focus); a forward 2-shock uses ``V+``.
    """
    which = "minus" if shock.family is ShockFamily.LAX1_BACKWARD else "plus"
    report = analyze_equilibrium(shock, model, which)
    if report.f_prime <= 0:
        raise ValueError("interior end state must have f'(V*) > 0")
    oscillatory = report.class_full in (UNSTABLE_FOCUS, STABLE_FOCUS)
    return OSCILLATORY if oscillatory else MONOTONE
