"""Rankine-Hugoniot relations, Lax shock classification, profile forcing.

The jump relations for the underlying p-system determine the shock speed
from the two specific volumes; the downstream velocity is always derived
from the upstream one so that the jump residuals vanish to roundoff.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import FrameError, LaxError, OrderingError
from .fluid import LAGRANGIAN, validate_interval

#: Lax margins smaller than this count as failures of strict hyperbolicity.
LAX_MARGIN_FLOOR = 1e-10


class ShockFamily(str, Enum):
    LAX1_BACKWARD = "lax1"
    LAX2_FORWARD = "lax2"


@dataclass(frozen=True)
class ShockData:
    """End states, speed, integration constants and Lax certificate."""

    v_minus: float
    v_plus: float
    u_minus: float
    u_plus: float
    speed: float
    family: ShockFamily
    a_const: float
    b_const: float
    c_const: float
    amplitude: float
    lax_margins: tuple = ()

    @property
    def saddle_volume(self):
        """End state at which the profile system has its saddle point."""
        return self.v_plus if self.family is ShockFamily.LAX1_BACKWARD else self.v_minus

    @property
    def interior_volume(self):
        """End state enclosed by the homoclinic loop of the auxiliary system."""
        return self.v_minus if self.family is ShockFamily.LAX1_BACKWARD else self.v_plus


def char_speeds(model, v):
    """Characteristic speeds ``(-sqrt(-p'(v)), +sqrt(-p'(v)))`` of the p-system."""
    c = math.sqrt(-model.p(v, 1))
    return -c, c


def build_shock(model, v_minus, v_plus, u_minus=0.0, family=ShockFamily.LAX1_BACKWARD):
    """Solve the jump relations and certify the Lax entropy conditions.

    The speed is ``-sqrt((p(V-) - p(V+)) / (V+ - V-))`` for a backward
    1-shock and the positive root for a forward 2-shock; ``U+`` follows from
    the first jump relation.  Raises :class:`OrderingError` when the end
    states contradict the family and :class:`LaxError` when a strict Lax
    inequality fails or holds with margin below ``LAX_MARGIN_FLOOR``.
    """
    family = ShockFamily(family)
    if model.frame != LAGRANGIAN:
        raise FrameError("build_shock expects a Lagrangian model")
    if v_minus == v_plus:
        raise OrderingError("zero-amplitude shock: V- and V+ coincide")
    if family is ShockFamily.LAX1_BACKWARD and not v_minus > v_plus:
        raise OrderingError("a backward 1-shock requires V- > V+")
    if family is ShockFamily.LAX2_FORWARD and not v_plus > v_minus:
        raise OrderingError("a forward 2-shock requires V+ > V-")
    validate_interval(model, min(v_minus, v_plus), max(v_minus, v_plus))

    p_minus = model.p(v_minus)
    p_plus = model.p(v_plus)
    s_squared = (p_minus - p_plus) / (v_plus - v_minus)
    if not s_squared > 0:
        raise ValueError("pressure is not decreasing across the end states")
    speed = math.sqrt(s_squared)
    if family is ShockFamily.LAX1_BACKWARD:
        speed = -speed

    u_plus = u_minus - speed * (v_plus - v_minus)
    a_const = speed * v_plus + u_plus
    b_const = speed * u_plus - p_plus
    c_const = s_squared * v_plus + p_plus

    lam1_m, lam2_m = char_speeds(model, v_minus)
    lam1_p, lam2_p = char_speeds(model, v_plus)
    if family is ShockFamily.LAX1_BACKWARD:
        margins = (speed - lam1_p, lam1_m - speed, lam2_p - speed)
    else:
        margins = (speed - lam2_p, lam2_m - speed, speed - lam1_m)
    if min(margins) < LAX_MARGIN_FLOOR:
        raise LaxError(
            f"Lax inequalities fail or are below margin floor: margins={margins}",
            margins=margins,
        )

    return ShockData(
        v_minus=v_minus,
        v_plus=v_plus,
        u_minus=u_minus,
        u_plus=u_plus,
        speed=speed,
        family=family,
        a_const=a_const,
        b_const=b_const,
        c_const=c_const,
        amplitude=abs(v_minus - v_plus),
        lax_margins=margins,
    )


def f_profile(shock, model, v):
    """Profile forcing ``f(v) = p(v) + s^2 v - C``; vanishes at both end states."""
    return model.p(v) + shock.speed**2 * v - shock.c_const


def f_prime(shock, model, v):
    """Derivative ``f'(v) = p'(v) + s^2`` of the profile forcing."""
    return model.p(v, 1) + shock.speed**2


def rh_residuals(shock, model):
    """Absolute residuals of the two jump relations and the constants A, B, C."""
    s = shock.speed
    r1 = abs(s * (shock.v_plus - shock.v_minus) - (shock.u_minus - shock.u_plus))
    r2 = abs(
        s * (shock.u_plus - shock.u_minus)
        - (model.p(shock.v_plus) - model.p(shock.v_minus))
    )
    ra = abs((s * shock.v_plus + shock.u_plus) - (s * shock.v_minus + shock.u_minus))
    rb = abs(
        (s * shock.u_plus - model.p(shock.v_plus))
        - (s * shock.u_minus - model.p(shock.v_minus))
    )
    rc = abs(
        (s**2 * shock.v_plus + model.p(shock.v_plus))
        - (s**2 * shock.v_minus + model.p(shock.v_minus))
    )
    return {"rh1": r1, "rh2": r2, "a": ra, "b": rb, "c": rc}
