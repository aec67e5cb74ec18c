"""Thermodynamic potentials (pressure, viscosity, capillarity) and frame maps.

A fluid model bundles three positive potentials of the specific volume
(Lagrangian frame) or of the density (Eulerian frame), together with the
validity floor ``v_min`` below which no evaluation is allowed.  Power-law
potentials carry exact derivatives of every order; arbitrary potentials can
be supplied through callbacks for the value and as many derivatives as the
caller can provide.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError, FrameError, OrderError

LAGRANGIAN = "lagrangian"
EULERIAN = "eulerian"


@dataclass(frozen=True)
class PowerLaw:
    """Potential of the form ``coefficient * v**exponent``.

    Derivatives of every order are available in closed form:
    the k-th derivative is ``coefficient * e*(e-1)*...*(e-k+1) * v**(e-k)``.
    """

    coefficient: float
    exponent: float

    def __post_init__(self):
        if not self.coefficient > 0:
            raise ValueError("power-law coefficient must be positive")

    @property
    def max_order(self):
        return None  # unlimited

    def __call__(self, v, order=0):
        fac = 1.0
        for k in range(order):
            fac *= self.exponent - k
        return self.coefficient * fac * v ** (self.exponent - order)


@dataclass(frozen=True)
class CallbackPotential:
    """Potential given by callables ``(value, d1, d2, ...)``.

    Orders beyond ``len(derivatives) - 1`` raise :class:`OrderError`.
    """

    derivatives: tuple

    def __post_init__(self):
        if len(self.derivatives) == 0:
            raise ValueError("at least the value callback is required")

    @property
    def max_order(self):
        return len(self.derivatives) - 1

    def __call__(self, v, order=0):
        if order > self.max_order:
            raise OrderError(
                f"callback potential supplies orders 0..{self.max_order}, got {order}"
            )
        return self.derivatives[order](v)


@dataclass(frozen=True)
class _FrameMappedPotential:
    """Potential ``g(x) = base(1/x) * x**shift`` (chain rule up to order 3)."""

    base: object
    shift: int = 0

    @property
    def max_order(self):
        base_max = self.base.max_order
        return 3 if base_max is None else min(base_max, 3)

    def __call__(self, x, order=0):
        if order > self.max_order:
            raise OrderError(
                f"frame-mapped potential supplies orders 0..{self.max_order}, got {order}"
            )
        w = 1.0 / x
        b = [self.base(w, k) for k in range(order + 1)]
        # h(x) = base(1/x)
        h = [b[0]]
        if order >= 1:
            h.append(-b[1] * x ** -2.0)
        if order >= 2:
            h.append(b[2] * x ** -4.0 + 2.0 * b[1] * x ** -3.0)
        if order >= 3:
            h.append(-b[3] * x ** -6.0 - 6.0 * b[2] * x ** -5.0 - 6.0 * b[1] * x ** -4.0)
        m = float(self.shift)
        if order == 0:
            return h[0] * x ** m
        if order == 1:
            return h[1] * x ** m + m * h[0] * x ** (m - 1)
        if order == 2:
            return (
                h[2] * x ** m
                + 2 * m * h[1] * x ** (m - 1)
                + m * (m - 1) * h[0] * x ** (m - 2)
            )
        return (
            h[3] * x ** m
            + 3 * m * h[2] * x ** (m - 1)
            + 3 * m * (m - 1) * h[1] * x ** (m - 2)
            + m * (m - 1) * (m - 2) * h[0] * x ** (m - 3)
        )


@dataclass(frozen=True)
class FluidModel:
    """Pressure, viscosity and capillarity with their coordinate frame.

    Parameters
    ----------
    pressure, viscosity, capillarity : potential
        Objects callable as ``pot(v, order)``.  The library assumes the
        pressure supplies derivatives up to order 3 and the viscosity and
        capillarity up to order 2 (power laws supply every order).
    frame : {"lagrangian", "eulerian"}
    v_min : float
        Validity floor; evaluations below it raise :class:`DomainError`.
    """

    pressure: object
    viscosity: object
    capillarity: object
    frame: str = LAGRANGIAN
    v_min: float = 1e-3

    def __post_init__(self):
        if self.frame not in (LAGRANGIAN, EULERIAN):
            raise ValueError(f"unknown frame {self.frame!r}")
        if not self.v_min > 0:
            raise ValueError("v_min must be positive")

    def _potential(self, which):
        try:
            return {"p": self.pressure, "mu": self.viscosity, "kappa": self.capillarity}[which]
        except KeyError:
            raise ValueError(f"unknown potential {which!r}") from None

    def eval(self, which, order, v):
        """Evaluate a potential or one of its derivatives.

        ``which`` is one of ``"p"``, ``"mu"``, ``"kappa"``; ``order`` is the
        derivative order (0 for the value).  Raises :class:`DomainError` for
        ``v < v_min`` and :class:`OrderError` for unsupported orders.
        """
        if order < 0:
            raise OrderError("derivative order must be nonnegative")
        pot = self._potential(which)
        if pot.max_order is not None and order > pot.max_order:
            raise OrderError(
                f"potential {which!r} supplies orders 0..{pot.max_order}, got {order}"
            )
        arr = np.asarray(v, dtype=float)
        if np.any(arr < self.v_min):
            raise DomainError(f"argument below validity floor v_min={self.v_min}")
        return pot(v, order)

    def p(self, v, order=0):
        return self.eval("p", order, v)

    def mu(self, v, order=0):
        return self.eval("mu", order, v)

    def kappa(self, v, order=0):
        return self.eval("kappa", order, v)


def eta(model, v):
    """Diffusion-dispersion ratio ``mu(v) / sqrt(kappa(v))`` (strictly positive)."""
    return model.mu(v) / np.sqrt(model.kappa(v))


def _map_potential(pot, shift):
    if isinstance(pot, PowerLaw):
        return PowerLaw(pot.coefficient, -pot.exponent + shift)
    return _FrameMappedPotential(pot, shift)


def to_lagrangian(model):
    """Map an Eulerian model to Lagrangian coordinates.

    ``p(v) = p~(1/v)``, ``mu(v) = mu~(1/v)``, ``kappa(v) = kappa~(1/v) / v**5``.
    Power laws map exactly: ``c * rho**a`` becomes ``c * v**(-a)`` and the
    capillarity exponent beta becomes ``-beta - 5``.
    """
    if model.frame == LAGRANGIAN:
        raise FrameError("model is already Lagrangian")
    return replace(
        model,
        pressure=_map_potential(model.pressure, 0),
        viscosity=_map_potential(model.viscosity, 0),
        capillarity=_map_potential(model.capillarity, -5),
        frame=LAGRANGIAN,
    )


def to_eulerian(model):
    """Inverse of :func:`to_lagrangian`; round-trips power laws exactly."""
    if model.frame == EULERIAN:
        raise FrameError("model is already Eulerian")
    return replace(
        model,
        pressure=_map_potential(model.pressure, 0),
        viscosity=_map_potential(model.viscosity, 0),
        capillarity=_map_potential(model.capillarity, -5),
        frame=EULERIAN,
    )


def validate_interval(model, lo, hi, n=41):
    """Sample-check positivity of mu, kappa and the pressure conditions.

    Lagrangian models need ``p' < 0 < p''``; Eulerian models ``p' > 0, p'' > 0``.
    Raises ``ValueError`` on the first violated condition.
    """
    vs = np.linspace(lo, hi, n)
    if np.any(np.asarray(model.mu(vs)) <= 0):
        raise ValueError("viscosity must be positive on the working interval")
    if np.any(np.asarray(model.kappa(vs)) <= 0):
        raise ValueError("capillarity must be positive on the working interval")
    dp = np.asarray(model.p(vs, 1))
    d2p = np.asarray(model.p(vs, 2))
    if model.frame == LAGRANGIAN:
        if np.any(dp >= 0):
            raise ValueError("Lagrangian pressure must be strictly decreasing")
    else:
        if np.any(dp <= 0):
            raise ValueError("Eulerian pressure must be strictly increasing")
    if np.any(d2p <= 0):
        raise ValueError("pressure must be strictly convex")


# ---------------------------------------------------------------------------
# JSON schema
# ---------------------------------------------------------------------------

def _potential_to_dict(pot):
    if isinstance(pot, PowerLaw):
        return {"type": "power", "coeff": pot.coefficient, "exp": pot.exponent}
    raise ValueError("only power-law potentials have a JSON representation")


def _potential_from_dict(spec):
    if not isinstance(spec, dict) or spec.get("type") != "power":
        raise ValueError(f"unsupported potential spec: {spec!r}")
    return PowerLaw(float(spec["coeff"]), float(spec["exp"]))


def model_to_dict(model):
    """Serialize a power-law model to the scenario JSON schema."""
    return {
        "frame": model.frame,
        "pressure": _potential_to_dict(model.pressure),
        "viscosity": _potential_to_dict(model.viscosity),
        "capillarity": _potential_to_dict(model.capillarity),
        "v_min": model.v_min,
    }


def model_from_dict(spec):
    """Build a :class:`FluidModel` from its JSON representation."""
    frame = spec.get("frame", LAGRANGIAN)
    return FluidModel(
        pressure=_potential_from_dict(spec["pressure"]),
        viscosity=_potential_from_dict(spec["viscosity"]),
        capillarity=_potential_from_dict(spec["capillarity"]),
        frame=frame,
        v_min=float(spec.get("v_min", 1e-3)),
    )
