"""Truncated Taylor arithmetic along trajectories, vectorized over samples.

A :class:`Jet` stores Taylor coefficients ``a_k = g^(k)(y0)/k!`` of a scalar
quantity along the profile coordinate, each coefficient being a numpy array
over the profile samples.  Composition with a potential uses the low-order
Faa di Bruno formulas, which is all the energy diagnostics need.
"""

from __future__ import annotations

import numpy as np


class Jet:
    __slots__ = ("c",)

    def __init__(self, coeffs):
        self.c = [np.asarray(ci, dtype=float) for ci in coeffs]

    @property
    def order(self):
        return len(self.c) - 1

    @classmethod
    def constant(cls, value, order):
        head = np.asarray(value, dtype=float)
        return cls([head] + [np.zeros_like(head) for _ in range(order)])

    def truncate(self, order):
        return Jet(self.c[: order + 1])

    def deriv(self):
        """Jet of the derivative, one order lower."""
        return Jet([(k + 1) * self.c[k + 1] for k in range(self.order)])

    def __add__(self, other):
        if not isinstance(other, Jet):
            out = [np.asarray(ci, dtype=float).copy() for ci in self.c]
            out[0] = out[0] + other
            return Jet(out)
        n = min(self.order, other.order)
        return Jet([self.c[k] + other.c[k] for k in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return Jet([-ci for ci in self.c])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Jet) else -np.asarray(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return Jet([ci * other for ci in self.c])
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = self.c[0] * other.c[k]
            for i in range(1, k + 1):
                acc = acc + self.c[i] * other.c[k - i]
            out.append(acc)
        return Jet(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            return self * (1.0 / other)
        n = min(self.order, other.order)
        out = [self.c[0] / other.c[0]]
        for k in range(1, n + 1):
            acc = self.c[k].copy() if hasattr(self.c[k], "copy") else self.c[k]
            for i in range(1, k + 1):
                acc = acc - other.c[i] * out[k - i]
            out.append(acc / other.c[0])
        return Jet(out)

    def __rtruediv__(self, other):
        return Jet.constant(np.broadcast_to(np.asarray(other, dtype=float), np.shape(self.c[0])), self.order) / self


def compose(pot_eval, vjet, order):
    """Jet of ``pot(V(y))`` given the jet of V; needs ``pot`` derivatives 0..order."""
    v = vjet.c
    g = [np.asarray(pot_eval(v[0], 0), dtype=float)]
    if order >= 1:
        d1 = np.asarray(pot_eval(v[0], 1), dtype=float)
        g.append(d1 * v[1])
    if order >= 2:
        d2 = np.asarray(pot_eval(v[0], 2), dtype=float)
        g.append(d1 * v[2] + 0.5 * d2 * v[1] ** 2)
    if order >= 3:
        d3 = np.asarray(pot_eval(v[0], 3), dtype=float)
        g.append(d1 * v[3] + d2 * v[1] * v[2] + d3 * v[1] ** 3 / 6.0)
    return Jet(g)
