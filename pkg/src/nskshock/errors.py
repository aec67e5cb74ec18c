"""Exception hierarchy for the nskshock package."""


class NSKError(Exception):
    """Base class for all package errors."""


class DomainError(NSKError):
    """Argument left the admissible domain (v below the validity floor)."""


class OrderError(NSKError):
    """Requested derivative order is not supplied by the potential."""


class FrameError(NSKError):
    """Operation applied to a model in the wrong coordinate frame."""


class OrderingError(NSKError):
    """End-state ordering contradicts the requested shock family."""


class LaxError(NSKError):
    """Strict Lax entropy inequalities fail (or hold with negligible margin)."""

    def __init__(self, message, margins=None):
        super().__init__(message)
        self.margins = margins


class DegenerateError(NSKError):
    """Equilibrium is degenerate (zero-amplitude limit, f'(V*) ~ 0)."""


class QuadratureError(NSKError):
    """Adaptive quadrature failed to meet the requested tolerance."""


class BracketError(NSKError):
    """Root bracketing scan found no sign change."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace or []


class RangeError(NSKError):
    """Argument outside the curve's parameter range."""


class EscapeError(NSKError):
    """Trajectory left the invariant region (energy above tolerance)."""


class CenterRootError(NSKError):
    """Asymptotic quartic has roots on (or too close to) the imaginary axis."""

    def __init__(self, message, roots=None):
        super().__init__(message)
        self.roots = roots


class SmallDenominatorError(NSKError):
    """Energy-estimate weight function f1 dropped below its positivity floor."""


class ScenarioError(NSKError):
    """Scenario file is missing, malformed, or fails schema validation."""
