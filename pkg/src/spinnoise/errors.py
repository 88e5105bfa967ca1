"""Exception types shared across the package."""


class SpinNoiseError(Exception):
    """Base class for all package errors."""


class ConfigError(SpinNoiseError):
    """Invalid run configuration. Collects every violation at once."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid configuration:\n" + "\n".join(f"  - {v}" for v in self.violations))


class GeometryError(SpinNoiseError):
    """Ill-formed unit cell (overlapping or out-of-cell shapes)."""


class MaxIterationsExceeded(SpinNoiseError):
    """Iterative solve did not reach tolerance; carries the best residual."""

    def __init__(self, best_residual, iterations):
        self.best_residual = float(best_residual)
        self.iterations = int(iterations)
        super().__init__(
            f"solver hit iteration cap ({iterations}); best residual {best_residual:.3e}"
        )


class NumericalBreakdown(SpinNoiseError):
    """Non-finite values appeared inside a numerical kernel."""


class QuadratureFailure(SpinNoiseError):
    """Quadrature did not converge; carries the achieved error estimate."""

    def __init__(self, estimate, message=""):
        self.estimate = float(estimate)
        super().__init__(message or f"quadrature failure; achieved estimate {estimate:.3e}")


class NoCrossing(SpinNoiseError):
    """The dephasing function never reached the target level in range."""


class NonConvergence(SpinNoiseError):
    """Nonlinear fit failed to converge; carries the final residual."""

    def __init__(self, residual, message=""):
        self.residual = float(residual)
        super().__init__(message or f"fit did not converge; residual {residual:.3e}")


class IllConditioned(SpinNoiseError):
    """Fit Jacobian is rank deficient."""
