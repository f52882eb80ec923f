"""Exception hierarchy shared by all besseltau modules."""


class BesselTauError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(BesselTauError, ValueError):
    """A Gamma-type function was evaluated at (or too close to) a pole."""


class DegenerateParameterError(BesselTauError, ValueError):
    """Monodromy parameters sit on the excluded half-integer lattice."""


class CauchyCollisionError(BesselTauError, ValueError):
    """Two shifted momenta coincide, so a Cauchy denominator vanishes."""


class QuadratureConvergenceError(BesselTauError, RuntimeError):
    """Fourier modes of a sampled kernel did not decay by the Nyquist index."""


class ConfigError(BesselTauError, ValueError):
    """A run configuration failed validation."""
