"""
Error hierarchy
Every failure the library raises, grouped by the CLI exit code it maps to
"""


class ParampError(Exception):
    """Base class for all library errors"""

    exit_code = 1


class ValidationError(ParampError):
    """Inputs violate a declared invariant"""

    exit_code = 2


class NonPositiveParameter(ValidationError):
    """A field that must be positive (or non-negative) is not"""

    def __init__(self, field: str, value: float = None, bound: str = "> 0"):
        self.field = field
        self.value = value
        detail = f" (got {value!r})" if value is not None else ""
        super().__init__(f"{field} must be {bound}{detail}")


class FrequencyMismatch(ValidationError):
    """Drive harmonic inconsistent with the cavity resonance"""


class BiasRegimeViolation(ValidationError):
    """DC bias field not larger than the pump field amplitude"""


class ConfigError(ValidationError):
    """Malformed configuration or violated precondition"""


class PhysicsError(ParampError):
    """A simulation run hit a physically invalid state"""

    exit_code = 3


class GapClosure(PhysicsError):
    """Capacitor gap closed during integration"""

    def __init__(self, time_s: float, gap_m: float):
        self.time_s = time_s
        self.gap_m = gap_m
        super().__init__(f"capacitor gap closed at t={time_s:.6e} s (gap={gap_m:.6e} m)")


class DegenerateTrace(PhysicsError):
    """Trace energies are too small or non-finite to fit"""


class SearchError(ParampError):
    """A numeric search could not complete"""

    exit_code = 4


class NoSignChange(SearchError):
    """Bisection bracket does not straddle zero growth"""

    def __init__(self, rate_lo: float, rate_hi: float):
        self.rate_lo = rate_lo
        self.rate_hi = rate_hi
        super().__init__(
            f"growth rate does not change sign over the bracket "
            f"(rate_lo={rate_lo:.6e} 1/s, rate_hi={rate_hi:.6e} 1/s)"
        )
