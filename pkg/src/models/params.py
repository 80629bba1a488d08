"""
Domain types
Cavity, pump cavity, pump drive variants and circuit state
"""

import math
import numbers
from dataclasses import dataclass
from typing import Optional, Union

from .constants import EPSILON0
from .errors import BiasRegimeViolation, ConfigError, GapClosure, NonPositiveParameter

# E_dc/E_p below this is accepted but flagged
BIAS_RATIO_SOFT = 10.0


def require_positive(field: str, value: float) -> float:
    """Raise NonPositiveParameter unless value is finite and > 0"""
    if not isinstance(value, numbers.Real) or not math.isfinite(value) or value <= 0:
        raise NonPositiveParameter(field, value)
    return float(value)


def require_non_negative(field: str, value: float) -> float:
    """Raise NonPositiveParameter unless value is finite and >= 0"""
    if not isinstance(value, numbers.Real) or not math.isfinite(value) or value < 0:
        raise NonPositiveParameter(field, value, bound=">= 0")
    return float(value)


@dataclass(frozen=True)
class CavityParams:
    """Signal cavity in its LC-equivalent model (SI units)"""

    mass_m: float
    gap_d0: float
    area_A: float
    omega: float
    quality_Q: float

    def __post_init__(self):
        for name in ("mass_m", "gap_d0", "area_A", "omega", "quality_Q"):
            object.__setattr__(self, name, require_positive(name, getattr(self, name)))
        if self.quality_Q < 1:
            raise NonPositiveParameter("quality_Q", self.quality_Q, bound=">= 1")

    @property
    def capacitance(self) -> float:
        """Equilibrium capacitance C0 = eps0*A/d0"""
        return EPSILON0 * self.area_A / self.gap_d0

    @property
    def volume(self) -> float:
        """Equilibrium volume V0 = A*d0"""
        return self.area_A * self.gap_d0


@dataclass(frozen=True)
class PumpCavityParams:
    omega_p: float
    quality_Qp: float

    def __post_init__(self):
        object.__setattr__(self, "omega_p", require_positive("omega_p", self.omega_p))
        object.__setattr__(self, "quality_Qp", require_positive("quality_Qp", self.quality_Qp))


@dataclass(frozen=True)
class KinematicVelocity:
    """Prescribed plate velocity v_2w*cos(2*omega*t + phase)"""

    v_2w: float
    phase: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "v_2w", require_non_negative("v_2w", self.v_2w))
        if not math.isfinite(self.phase):
            raise ConfigError(f"phase must be finite (got {self.phase!r})")


@dataclass(frozen=True)
class NoBiasField:
    """Pump field E_p*sin(omega_p*t) at the first harmonic"""

    E_p: float
    omega_p: float

    def __post_init__(self):
        object.__setattr__(self, "E_p", require_non_negative("E_p", self.E_p))
        object.__setattr__(self, "omega_p", require_positive("omega_p", self.omega_p))


@dataclass(frozen=True)
class DcBiasField:
    """Pump field E_dc - E_p*sin(omega_p*t) at the second harmonic"""

    E_dc: float
    E_p: float
    omega_p: float

    def __post_init__(self):
        object.__setattr__(self, "E_dc", require_positive("E_dc", self.E_dc))
        object.__setattr__(self, "E_p", require_non_negative("E_p", self.E_p))
        object.__setattr__(self, "omega_p", require_positive("omega_p", self.omega_p))
        if self.E_dc <= self.E_p:
            raise BiasRegimeViolation(
                f"E_dc ({self.E_dc!r} V/m) must exceed E_p ({self.E_p!r} V/m)"
            )

    @property
    def bias_ratio(self) -> float:
        return math.inf if self.E_p == 0 else self.E_dc / self.E_p

    @property
    def validity_warning(self) -> Optional[str]:
        if self.bias_ratio < BIAS_RATIO_SOFT:
            return (
                f"E_dc/E_p = {self.bias_ratio:.3g} < {BIAS_RATIO_SOFT:g}: "
                "first-harmonic dominance is marginal"
            )
        return None


PumpDrive = Union[KinematicVelocity, NoBiasField, DcBiasField]


@dataclass(frozen=True)
class LcState:
    """Circuit and plate state at one instant

    plate_x is not checked against the gap on construction; simulate stops
    the run on closure and gap() raises for a closed state.
    """

    charge_q: float
    current_i: float
    plate_x: float
    plate_v: float
    time_t: float

    def __post_init__(self):
        require_non_negative("time_t", self.time_t)

    def gap(self, gap_d0: float) -> float:
        gap = gap_d0 + self.plate_x
        if not gap > 0:
            raise GapClosure(self.time_t, gap)
        return gap
