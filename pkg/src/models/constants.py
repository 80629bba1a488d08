"""
Physical constants
Single source of the SI constants shared by every module
"""

import math
from dataclasses import dataclass

from .errors import NonPositiveParameter


@dataclass(frozen=True)
class PhysicalConstants:
    """Fixed CODATA values, not configurable"""

    epsilon0: float = 8.8541878128e-12  # F/m
    c: float = 2.99792458e8  # m/s


CONSTANTS = PhysicalConstants()

EPSILON0 = CONSTANTS.epsilon0
C_LIGHT = CONSTANTS.c
TWO_PI = 2.0 * math.pi


def omega_from_frequency(f_hz: float) -> float:
    """Convert a cyclic frequency in Hz to angular frequency in rad/s"""
    if not math.isfinite(f_hz) or f_hz <= 0:
        raise NonPositiveParameter("f_Hz", f_hz)
    return TWO_PI * f_hz
