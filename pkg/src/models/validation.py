"""
Validation of a cavity/drive pair
"""

import logging
from typing import Tuple

from .errors import ConfigError, FrequencyMismatch
from .params import CavityParams, DcBiasField, KinematicVelocity, NoBiasField, PumpDrive

FREQUENCY_RTOL = 1e-9

logger = logging.getLogger("paramp.validation")


def harmonic_matches(omega_p: float, target: float, rtol: float = FREQUENCY_RTOL) -> bool:
    return abs(omega_p - target) <= rtol * abs(target)


def validate(cavity: CavityParams, drive: PumpDrive) -> Tuple[CavityParams, PumpDrive]:
    """Return the pair unchanged if the drive harmonic fits the cavity resonance"""
    if not isinstance(cavity, CavityParams):
        raise ConfigError(f"expected CavityParams, got {type(cavity).__name__}")

    if isinstance(drive, NoBiasField):
        if not harmonic_matches(drive.omega_p, cavity.omega):
            raise FrequencyMismatch(
                f"no-bias pump must run at the first harmonic: omega_p={drive.omega_p!r} "
                f"rad/s, cavity omega={cavity.omega!r} rad/s"
            )
    elif isinstance(drive, DcBiasField):
        if not harmonic_matches(drive.omega_p, 2.0 * cavity.omega):
            raise FrequencyMismatch(
                f"DC-biased pump must run at the second harmonic: omega_p={drive.omega_p!r} "
                f"rad/s, expected {2.0 * cavity.omega!r} rad/s"
            )
        if drive.validity_warning:
            logger.warning(drive.validity_warning)
    elif not isinstance(drive, KinematicVelocity):
        raise ConfigError(f"unknown drive type {type(drive).__name__}")

    return cavity, drive
