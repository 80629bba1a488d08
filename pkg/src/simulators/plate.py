"""
Plate motion models
The moving capacitor plate is either prescribed (kinematic drive) or a
free mass pushed by the pump-field pressure
"""

import math
from typing import Callable, Tuple

from ..analyzers.thresholds import pressure_on_plate
from ..models.errors import ConfigError
from ..models.params import CavityParams, DcBiasField, KinematicVelocity, NoBiasField, PumpDrive


class PrescribedPlate:
    """x(t) = (v_2w/2w) sin(2wt + phase), v(t) = v_2w cos(2wt + phase)"""

    prescribed = True

    def __init__(self, v_2w: float, omega: float, phase: float):
        self.v_2w = v_2w
        self.drive_omega = 2.0 * omega
        self.phase = phase
        self.x_p = v_2w / self.drive_omega

    def state(self, t: float) -> Tuple[float, float]:
        arg = self.drive_omega * t + self.phase
        return self.x_p * math.sin(arg), self.v_2w * math.cos(arg)

    def acceleration(self, t: float) -> float:
        return -self.drive_omega * self.v_2w * math.sin(self.drive_omega * t + self.phase)


class FreePlate:
    """Free mass with m*x'' = pressure_on_plate(E_pump(t))*A"""

    prescribed = False

    def __init__(self, mass_m: float, area_A: float, pump_field: Callable[[float], float]):
        self.force_per_mass = area_A / mass_m
        self.pump_field = pump_field

    def acceleration(self, t: float) -> float:
        return pressure_on_plate(self.pump_field(t)) * self.force_per_mass


def plate_for_drive(drive: PumpDrive, cavity: CavityParams, phase_offset: float = 0.0):
    if isinstance(drive, KinematicVelocity):
        return PrescribedPlate(drive.v_2w, cavity.omega, drive.phase + phase_offset)

    if isinstance(drive, NoBiasField):
        E_p, omega_p = drive.E_p, drive.omega_p

        def field(t: float) -> float:
            return E_p * math.sin(omega_p * t + phase_offset)

        return FreePlate(cavity.mass_m, cavity.area_A, field)

    if isinstance(drive, DcBiasField):
        E_dc, E_p, omega_p = drive.E_dc, drive.E_p, drive.omega_p

        def field(t: float) -> float:
            return E_dc - E_p * math.sin(omega_p * t + phase_offset)

        return FreePlate(cavity.mass_m, cavity.area_A, field)

    raise ConfigError(f"unknown drive type {type(drive).__name__}")
