"""
Pump Drive Module
Converts a pump field in the left cavity into plate motion amplitudes and
computes the DC-bias threshold chain
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np

from ..analyzers.thresholds import gain_coefficient, stored_energy_to_power
from ..models.constants import C_LIGHT, EPSILON0
from ..models.errors import BiasRegimeViolation, ConfigError, FrequencyMismatch
from ..models.params import (
    BIAS_RATIO_SOFT,
    CavityParams,
    DcBiasField,
    KinematicVelocity,
    NoBiasField,
    PumpCavityParams,
    PumpDrive,
    require_non_negative,
    require_positive,
)
from ..models.validation import harmonic_matches

logger = logging.getLogger("paramp.drive")


@dataclass(frozen=True)
class DriveResponse:
    """Steady harmonic plate motion produced by a drive"""

    x_p: float  # m
    v_p: float  # m/s
    drive_omega: float  # rad/s
    validity_warning: Optional[str] = None


def no_bias_response(E_p: float, omega_p: float, m: float, area_A: float) -> DriveResponse:
    """Plate motion at 2*omega_p driven by the squared first-harmonic pump field"""
    require_non_negative("E_p", E_p)
    require_positive("omega_p", omega_p)
    require_positive("m", m)
    require_positive("area_A", area_A)
    x_p = EPSILON0 * E_p * E_p * area_A / (16.0 * m * omega_p * omega_p)
    return DriveResponse(x_p=x_p, v_p=2.0 * omega_p * x_p, drive_omega=2.0 * omega_p)


def dc_bias_response(
    E_dc: float, E_p: float, omega_p: float, m: float, area_A: float
) -> DriveResponse:
    """Plate motion at omega_p driven by the cross term 2*E_dc*E_p of the biased field"""
    require_positive("E_dc", E_dc)
    require_non_negative("E_p", E_p)
    require_positive("omega_p", omega_p)
    require_positive("m", m)
    require_positive("area_A", area_A)
    if E_dc <= E_p:
        raise BiasRegimeViolation(f"E_dc ({E_dc!r} V/m) must exceed E_p ({E_p!r} V/m)")

    warning = None
    if E_p > 0 and E_dc / E_p < BIAS_RATIO_SOFT:
        warning = f"E_dc/E_p = {E_dc / E_p:.3g} < {BIAS_RATIO_SOFT:g}: neglected E_p^2 term is not small"
        logger.warning(warning)

    x_p = EPSILON0 * E_dc * E_p * area_A / (m * omega_p * omega_p)
    return DriveResponse(x_p=x_p, v_p=omega_p * x_p, drive_omega=omega_p, validity_warning=warning)


def kinematic_response(v_2w: float, omega: float) -> DriveResponse:
    require_non_negative("v_2w", v_2w)
    require_positive("omega", omega)
    return DriveResponse(x_p=v_2w / (2.0 * omega), v_p=v_2w, drive_omega=2.0 * omega)


def drive_response(drive: PumpDrive, cavity: CavityParams) -> DriveResponse:
    """Dispatch on the drive variant"""
    if isinstance(drive, KinematicVelocity):
        return kinematic_response(drive.v_2w, cavity.omega)
    if isinstance(drive, NoBiasField):
        return no_bias_response(drive.E_p, drive.omega_p, cavity.mass_m, cavity.area_A)
    if isinstance(drive, DcBiasField):
        return dc_bias_response(drive.E_dc, drive.E_p, drive.omega_p, cavity.mass_m, cavity.area_A)
    raise ConfigError(f"unknown drive type {type(drive).__name__}")


def _require_second_harmonic(cavity: CavityParams, omega_p: float) -> None:
    if not harmonic_matches(omega_p, 2.0 * cavity.omega):
        raise FrequencyMismatch(
            f"DC-biased pump must run at 2*omega = {2.0 * cavity.omega!r} rad/s, "
            f"got omega_p = {omega_p!r} rad/s"
        )


def dc_bias_threshold_velocity(cavity: CavityParams, omega_p: float) -> float:
    """Plate velocity 2*d0*omega_p/Q_s at which the biased drive reaches threshold"""
    _require_second_harmonic(cavity, omega_p)
    return 2.0 * cavity.gap_d0 * omega_p / cavity.quality_Q


def dc_bias_threshold_field(cavity: CavityParams, E_dc: float, omega_p: float) -> float:
    """Threshold pump amplitude 2 m w_p^2 d0/(eps0 E_dc A Q_s) in V/m"""
    require_positive("E_dc", E_dc)
    _require_second_harmonic(cavity, omega_p)
    return (
        2.0 * cavity.mass_m * omega_p * omega_p * cavity.gap_d0
        / (EPSILON0 * E_dc * cavity.area_A * cavity.quality_Q)
    )


def dc_bias_threshold_power(cavity: CavityParams, pump: PumpCavityParams, E_dc: float) -> float:
    """Threshold power m^2 w_p^5 d0^3/(eps0 E_dc^2 A Q_s^2 Q_p) with the DC bias"""
    E_th = dc_bias_threshold_field(cavity, E_dc, pump.omega_p)
    # time-averaged stored pump energy, eps0*E_th^2*A*d0/4
    stored = 0.25 * EPSILON0 * E_th * E_th * cavity.area_A * cavity.gap_d0
    return stored_energy_to_power(stored, pump)


def dc_bias_threshold_power_simplified(
    m: float, omega_p: float, E_dc: float, area_A: float, Q: float
) -> float:
    """pi^3 m^2 w_p^2 c^3/(eps0 E_dc^2 A Q^3), valid for d0 = pi*c/omega_p"""
    require_positive("m", m)
    require_positive("omega_p", omega_p)
    require_positive("E_dc", E_dc)
    require_positive("area_A", area_A)
    require_positive("Q", Q)
    return (
        math.pi ** 3 * m * m * omega_p * omega_p * C_LIGHT ** 3
        / (EPSILON0 * E_dc * E_dc * area_A * Q ** 3)
    )


def dc_bias_power_ratio(m: float, E_dc: float, volume_V0: float) -> float:
    """(pi^2/32) m c^2/(eps0 E_dc^2 V0): biased over unbiased threshold power"""
    require_positive("m", m)
    require_positive("E_dc", E_dc)
    require_positive("volume_V0", volume_V0)
    return (math.pi ** 2 / 32.0) * m * C_LIGHT ** 2 / (EPSILON0 * E_dc * E_dc * volume_V0)


def pressure_via_charge_integration(E_final: float, n_steps: int, area_A: float = 1.0) -> float:
    """Pressure from the Coulomb-force integral eps0*A*int_0^E E' dE', divided by A"""
    if n_steps < 2:
        raise ConfigError(f"n_steps must be >= 2 (got {n_steps!r})")
    require_positive("area_A", area_A)
    E = np.linspace(0.0, E_final, int(n_steps))
    dF = EPSILON0 * area_A * E
    force = float(np.trapezoid(dF, E))
    return force / area_A


@dataclass(frozen=True)
class DcBiasReport:
    E_dc: float
    E_p_threshold: float
    v_p_threshold: float
    P_threshold: float
    ratio: float
    P_threshold_simplified: Optional[float] = None

    UNITS = {
        "E_dc": "V/m",
        "E_p_threshold": "V/m",
        "v_p_threshold": "m/s",
        "P_threshold": "W",
        "P_threshold_simplified": "W",
        "ratio": "1",
    }

    def scalars(self) -> Dict[str, float]:
        values = {name: getattr(self, name) for name in self.UNITS}
        return {k: v for k, v in values.items() if v is not None}

    def to_dict(self) -> Dict[str, Any]:
        return {k: {"value": v, "unit": self.UNITS[k]} for k, v in self.scalars().items()}


def build_dc_bias_report(
    cavity: CavityParams, drive: DcBiasField, quality_Qp: float
) -> DcBiasReport:
    """DC-bias threshold chain for a biased pump driving this cavity"""
    pump = PumpCavityParams(omega_p=drive.omega_p, quality_Qp=quality_Qp)
    E_th = dc_bias_threshold_field(cavity, drive.E_dc, drive.omega_p)
    v_th = dc_bias_threshold_velocity(cavity, drive.omega_p)

    simplified = None
    half_wavelength_gap = math.pi * C_LIGHT / drive.omega_p
    if harmonic_matches(cavity.gap_d0, half_wavelength_gap) and harmonic_matches(
        quality_Qp, cavity.quality_Q
    ):
        simplified = dc_bias_threshold_power_simplified(
            cavity.mass_m, drive.omega_p, drive.E_dc, cavity.area_A, cavity.quality_Q
        )

    report = DcBiasReport(
        E_dc=drive.E_dc,
        E_p_threshold=E_th,
        v_p_threshold=v_th,
        P_threshold=dc_bias_threshold_power(cavity, pump, drive.E_dc),
        ratio=dc_bias_power_ratio(cavity.mass_m, drive.E_dc, cavity.volume),
        P_threshold_simplified=simplified,
    )
    logger.debug(
        "DC-bias chain: E_p,th=%.6e V/m, P_th=%.6e W, kappa_th=%.6e 1/s",
        E_th, report.P_threshold, gain_coefficient(v_th, cavity.gap_d0),
    )
    return report
