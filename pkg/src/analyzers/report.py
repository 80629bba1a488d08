"""
Threshold Report
Aggregates every analytic threshold quantity for one design
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional

from ..drivers.pump_drive import DcBiasReport, build_dc_bias_report
from ..models.params import CavityParams, DcBiasField, PumpCavityParams, PumpDrive
from .thresholds import (
    braginsky_threshold,
    gain_coefficient,
    ring_down,
    rough_velocity_ratio,
    threshold_energy,
    threshold_power_no_bias,
    threshold_velocity,
    walls_milburn_velocity_ratio,
)


@dataclass(frozen=True)
class ThresholdReport:
    kappa_at_threshold: float
    gamma: float
    tau: float
    v_threshold: float
    K_threshold: float
    U_threshold: float
    P_threshold_no_bias: float
    braginsky_U: float
    walls_milburn_vc: float
    rough_vc: float
    dc_bias: Optional[DcBiasReport] = None

    UNITS = {
        "kappa_at_threshold": "1/s",
        "gamma": "1/s",
        "tau": "s",
        "v_threshold": "m/s",
        "K_threshold": "J",
        "U_threshold": "J",
        "P_threshold_no_bias": "W",
        "braginsky_U": "J",
        "walls_milburn_vc": "1",
        "rough_vc": "1",
    }

    def scalars(self) -> Dict[str, float]:
        """Flat name -> value map; DC-bias entries are prefixed with 'dc_bias.'"""
        values = {name: getattr(self, name) for name in self.UNITS}
        if self.dc_bias is not None:
            for name, value in self.dc_bias.scalars().items():
                values[f"dc_bias.{name}"] = value
        return values

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready form, every value paired with its unit"""
        out = {name: {"value": getattr(self, name), "unit": unit} for name, unit in self.UNITS.items()}
        if self.dc_bias is not None:
            out["dc_bias"] = self.dc_bias.to_dict()
        return out


def build_threshold_report(
    cavity: CavityParams, pump: PumpCavityParams, drive: Optional[PumpDrive] = None
) -> ThresholdReport:
    v_th = threshold_velocity(cavity.omega, cavity.gap_d0, cavity.quality_Q)
    rd = ring_down(cavity.omega, cavity.quality_Q)
    energy = threshold_energy(cavity)

    dc_bias = None
    if isinstance(drive, DcBiasField):
        dc_bias = build_dc_bias_report(cavity, drive, pump.quality_Qp)

    return ThresholdReport(
        kappa_at_threshold=gain_coefficient(v_th, cavity.gap_d0),
        gamma=rd.gamma,
        tau=rd.tau,
        v_threshold=v_th,
        K_threshold=energy.K,
        U_threshold=energy.U,
        P_threshold_no_bias=threshold_power_no_bias(cavity, pump),
        braginsky_U=braginsky_threshold(
            cavity.mass_m, cavity.omega, 4.0 * cavity.gap_d0, cavity.quality_Q, cavity.quality_Q
        ),
        walls_milburn_vc=walls_milburn_velocity_ratio(cavity.quality_Q),
        rough_vc=rough_velocity_ratio(cavity.quality_Q),
        dc_bias=dc_bias,
    )
