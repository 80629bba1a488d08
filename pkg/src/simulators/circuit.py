"""
LC circuit equivalent of the signal cavity
"""

import math
from dataclasses import dataclass

from ..models.params import CavityParams


@dataclass(frozen=True)
class LcCircuit:
    """Series LC(R) circuit whose capacitor gap follows the moving plate"""

    cavity: CavityParams
    inductance_L: float
    resistance_R: float
    lossless_flag: bool = False

    @property
    def capacitance_C0(self) -> float:
        return self.cavity.capacitance

    @property
    def omega(self) -> float:
        return self.cavity.omega

    @property
    def period(self) -> float:
        return 2.0 * math.pi / self.cavity.omega

    @property
    def loss_rate(self) -> float:
        """Energy decay rate R/L of the unloaded circuit"""
        return self.resistance_R / self.inductance_L


def build_circuit(cavity: CavityParams, lossless: bool = False) -> LcCircuit:
    """Map a cavity onto C0 = eps0*A/d0, L = 1/(w^2*C0) and R = w*L/Q"""
    c0 = cavity.capacitance
    inductance = 1.0 / (cavity.omega * cavity.omega * c0)
    resistance = 0.0 if lossless else cavity.omega * inductance / cavity.quality_Q
    return LcCircuit(
        cavity=cavity,
        inductance_L=inductance,
        resistance_R=resistance,
        lossless_flag=bool(lossless),
    )
