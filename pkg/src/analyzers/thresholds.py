"""
Analytic thresholds
Closed-form energy, pressure, gain and threshold formulas for the
moving-plate parametric oscillator, plus the literature cross-checks
"""

import math
from typing import NamedTuple, Sequence

import numpy as np

from ..models.constants import C_LIGHT, EPSILON0
from ..models.params import (
    CavityParams,
    PumpCavityParams,
    require_non_negative,
    require_positive,
)


class RingDown(NamedTuple):
    gamma: float  # 1/s
    tau: float  # s


class ThresholdEnergy(NamedTuple):
    K: float  # time-averaged kinetic energy, J
    U: float  # total mechanical energy, J


def energy_density(E: float) -> float:
    """Electric energy density 0.5*eps0*E^2 in J/m^3"""
    return 0.5 * EPSILON0 * E * E


def pressure_on_plate(E: float) -> float:
    """Pressure on a conducting plate in Pa; numerically equal to the energy density"""
    return energy_density(E)


def maxwell_stress(E: Sequence[float], B: Sequence[float]) -> np.ndarray:
    """Maxwell stress tensor T_ij in Pa for field vectors E (V/m) and B (T)"""
    E = np.asarray(E, dtype=float)
    B = np.asarray(B, dtype=float)
    if E.shape != (3,) or B.shape != (3,):
        raise ValueError("E and B must be 3-vectors")
    c2 = C_LIGHT * C_LIGHT
    isotropic = 0.5 * (E @ E + c2 * (B @ B))
    return EPSILON0 * (np.outer(E, E) + c2 * np.outer(B, B) - isotropic * np.eye(3))


def time_averaged_energy_density(signal_E0: float) -> float:
    """<u_E> = eps0*E0^2/4 for a field E0*cos(wt)"""
    return 0.25 * EPSILON0 * signal_E0 * signal_E0


def averaged_pump_power(signal_E0: float, area_A: float, v_2w: float) -> float:
    """Time-averaged power (1/8)*eps0*E0^2*A*v_2w delivered by the synchronous drive"""
    require_non_negative("signal_E0", signal_E0)
    require_non_negative("area_A", area_A)
    require_non_negative("v_2w", v_2w)
    return 0.125 * EPSILON0 * signal_E0 * signal_E0 * area_A * v_2w


def gain_coefficient(v_2w: float, gap_d0: float) -> float:
    """Exponential energy gain coefficient kappa = v_2w/(4*d0) in 1/s"""
    require_positive("gap_d0", gap_d0)
    require_non_negative("v_2w", v_2w)
    return v_2w / (4.0 * gap_d0)


def ring_down(omega: float, Q: float) -> RingDown:
    require_positive("omega", omega)
    require_positive("Q", Q)
    gamma = omega / Q
    return RingDown(gamma=gamma, tau=1.0 / gamma)


def threshold_velocity(omega: float, gap_d0: float, Q: float) -> float:
    """Minimum plate velocity amplitude 4*omega*d0/Q at which gain equals loss"""
    require_positive("omega", omega)
    require_positive("gap_d0", gap_d0)
    require_positive("Q", Q)
    return 4.0 * omega * gap_d0 / Q


def threshold_energy(cavity: CavityParams) -> ThresholdEnergy:
    """Threshold kinetic energy K = 4 m w^2 d0^2/Q^2 and total U = 2K"""
    v_th = threshold_velocity(cavity.omega, cavity.gap_d0, cavity.quality_Q)
    K = 0.25 * cavity.mass_m * v_th * v_th
    return ThresholdEnergy(K=K, U=2.0 * K)


def braginsky_threshold(m: float, omega_s: float, L: float, Q_i: float, Q_s: float) -> float:
    """Radiation-pressure parametric instability threshold energy in J"""
    require_positive("m", m)
    require_positive("omega_s", omega_s)
    require_non_negative("L", L)
    require_positive("Q_i", Q_i)
    require_positive("Q_s", Q_s)
    return 0.5 * m * omega_s * omega_s * L * L / (Q_i * Q_s)


def mirror_velocity(eps: float, omega: float) -> float:
    """Velocity amplitude eps*omega of a sinusoidally displaced mirror"""
    require_non_negative("eps", eps)
    require_positive("omega", omega)
    return eps * omega


def walls_milburn_velocity_ratio(Q: float) -> float:
    """Threshold v_mirror/c = 1/Q of the squeezing literature"""
    require_positive("Q", Q)
    return 1.0 / Q


def rough_velocity_ratio(Q: float) -> float:
    """Order-of-magnitude threshold v_pump/c = 2*pi/Q (d0*omega ~ 2*pi*c)"""
    require_positive("Q", Q)
    return 2.0 * math.pi / Q


def stored_energy_to_power(U: float, pump: PumpCavityParams) -> float:
    """Steady-state input power omega_p*U/Q_p that balances pump-cavity loss"""
    require_non_negative("U", U)
    return pump.omega_p * U / pump.quality_Qp


def threshold_power_no_bias(cavity: CavityParams, pump: PumpCavityParams) -> float:
    """Threshold pump power 8 m w_p w_s^2 d0^2/(Q_s^2 Q_p) without DC bias"""
    return stored_energy_to_power(threshold_energy(cavity).U, pump)


def rough_threshold_power_no_bias(m: float, omega_p: float, Q: float) -> float:
    """32*pi^2*m*c^2*omega_p/Q^3, the d0 ~ wavelength estimate of the no-bias power"""
    require_positive("m", m)
    require_positive("omega_p", omega_p)
    require_positive("Q", Q)
    return 32.0 * math.pi ** 2 * m * C_LIGHT ** 2 * omega_p / Q ** 3
