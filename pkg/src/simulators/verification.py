"""
Numerical checks of the time-average identities and LC equipartition
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..analyzers.thresholds import averaged_pump_power, time_averaged_energy_density
from ..models.constants import EPSILON0
from ..models.errors import ConfigError
from ..models.params import KinematicVelocity, require_non_negative, require_positive
from .circuit import LcCircuit
from .growth import cycle_bounds, fit_log_linear
from .simulation import SimConfig, simulate

logger = logging.getLogger("paramp.simulation")

MIN_EQUIPARTITION_CYCLES = 10


def _relative(numeric: float, analytic: float) -> float:
    scale = abs(analytic) if analytic != 0 else abs(numeric)
    return 0.0 if scale == 0 else abs(numeric - analytic) / scale


@dataclass(frozen=True)
class TimeAverageReport:
    numeric_power: float  # W
    analytic_power: float  # W
    rel_diff: float
    mean_cos2: float
    mean_u_E: float  # J/m^3
    analytic_u_E: float  # J/m^3
    u_E_rel_diff: float


def verify_time_averages(
    signal_E0: float,
    v_2w: float,
    area_A: float,
    omega: float,
    n_periods: int,
    samples_per_period: int = 256,
) -> TimeAverageReport:
    """Average the instantaneous drive power over whole periods of the 2w drive"""
    require_non_negative("signal_E0", signal_E0)
    require_non_negative("v_2w", v_2w)
    require_non_negative("area_A", area_A)
    require_positive("omega", omega)
    if isinstance(n_periods, bool) or not isinstance(n_periods, int) or n_periods < 1:
        raise ConfigError(f"n_periods must be an integer >= 1 (got {n_periods!r})")
    if samples_per_period < 3:
        raise ConfigError(f"samples_per_period must be >= 3 (got {samples_per_period!r})")

    drive_period = math.pi / omega
    n_samples = n_periods * samples_per_period
    t = np.arange(n_samples) * (drive_period / samples_per_period)
    drive = np.cos(2.0 * omega * t)

    power = 0.25 * EPSILON0 * signal_E0 ** 2 * area_A * v_2w * (drive + drive * drive)
    u_E = 0.5 * EPSILON0 * signal_E0 ** 2 * np.cos(omega * t) ** 2

    numeric_power = float(np.mean(power))
    analytic_power = averaged_pump_power(signal_E0, area_A, v_2w)
    mean_u_E = float(np.mean(u_E))
    analytic_u_E = time_averaged_energy_density(signal_E0)
    return TimeAverageReport(
        numeric_power=numeric_power,
        analytic_power=analytic_power,
        rel_diff=_relative(numeric_power, analytic_power),
        mean_cos2=float(np.mean(drive * drive)),
        mean_u_E=mean_u_E,
        analytic_u_E=analytic_u_E,
        u_E_rel_diff=_relative(mean_u_E, analytic_u_E),
    )


@dataclass(frozen=True)
class EquipartitionReport:
    mean_U_E: float  # J
    mean_U_B: float  # J
    rel_diff: float
    energy_drift: float  # max |U - U0|/U0, meaningful when lossless
    cycles: int
    decay_rate_U_E: Optional[float] = None  # 1/s, lossy circuits only
    decay_rate_U_B: Optional[float] = None


def verify_equipartition(circuit: LcCircuit, cfg: SimConfig) -> EquipartitionReport:
    """Compare cycle-averaged capacitor and inductor energies of the free circuit"""
    if cfg.n_cycles < MIN_EQUIPARTITION_CYCLES:
        raise ConfigError(
            f"equipartition needs at least {MIN_EQUIPARTITION_CYCLES} cycles (got {cfg.n_cycles})"
        )
    if cfg.steps_per_cycle % cfg.record_stride:
        raise ConfigError("record_stride must divide steps_per_cycle for cycle averages")
    if cfg.initial_charge(circuit) == 0:
        raise ConfigError("equipartition needs a nonzero initial charge")

    trace = simulate(circuit, KinematicVelocity(v_2w=0.0), cfg)
    bounds = cycle_bounds(trace)
    n_cycles = len(bounds) - 1
    end = bounds[-1]

    mean_U_E = float(np.mean(trace.U_E[:end]))
    mean_U_B = float(np.mean(trace.U_B[:end]))
    energy = trace.total_energy
    drift = float(np.max(np.abs(energy - energy[0])) / energy[0])

    decay_E = decay_B = None
    if circuit.resistance_R > 0:
        cycle_E = np.add.reduceat(trace.U_E[:end], bounds[:-1]) / np.diff(bounds)
        cycle_B = np.add.reduceat(trace.U_B[:end], bounds[:-1]) / np.diff(bounds)
        centres = (np.arange(n_cycles) + 0.5) * circuit.period
        decay_E, _ = fit_log_linear(centres, cycle_E)
        decay_B, _ = fit_log_linear(centres, cycle_B)
        decay_E, decay_B = -decay_E, -decay_B

    report = EquipartitionReport(
        mean_U_E=mean_U_E,
        mean_U_B=mean_U_B,
        rel_diff=abs(mean_U_E - mean_U_B) / mean_U_E,
        energy_drift=drift,
        cycles=n_cycles,
        decay_rate_U_E=decay_E,
        decay_rate_U_B=decay_B,
    )
    logger.debug("Equipartition over %d cycles: rel_diff=%.3e", n_cycles, report.rel_diff)
    return report
