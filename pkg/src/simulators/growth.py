"""
Growth analysis
Envelope growth-rate fitting, plate amplitude extraction and the energy
ledger check on recorded traces
"""

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..drivers.pump_drive import DriveResponse
from ..models.errors import ConfigError, DegenerateTrace
from ..models.params import require_positive
from .simulation import Trace

MIN_FIT_CYCLES = 20
TRANSIENT_FRACTION = 0.2
ENERGY_FLOOR = 1e-300


@dataclass(frozen=True)
class GrowthEstimate:
    rate: float  # 1/s, energy growth (negative for decay)
    r_squared: float
    window_cycles: int
    method: str = "per-cycle-max-loglinear"


def cycle_bounds(trace: Trace) -> np.ndarray:
    """Sample index boundaries of every complete cycle; cycle k is [b[k], b[k+1])"""
    period = trace.period
    cycle = np.floor(trace.t / period + 1e-9).astype(np.int64)
    n_complete = int(cycle[-1])
    bounds = np.searchsorted(cycle, np.arange(n_complete + 1), side="left")
    if n_complete and np.any(np.diff(bounds) == 0):
        raise ConfigError("record_stride leaves cycles without samples")
    return bounds


def per_cycle_maxima(trace: Trace) -> Tuple[np.ndarray, np.ndarray]:
    """Time and value of the stored-energy maximum in each complete cycle"""
    energy = trace.total_energy
    bounds = cycle_bounds(trace)
    times = np.empty(len(bounds) - 1)
    peaks = np.empty(len(bounds) - 1)
    for k in range(len(bounds) - 1):
        lo, hi = bounds[k], bounds[k + 1]
        j = lo + int(np.argmax(energy[lo:hi]))
        times[k] = trace.t[j]
        peaks[k] = energy[j]
    return times, peaks


def fit_log_linear(times: np.ndarray, values: np.ndarray) -> Tuple[float, float]:
    """Least-squares slope of log(values) vs times, and r^2 clipped to [0, 1]"""
    logs = np.log(values)
    slope, intercept = np.polyfit(times, logs, 1)
    residual = logs - (slope * times + intercept)
    ss_res = float(residual @ residual)
    centered = logs - logs.mean()
    ss_tot = float(centered @ centered)
    r_squared = 1.0 if ss_tot == 0.0 else min(1.0, max(0.0, 1.0 - ss_res / ss_tot))
    return float(slope), r_squared


def estimate_growth_rate(trace: Trace) -> GrowthEstimate:
    """Fit the stored-energy envelope over the trailing 80% of complete cycles"""
    energy = trace.total_energy
    if not np.all(np.isfinite(energy)):
        raise DegenerateTrace("stored energy is not finite")
    if np.all(energy < ENERGY_FLOOR):
        raise DegenerateTrace(f"all stored energies are below {ENERGY_FLOOR:g} J")

    times, peaks = per_cycle_maxima(trace)
    if len(peaks) < MIN_FIT_CYCLES:
        raise ConfigError(
            f"growth fit needs at least {MIN_FIT_CYCLES} complete cycles (got {len(peaks)})"
        )

    start = int(math.floor(TRANSIENT_FRACTION * len(peaks)))
    times, peaks = times[start:], peaks[start:]
    usable = peaks >= ENERGY_FLOOR
    if np.count_nonzero(usable) < 2:
        raise DegenerateTrace("fewer than two cycle maxima above the energy floor")

    rate, r_squared = fit_log_linear(times[usable], peaks[usable])
    return GrowthEstimate(rate=rate, r_squared=r_squared, window_cycles=int(len(peaks)))


def extract_plate_amplitude(trace: Trace, drive_omega: float) -> DriveResponse:
    """Harmonic plate amplitude at drive_omega from a least-squares fit of x(t)

    The basis carries a quadratic background (free-mass drift from rest) and
    harmonics at drive_omega and 2*drive_omega.
    """
    require_positive("drive_omega", drive_omega)
    t = trace.t
    tau = t / t[-1]
    basis = np.column_stack([
        np.ones_like(t), tau, tau * tau,
        np.cos(drive_omega * t), np.sin(drive_omega * t),
        np.cos(2.0 * drive_omega * t), np.sin(2.0 * drive_omega * t),
    ])
    coeffs, *_ = np.linalg.lstsq(basis, trace.x, rcond=None)
    x_p = float(math.hypot(coeffs[3], coeffs[4]))
    return DriveResponse(x_p=x_p, v_p=drive_omega * x_p, drive_omega=drive_omega)


def ledger_residual(trace: Trace) -> float:
    """max |dU - W_in + Q_diss| over the run, relative to the peak stored energy"""
    energy = trace.total_energy
    peak = float(np.max(energy))
    if not peak > 0:
        raise DegenerateTrace("trace stores no energy")
    residual = np.abs(energy - energy[0] - trace.W_in + trace.Q_diss)
    return float(np.max(residual)) / peak
