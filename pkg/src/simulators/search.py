"""
Threshold Search Module
Locates the oscillation threshold by bisection on the fitted growth rate and
scans the drive phase for the amplified and deamplified quadratures
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np

from ..analyzers.thresholds import threshold_velocity
from ..models.errors import ConfigError, NoSignChange
from ..models.params import KinematicVelocity, require_non_negative
from ..utils.parallel import map_ordered
from .circuit import LcCircuit
from .growth import estimate_growth_rate
from .simulation import SimConfig, simulate

logger = logging.getLogger("paramp.search")

TOL_REL_RANGE = (1e-4, 0.2)
BRACKET_SPAN = 10.0
RATE_FLOOR_REL = 1e-6
MAX_EVALUATIONS = 64


@dataclass(frozen=True)
class ThresholdSearch:
    v_threshold: float  # m/s, bracket midpoint
    v_analytic: float  # m/s
    bracket: Tuple[float, float]
    tol_rel: float
    evaluations: int
    cycles_simulated: int

    @property
    def rel_diff(self) -> float:
        return abs(self.v_threshold - self.v_analytic) / self.v_analytic


def _growth_rate(circuit: LcCircuit, v_2w: float, cfg: SimConfig, phase: float = 0.0) -> float:
    trace = simulate(circuit, KinematicVelocity(v_2w=v_2w, phase=phase), cfg)
    return estimate_growth_rate(trace).rate


def search_threshold_velocity(
    circuit: LcCircuit,
    cfg: SimConfig,
    tol_rel: float,
    rate_floor_rel: float = RATE_FLOOR_REL,
    max_evaluations: int = MAX_EVALUATIONS,
) -> ThresholdSearch:
    """Bisect v_2w over [0, 10*4*w*d0/Q] for the zero crossing of the growth rate"""
    lo_tol, hi_tol = TOL_REL_RANGE
    if not (isinstance(tol_rel, (int, float)) and lo_tol <= tol_rel <= hi_tol):
        raise ConfigError(f"tol_rel must lie in [{lo_tol:g}, {hi_tol:g}] (got {tol_rel!r})")

    cavity = circuit.cavity
    v_analytic = threshold_velocity(cavity.omega, cavity.gap_d0, cavity.quality_Q)
    floor = rate_floor_rel * cavity.omega
    lo, hi = 0.0, BRACKET_SPAN * v_analytic

    rate_lo = _growth_rate(circuit, lo, cfg)
    rate_hi = _growth_rate(circuit, hi, cfg)
    evaluations = 2
    logger.debug("Bracket [%.6e, %.6e] m/s: rates %.6e, %.6e 1/s", lo, hi, rate_lo, rate_hi)
    if not (rate_lo < -floor and rate_hi > floor):
        raise NoSignChange(rate_lo, rate_hi)

    while hi - lo > tol_rel * 0.5 * (lo + hi) and evaluations < max_evaluations:
        mid = 0.5 * (lo + hi)
        rate = _growth_rate(circuit, mid, cfg)
        evaluations += 1
        if rate < 0:
            lo = mid
        else:
            hi = mid
        logger.debug("Bisection v_2w=%.6e m/s: rate %.6e 1/s", mid, rate)

    result = ThresholdSearch(
        v_threshold=0.5 * (lo + hi),
        v_analytic=v_analytic,
        bracket=(lo, hi),
        tol_rel=float(tol_rel),
        evaluations=evaluations,
        cycles_simulated=evaluations * cfg.n_cycles,
    )
    logger.info(
        "Numeric threshold %.6e m/s vs analytic %.6e m/s after %d evaluations",
        result.v_threshold, v_analytic, evaluations,
    )
    return result


def find_threshold_velocity_numeric(circuit: LcCircuit, cfg: SimConfig, tol_rel: float) -> float:
    return search_threshold_velocity(circuit, cfg, tol_rel).v_threshold


@dataclass(frozen=True)
class PhaseScan:
    phases: Tuple[float, ...]  # rad
    rates: Tuple[float, ...]  # 1/s
    v_2w: float

    @property
    def best_phase(self) -> float:
        return self.phases[int(np.argmax(self.rates))]

    @property
    def worst_phase(self) -> float:
        return self.phases[int(np.argmin(self.rates))]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "v_2w": {"value": self.v_2w, "unit": "m/s"},
            "phases": {"value": list(self.phases), "unit": "rad"},
            "rates": {"value": list(self.rates), "unit": "1/s"},
            "best_phase": {"value": self.best_phase, "unit": "rad"},
            "worst_phase": {"value": self.worst_phase, "unit": "rad"},
        }


def _phase_job(job: Tuple[LcCircuit, float, float, SimConfig]) -> float:
    circuit, v_2w, phase, cfg = job
    return _growth_rate(circuit, v_2w, cfg, phase)


def scan_drive_phase(
    circuit: LcCircuit,
    v_2w: float,
    cfg: SimConfig,
    n_phases: int = 8,
    max_workers: Optional[int] = 1,
) -> PhaseScan:
    """Fitted growth rate at n_phases evenly spaced drive phases in [0, 2*pi)"""
    require_non_negative("v_2w", v_2w)
    if isinstance(n_phases, bool) or not isinstance(n_phases, int) or n_phases < 2:
        raise ConfigError(f"n_phases must be an integer >= 2 (got {n_phases!r})")

    phases = tuple(2.0 * math.pi * k / n_phases for k in range(n_phases))
    jobs = [(circuit, v_2w, phase, cfg) for phase in phases]
    rates = map_ordered(_phase_job, jobs, max_workers=max_workers, use_processes=True)
    scan = PhaseScan(phases=phases, rates=tuple(rates), v_2w=float(v_2w))
    logger.info(
        "Phase scan at v_2w=%.6e m/s: best %.4f rad, worst %.4f rad",
        v_2w, scan.best_phase, scan.worst_phase,
    )
    return scan
