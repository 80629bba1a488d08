"""
LC Simulation Module
Fixed-step time-domain integration of the LC circuit with a moving plate,
carrying the energy ledger (work in, dissipation) alongside the circuit state
"""

import logging
import math
import numbers
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd

from ..models.constants import EPSILON0
from ..models.errors import ConfigError, GapClosure
from ..models.params import KinematicVelocity, LcState, PumpDrive
from ..models.validation import validate
from .circuit import LcCircuit
from .integrator import rk4_step
from .plate import plate_for_drive

logger = logging.getLogger("paramp.simulation")

MIN_STEPS_PER_CYCLE = 100
MODULATION_DEPTH_HARD = 0.5
MODULATION_DEPTH_SOFT = 0.05

TRACE_COLUMNS = (
    "t_s", "q_C", "i_A", "x_m", "v_m_per_s", "U_E_J", "U_B_J", "W_in_J", "Q_diss_J",
)


def _require_count(name: str, value: int, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral) or value < minimum:
        raise ConfigError(f"{name} must be an integer >= {minimum} (got {value!r})")
    return int(value)


@dataclass(frozen=True)
class SimConfig:
    """Integration settings for one simulation run"""

    steps_per_cycle: int = 500
    n_cycles: int = 100
    initial_charge_q0: Optional[float] = None
    initial_current_i0: float = 0.0
    drive_phase: float = 0.0
    record_stride: int = 1
    seed_voltage: float = 1.0

    def __post_init__(self):
        object.__setattr__(
            self, "steps_per_cycle",
            _require_count("steps_per_cycle", self.steps_per_cycle, MIN_STEPS_PER_CYCLE),
        )
        object.__setattr__(self, "n_cycles", _require_count("n_cycles", self.n_cycles, 1))
        object.__setattr__(
            self, "record_stride", _require_count("record_stride", self.record_stride, 1)
        )
        for name in ("initial_current_i0", "drive_phase", "seed_voltage"):
            value = getattr(self, name)
            if not isinstance(value, numbers.Real) or not math.isfinite(value):
                raise ConfigError(f"{name} must be a finite number (got {value!r})")
        q0 = self.initial_charge_q0
        if q0 is not None and (not isinstance(q0, numbers.Real) or not math.isfinite(q0)):
            raise ConfigError(f"initial_charge_q0 must be a finite number (got {q0!r})")

    def initial_charge(self, circuit: LcCircuit) -> float:
        if self.initial_charge_q0 is not None:
            return float(self.initial_charge_q0)
        return circuit.capacitance_C0 * self.seed_voltage

    def with_overrides(self, **changes) -> "SimConfig":
        values = {name: getattr(self, name) for name in self.__dataclass_fields__}
        values.update(changes)
        return SimConfig(**values)


@dataclass
class Trace:
    """Recorded samples of one run; columns are parallel numpy arrays"""

    t: np.ndarray
    q: np.ndarray
    i: np.ndarray
    x: np.ndarray
    v: np.ndarray
    U_E: np.ndarray
    U_B: np.ndarray
    W_in: np.ndarray
    Q_diss: np.ndarray
    dt: float
    circuit: LcCircuit
    drive: PumpDrive
    config: SimConfig
    warnings: List[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.t)

    @property
    def period(self) -> float:
        return self.circuit.period

    @property
    def total_energy(self) -> np.ndarray:
        return self.U_E + self.U_B

    def state(self, k: int) -> LcState:
        return LcState(
            charge_q=float(self.q[k]),
            current_i=float(self.i[k]),
            plate_x=float(self.x[k]),
            plate_v=float(self.v[k]),
            time_t=float(self.t[k]),
        )

    @property
    def meta(self) -> Dict[str, Any]:
        return {
            "circuit": self.circuit,
            "drive": self.drive,
            "config": self.config,
            "dt": self.dt,
        }

    def to_frame(self) -> pd.DataFrame:
        columns = (self.t, self.q, self.i, self.x, self.v, self.U_E, self.U_B, self.W_in, self.Q_diss)
        return pd.DataFrame(dict(zip(TRACE_COLUMNS, columns)))


def _modulation_warnings(circuit: LcCircuit, drive: PumpDrive) -> List[str]:
    if not isinstance(drive, KinematicVelocity):
        return []
    d0 = circuit.cavity.gap_d0
    x_p = drive.v_2w / (2.0 * circuit.omega)
    if x_p >= MODULATION_DEPTH_HARD * d0:
        raise ConfigError(
            f"modulation depth x_p/d0 = {x_p / d0:.3g} must stay below {MODULATION_DEPTH_HARD:g}"
        )
    if x_p > MODULATION_DEPTH_SOFT * d0:
        message = f"modulation depth x_p/d0 = {x_p / d0:.3g} exceeds {MODULATION_DEPTH_SOFT:g}"
        logger.warning(message)
        return [message]
    return []


def simulate(circuit: LcCircuit, drive: PumpDrive, cfg: SimConfig) -> Trace:
    """Integrate the circuit, plate and energy ledger with classical RK4"""
    validate(circuit.cavity, drive)
    warnings = _modulation_warnings(circuit, drive)

    cavity = circuit.cavity
    d0 = cavity.gap_d0
    inv_eps_A = 1.0 / (EPSILON0 * cavity.area_A)
    L = circuit.inductance_L
    R = circuit.resistance_R
    plate = plate_for_drive(drive, cavity, cfg.drive_phase)

    def rhs(t: float, y: np.ndarray) -> np.ndarray:
        q, i = y[0], y[1]
        if plate.prescribed:
            x, v = plate.state(t)
        else:
            x, v = y[2], y[3]
        return np.array([
            i,
            (-q * (d0 + x) * inv_eps_A - R * i) / L,
            v,
            plate.acceleration(t),
            0.5 * q * q * inv_eps_A * v,
            R * i * i,
        ])

    dt = circuit.period / cfg.steps_per_cycle
    n_steps = cfg.steps_per_cycle * cfg.n_cycles
    stride = cfg.record_stride
    n_records = n_steps // stride + 1

    x0, v0 = plate.state(0.0) if plate.prescribed else (0.0, 0.0)
    y = np.array([cfg.initial_charge(circuit), cfg.initial_current_i0, x0, v0, 0.0, 0.0])
    records = np.empty((n_records, 7))
    records[0] = (0.0, *y)

    logger.debug(
        "Simulating %d cycles at %d steps/cycle (dt=%.6e s, drive=%s)",
        cfg.n_cycles, cfg.steps_per_cycle, dt, type(drive).__name__,
    )

    for n in range(n_steps):
        t = n * dt
        y = rk4_step(rhs, t, y, dt)
        t_next = (n + 1) * dt
        if plate.prescribed:
            y[2], y[3] = plate.state(t_next)
        gap = d0 + y[2]
        if not gap > 0:
            raise GapClosure(t_next, gap)
        if (n + 1) % stride == 0:
            records[(n + 1) // stride] = (t_next, *y)

    t_col, q, i, x, v, W_in, Q_diss = records.T
    U_E = q * q * (d0 + x) * 0.5 * inv_eps_A
    U_B = 0.5 * L * i * i

    return Trace(
        t=t_col.copy(), q=q.copy(), i=i.copy(), x=x.copy(), v=v.copy(),
        U_E=U_E, U_B=U_B, W_in=W_in.copy(), Q_diss=Q_diss.copy(),
        dt=dt, circuit=circuit, drive=drive, config=cfg, warnings=warnings,
    )
