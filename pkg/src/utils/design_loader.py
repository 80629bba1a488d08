"""
Design file loader
Parses JSON design files (cavity, pump, drive, optional sim and sweep
sections) into validated parameter objects
"""

import dataclasses
import json
import numbers
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, Mapping, Optional

import numpy as np

from ..models.constants import omega_from_frequency
from ..models.errors import ConfigError
from ..models.params import (
    CavityParams,
    DcBiasField,
    KinematicVelocity,
    NoBiasField,
    PumpCavityParams,
    PumpDrive,
)
from ..simulators.simulation import SimConfig

SWEEP_PARAMETERS = (
    "mass_m", "gap_d0", "area_A", "omega", "quality_Q",
    "omega_p", "quality_Qp", "E_dc", "E_p", "Q",
)

DRIVE_TYPES = ("kinematic", "no_bias", "dc_bias")

_FREQUENCY_KEYS = ("omega_rad_per_s", "f_Hz")

_PUMP_HARMONIC = {NoBiasField: 1.0, DcBiasField: 2.0}


@dataclass(frozen=True)
class SweepAxis:
    parameter: str
    minimum: float
    maximum: float
    points: int
    scale: str = "linear"

    def __post_init__(self):
        if self.parameter not in SWEEP_PARAMETERS:
            raise ConfigError(
                f"sweep axis {self.parameter!r} is not one of {', '.join(SWEEP_PARAMETERS)}"
            )
        if isinstance(self.points, bool) or not isinstance(self.points, numbers.Integral) or self.points < 2:
            raise ConfigError(f"sweep points must be an integer >= 2 (got {self.points!r})")
        if self.scale not in ("linear", "log"):
            raise ConfigError(f"sweep scale must be 'linear' or 'log' (got {self.scale!r})")
        for name in ("minimum", "maximum"):
            value = getattr(self, name)
            if not isinstance(value, numbers.Real) or not np.isfinite(value):
                raise ConfigError(f"sweep {name} must be a finite number (got {value!r})")
        if self.minimum >= self.maximum:
            raise ConfigError(f"sweep min ({self.minimum!r}) must be below max ({self.maximum!r})")
        if self.scale == "log" and self.minimum <= 0:
            raise ConfigError("log sweep needs a positive minimum")

    def values(self) -> np.ndarray:
        """Grid points in ascending order"""
        if self.scale == "log":
            return np.geomspace(self.minimum, self.maximum, int(self.points))
        return np.linspace(self.minimum, self.maximum, int(self.points))


@dataclass(frozen=True)
class DesignConfig:
    cavity: CavityParams
    pump: PumpCavityParams
    drive: PumpDrive
    sim: Optional[SimConfig] = None
    sweep: Optional[SweepAxis] = None
    lossless: bool = False

    def with_parameter(self, parameter: str, value: float) -> "DesignConfig":
        """Copy of the design with one sweep parameter replaced"""
        cavity, pump, drive = self.cavity, self.pump, self.drive
        if parameter == "Q":
            cavity = dataclasses.replace(cavity, quality_Q=value)
            pump = dataclasses.replace(pump, quality_Qp=value)
        elif parameter in ("mass_m", "gap_d0", "area_A", "quality_Q"):
            cavity = dataclasses.replace(cavity, **{parameter: value})
        elif parameter == "quality_Qp":
            pump = dataclasses.replace(pump, quality_Qp=value)
        elif parameter in ("omega", "omega_p"):
            # field drives keep omega_p on their harmonic of omega
            harmonic = _PUMP_HARMONIC.get(type(drive))
            if parameter == "omega":
                cavity = dataclasses.replace(cavity, omega=value)
                if harmonic is not None:
                    pump = dataclasses.replace(pump, omega_p=harmonic * value)
                    drive = dataclasses.replace(drive, omega_p=harmonic * value)
            else:
                pump = dataclasses.replace(pump, omega_p=value)
                if harmonic is not None:
                    cavity = dataclasses.replace(cavity, omega=value / harmonic)
                    drive = dataclasses.replace(drive, omega_p=value)
        elif parameter == "E_dc":
            if not isinstance(drive, DcBiasField):
                raise ConfigError("sweep axis E_dc needs a dc_bias drive")
            drive = dataclasses.replace(drive, E_dc=value)
        elif parameter == "E_p":
            if not isinstance(drive, (NoBiasField, DcBiasField)):
                raise ConfigError("sweep axis E_p needs a no_bias or dc_bias drive")
            drive = dataclasses.replace(drive, E_p=value)
        else:
            raise ConfigError(f"unknown sweep parameter {parameter!r}")
        return dataclasses.replace(self, cavity=cavity, pump=pump, drive=drive)


def _section(raw: Mapping[str, Any], name: str, required: bool = True) -> Optional[Dict[str, Any]]:
    section = raw.get(name)
    if section is None:
        if required:
            raise ConfigError(f"design is missing the '{name}' section")
        return None
    if not isinstance(section, dict):
        raise ConfigError(f"design section '{name}' must be an object")
    return section


def _reject_unknown(section: Mapping[str, Any], name: str, allowed: Iterable[str]) -> None:
    allowed = set(allowed)
    for key in section:
        if key not in allowed:
            raise ConfigError(f"unknown key '{name}.{key}'")


def _number(section: Mapping[str, Any], name: str, key: str, default: Any = ...) -> Any:
    if key not in section:
        if default is ...:
            raise ConfigError(f"design is missing '{name}.{key}'")
        return default
    value = section[key]
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise ConfigError(f"'{name}.{key}' must be a number (got {value!r})")
    return value


def _omega(section: Mapping[str, Any], name: str) -> float:
    present = [key for key in _FREQUENCY_KEYS if key in section]
    if len(present) != 1:
        raise ConfigError(f"'{name}' needs exactly one of omega_rad_per_s or f_Hz")
    if present[0] == "f_Hz":
        return omega_from_frequency(_number(section, name, "f_Hz"))
    return _number(section, name, "omega_rad_per_s")


def _parse_cavity(section: Mapping[str, Any]) -> CavityParams:
    _reject_unknown(section, "cavity", ("mass_kg", "gap_m", "area_m2", "Q") + _FREQUENCY_KEYS)
    return CavityParams(
        mass_m=_number(section, "cavity", "mass_kg"),
        gap_d0=_number(section, "cavity", "gap_m"),
        area_A=_number(section, "cavity", "area_m2"),
        omega=_omega(section, "cavity"),
        quality_Q=_number(section, "cavity", "Q"),
    )


def _parse_pump(section: Mapping[str, Any]) -> PumpCavityParams:
    _reject_unknown(section, "pump", ("Q",) + _FREQUENCY_KEYS)
    return PumpCavityParams(omega_p=_omega(section, "pump"), quality_Qp=_number(section, "pump", "Q"))


def _parse_drive(section: Mapping[str, Any], pump: PumpCavityParams) -> PumpDrive:
    kind = section.get("type")
    if kind == "kinematic":
        _reject_unknown(section, "drive", ("type", "v_2w_m_per_s", "phase_rad"))
        return KinematicVelocity(
            v_2w=_number(section, "drive", "v_2w_m_per_s"),
            phase=_number(section, "drive", "phase_rad", 0.0),
        )
    if kind == "no_bias":
        _reject_unknown(section, "drive", ("type", "E_p_V_per_m"))
        return NoBiasField(E_p=_number(section, "drive", "E_p_V_per_m"), omega_p=pump.omega_p)
    if kind == "dc_bias":
        _reject_unknown(section, "drive", ("type", "E_dc_V_per_m", "E_p_V_per_m"))
        return DcBiasField(
            E_dc=_number(section, "drive", "E_dc_V_per_m"),
            E_p=_number(section, "drive", "E_p_V_per_m"),
            omega_p=pump.omega_p,
        )
    raise ConfigError(f"drive.type must be one of {', '.join(DRIVE_TYPES)} (got {kind!r})")


_SIM_KEYS = {
    "steps_per_cycle": "steps_per_cycle",
    "n_cycles": "n_cycles",
    "record_stride": "record_stride",
    "q0_C": "initial_charge_q0",
    "i0_A": "initial_current_i0",
    "drive_phase_rad": "drive_phase",
    "seed_voltage_V": "seed_voltage",
}


def _parse_sim(section: Mapping[str, Any], defaults: Optional[Mapping[str, Any]]) -> SimConfig:
    _reject_unknown(section, "sim", tuple(_SIM_KEYS) + ("lossless",))
    kwargs = dict(defaults or {})
    kwargs.update(
        {field: _number(section, "sim", key) for key, field in _SIM_KEYS.items() if key in section}
    )
    return SimConfig(**kwargs)


def _parse_sweep(section: Mapping[str, Any]) -> SweepAxis:
    _reject_unknown(section, "sweep", ("axis", "min", "max", "points", "scale"))
    if "axis" not in section:
        raise ConfigError("design is missing 'sweep.axis'")
    return SweepAxis(
        parameter=section["axis"],
        minimum=_number(section, "sweep", "min"),
        maximum=_number(section, "sweep", "max"),
        points=_number(section, "sweep", "points"),
        scale=section.get("scale", "linear"),
    )


def parse_design(
    raw: Mapping[str, Any], sim_defaults: Optional[Mapping[str, Any]] = None
) -> DesignConfig:
    """Build a DesignConfig from the decoded JSON object

    sim_defaults fill SimConfig fields the sim section leaves out.
    """
    if not isinstance(raw, dict):
        raise ConfigError("design file must hold a JSON object")
    _reject_unknown(raw, "design", ("cavity", "pump", "drive", "sim", "sweep"))

    cavity = _parse_cavity(_section(raw, "cavity"))
    pump = _parse_pump(_section(raw, "pump"))
    drive = _parse_drive(_section(raw, "drive"), pump)

    sim_section = _section(raw, "sim", required=False)
    sweep_section = _section(raw, "sweep", required=False)
    lossless = False
    if sim_section is not None:
        lossless = sim_section.get("lossless", False)
        if not isinstance(lossless, bool):
            raise ConfigError(f"'sim.lossless' must be true or false (got {lossless!r})")

    return DesignConfig(
        cavity=cavity,
        pump=pump,
        drive=drive,
        sim=_parse_sim(sim_section, sim_defaults) if sim_section is not None else None,
        sweep=_parse_sweep(sweep_section) if sweep_section is not None else None,
        lossless=lossless,
    )


def load_design(path: str, sim_defaults: Optional[Mapping[str, Any]] = None) -> DesignConfig:
    design_file = Path(path)
    if not design_file.exists():
        raise ConfigError(f"design file {path} does not exist")
    with open(design_file, 'r') as f:
        try:
            raw = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(f"cannot parse design file {path}: {e}") from e
    return parse_design(raw, sim_defaults)
