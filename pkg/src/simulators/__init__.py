# Simulators Package
from .circuit import LcCircuit, build_circuit
from .growth import GrowthEstimate, estimate_growth_rate, extract_plate_amplitude, ledger_residual
from .search import (
    PhaseScan,
    ThresholdSearch,
    find_threshold_velocity_numeric,
    scan_drive_phase,
    search_threshold_velocity,
)
from .simulation import TRACE_COLUMNS, SimConfig, Trace, simulate
from .verification import (
    EquipartitionReport,
    TimeAverageReport,
    verify_equipartition,
    verify_time_averages,
)

__all__ = [
    'LcCircuit', 'build_circuit',
    'GrowthEstimate', 'estimate_growth_rate', 'extract_plate_amplitude', 'ledger_residual',
    'PhaseScan', 'ThresholdSearch', 'find_threshold_velocity_numeric', 'scan_drive_phase',
    'search_threshold_velocity',
    'TRACE_COLUMNS', 'SimConfig', 'Trace', 'simulate',
    'EquipartitionReport', 'TimeAverageReport', 'verify_equipartition', 'verify_time_averages',
]
