# Drivers Package
from .pump_drive import (
    DcBiasReport,
    DriveResponse,
    build_dc_bias_report,
    dc_bias_power_ratio,
    dc_bias_response,
    dc_bias_threshold_field,
    dc_bias_threshold_power,
    dc_bias_threshold_power_simplified,
    dc_bias_threshold_velocity,
    drive_response,
    kinematic_response,
    no_bias_response,
    pressure_via_charge_integration,
)

__all__ = [
    'DcBiasReport', 'DriveResponse', 'build_dc_bias_report', 'dc_bias_power_ratio',
    'dc_bias_response', 'dc_bias_threshold_field', 'dc_bias_threshold_power',
    'dc_bias_threshold_power_simplified', 'dc_bias_threshold_velocity',
    'drive_response', 'kinematic_response', 'no_bias_response',
    'pressure_via_charge_integration',
]
