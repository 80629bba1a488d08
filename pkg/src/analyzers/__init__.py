# Analyzers Package
from .thresholds import (
    RingDown,
    ThresholdEnergy,
    averaged_pump_power,
    braginsky_threshold,
    energy_density,
    gain_coefficient,
    maxwell_stress,
    mirror_velocity,
    pressure_on_plate,
    ring_down,
    rough_threshold_power_no_bias,
    rough_velocity_ratio,
    stored_energy_to_power,
    threshold_energy,
    threshold_power_no_bias,
    threshold_velocity,
    time_averaged_energy_density,
    walls_milburn_velocity_ratio,
)

__all__ = [
    'RingDown', 'ThresholdEnergy', 'averaged_pump_power', 'braginsky_threshold',
    'energy_density', 'gain_coefficient', 'maxwell_stress', 'mirror_velocity',
    'pressure_on_plate', 'ring_down', 'rough_threshold_power_no_bias',
    'rough_velocity_ratio', 'stored_energy_to_power', 'threshold_energy',
    'threshold_power_no_bias', 'threshold_velocity', 'time_averaged_energy_density',
    'walls_milburn_velocity_ratio',
]
