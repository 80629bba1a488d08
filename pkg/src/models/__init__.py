# Models Package
from .constants import C_LIGHT, CONSTANTS, EPSILON0, PhysicalConstants, omega_from_frequency
from .errors import (
    BiasRegimeViolation,
    ConfigError,
    DegenerateTrace,
    FrequencyMismatch,
    GapClosure,
    NonPositiveParameter,
    NoSignChange,
    ParampError,
    PhysicsError,
    SearchError,
    ValidationError,
)
from .params import (
    CavityParams,
    DcBiasField,
    KinematicVelocity,
    LcState,
    NoBiasField,
    PumpCavityParams,
    PumpDrive,
)
from .validation import validate

__all__ = [
    'C_LIGHT', 'CONSTANTS', 'EPSILON0', 'PhysicalConstants', 'omega_from_frequency',
    'BiasRegimeViolation', 'ConfigError', 'DegenerateTrace', 'FrequencyMismatch',
    'GapClosure', 'NonPositiveParameter', 'NoSignChange', 'ParampError',
    'PhysicsError', 'SearchError', 'ValidationError',
    'CavityParams', 'DcBiasField', 'KinematicVelocity', 'LcState', 'NoBiasField',
    'PumpCavityParams', 'PumpDrive', 'validate',
]
