"""
Configuration loader utility
Runtime settings come from YAML, with PARAMP_* environment overrides
"""

import copy
import os
from pathlib import Path
from typing import Any, Dict

import yaml
from dotenv import load_dotenv

from ..models.errors import ConfigError

DEFAULT_CONFIG_PATH = "config/paramp_config.yaml"


def load_config(config_path: str = DEFAULT_CONFIG_PATH) -> Dict[str, Any]:
    """Load runtime settings from YAML, layered over the defaults"""
    load_dotenv()
    config = get_default_config()
    config_file = Path(config_path)

    if config_file.exists():
        with open(config_file, 'r') as f:
            try:
                loaded = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ConfigError(f"cannot parse settings file {config_path}: {e}") from e
        if not isinstance(loaded, dict):
            raise ConfigError(f"settings file {config_path} must hold a mapping")
        config = _merge(config, loaded)

    return merge_env_vars(config)


def get_default_config() -> Dict[str, Any]:
    """Return default configuration"""
    return {
        'log_level': 'INFO',
        'log_file': 'logs/paramp.log',
        'simulation': {
            'steps_per_cycle': 500,
            'n_cycles': 100,
            'seed_voltage_V': 1.0,
            'record_stride': 1,
        },
        'search': {
            'tol_rel': 0.05,
            'n_cycles': 100,
            'steps_per_cycle': 200,
            'rate_floor_rel': 1e-6,
        },
        'warnings': {
            'desk_q_max': 1e5,
        },
        'performance': {
            'max_workers': 0,
        },
    }


def merge_env_vars(config: Dict[str, Any]) -> Dict[str, Any]:
    """Merge environment variables into configuration"""
    if os.getenv('PARAMP_LOG_LEVEL'):
        config['log_level'] = os.getenv('PARAMP_LOG_LEVEL')

    # an empty value disables the file handler
    if os.getenv('PARAMP_LOG_FILE') is not None:
        config['log_file'] = os.getenv('PARAMP_LOG_FILE') or None

    if os.getenv('PARAMP_MAX_WORKERS'):
        try:
            config.setdefault('performance', {})['max_workers'] = int(os.getenv('PARAMP_MAX_WORKERS'))
        except ValueError as e:
            raise ConfigError(f"PARAMP_MAX_WORKERS must be an integer: {e}") from e

    return config


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged
