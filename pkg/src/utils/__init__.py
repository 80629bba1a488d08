# Utils Package
from .config_loader import get_default_config, load_config
from .logger import setup_logging
from .parallel import map_ordered

__all__ = ['get_default_config', 'load_config', 'setup_logging', 'map_ordered']
