"""
Utilities package for the distribution kernel
"""

from .logger import setup_logger, KernelLogger
from .config_loader import ConfigLoader, KernelSettings, DEFAULTS

__all__ = ["setup_logger", "KernelLogger", "ConfigLoader", "KernelSettings", "DEFAULTS"]
