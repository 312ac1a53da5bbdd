"""
Configuration loader for the distribution kernel
"""

import logging
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KernelSettings:
    """Numeric tolerances and windows shared by every kernel operation"""

    eps_zero: float = 1e-9
    sample_count: int = 17
    quad_tol: float = 1e-10
    quad_limit: int = 200
    window: float = 40.0
    decay_bound: float = 1e-12
    unbounded_window: float = 10.0
    prune_window: float = 1.0
    oracle_levels: int = 12
    oracle_tol: float = 1e-6
    oracle_max_eps: float = 0.5
    test_function_order: int = 4

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> "KernelSettings":
        """Build settings from the ``kernel`` section of a loaded config"""
        section = config.get("kernel", config)
        known = {f.name: f.type for f in fields(cls)}
        values = {}
        for key, value in section.items():
            if key not in known:
                logger.warning(f"Ignoring unknown kernel setting: {key}")
                continue
            values[key] = int(value) if known[key] in (int, "int") else float(value)
        return cls(**values)

    def with_overrides(self, **overrides: Any) -> "KernelSettings":
        """Copy with the non-None overrides applied"""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


DEFAULTS = KernelSettings()


class ConfigLoader:
    """Configuration loader with fallback defaults"""

    def __init__(self, config_dir: Optional[str] = None):
        if config_dir is None:
            self.config_dir = Path(__file__).parent.parent.parent.parent / "config"
        else:
            self.config_dir = Path(config_dir)

    def load_kernel_config(self) -> Dict[str, Any]:
        """Load kernel configuration"""
        config_file = self.config_dir / "kernel_config.yaml"

        default_config = {
            "kernel": asdict(DEFAULTS),
            "cli": {"json_indent": 2, "log_level": "WARNING"},
        }

        if config_file.exists():
            try:
                with open(config_file, "r") as f:
                    file_config = yaml.safe_load(f) or {}
                    return self._merge_configs(default_config, file_config)
            except (OSError, yaml.YAMLError) as e:
                logger.warning(f"Could not load config file {config_file}: {e}")

        return default_config

    def load_kernel_settings(self) -> KernelSettings:
        """Load the kernel section as a KernelSettings value"""
        return KernelSettings.from_config(self.load_kernel_config())

    def _merge_configs(
        self, default: Dict[str, Any], override: Dict[str, Any]
    ) -> Dict[str, Any]:
        """Recursively merge configuration dictionaries"""
        result = default.copy()

        for key, value in override.items():
            if (
                key in result
                and isinstance(result[key], dict)
                and isinstance(value, dict)
            ):
                result[key] = self._merge_configs(result[key], value)
            else:
                result[key] = value

        return result
