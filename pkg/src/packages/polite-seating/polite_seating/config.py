"""
Configuration loading for the counters, the verification sweep and the CLI
"""

import logging
import os
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = 'POLITE_SEATING_CONFIG'
DEFAULTS_PATH = Path(__file__).parent / 'defaults.yaml'
# joblib reads n_jobs=-1 as every available core
ALL_CORES_KEYS = {'verify.workers'}


@dataclass(frozen=True)
class OracleSettings:
    naive_cap: int = 11
    census_invariance_cap: int = 14
    mirror_canonicalization: bool = True


@dataclass(frozen=True)
class SchemaSettings:
    max_level: int = 20


@dataclass(frozen=True)
class VerifySettings:
    nmax_formula: int = 64
    nmax_oracle: int = 14
    nmax_plain_oracle: int = 18
    census_pmax: int = 64
    b1_pmax: int = 100000
    workers: int = 1


@dataclass(frozen=True)
class OutputSettings:
    precision: int = 4


@dataclass(frozen=True)
class SeatingConfig:
    oracle: OracleSettings = field(default_factory=OracleSettings)
    schema: SchemaSettings = field(default_factory=SchemaSettings)
    verify: VerifySettings = field(default_factory=VerifySettings)
    output: OutputSettings = field(default_factory=OutputSettings)
    source: Optional[str] = None


SECTIONS = {
    'oracle': OracleSettings,
    'schema': SchemaSettings,
    'verify': VerifySettings,
    'output': OutputSettings,
}


def _build_section(name: str, cls, raw: Optional[Dict[str, Any]]):
    if raw is None:
        return cls()
    if not isinstance(raw, dict):
        raise ValueError(f"config section '{name}' must be a mapping, got {type(raw).__name__}")

    values = {}
    for entry in fields(cls):
        if entry.name not in raw:
            continue
        value = raw[entry.name]
        key = f"{name}.{entry.name}"
        if entry.type is bool:
            if not isinstance(value, bool):
                raise ValueError(f"{key} must be true or false, got {value!r}")
        else:
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValueError(f"{key} must be an integer, got {value!r}")
            if value < 1 and not (key in ALL_CORES_KEYS and value == -1):
                raise ValueError(f"{key} must be positive, got {value}")
        values[entry.name] = value
    return cls(**values)


def config_from_dict(raw: Optional[Dict[str, Any]], source: Optional[str] = None) -> SeatingConfig:
    """
    Build a SeatingConfig from parsed YAML.

    Missing keys keep their defaults, unknown sections are ignored.

    Args:
        raw: Parsed mapping (None for an empty file)
        source: Where the mapping came from, kept for logging

    Returns:
        SeatingConfig
    """
    raw = raw or {}
    if not isinstance(raw, dict):
        raise ValueError(f"config root must be a mapping, got {type(raw).__name__}")
    sections = {name: _build_section(name, cls, raw.get(name)) for name, cls in SECTIONS.items()}
    return SeatingConfig(source=source, **sections)


def resolve_config_path(path: Union[str, Path, None] = None) -> Path:
    """Explicit path, then $POLITE_SEATING_CONFIG, then the packaged defaults."""
    if path:
        return Path(path)
    env_path = os.environ.get(CONFIG_ENV_VAR)
    if env_path:
        return Path(env_path)
    return DEFAULTS_PATH


def load_config(path: Union[str, Path, None] = None) -> SeatingConfig:
    """
    Load and validate the seating configuration.

    Args:
        path: Optional YAML file; see resolve_config_path for the fallbacks

    Returns:
        SeatingConfig
    """
    config_path = resolve_config_path(path)
    with open(config_path, 'r') as f:
        raw = yaml.safe_load(f)

    config = config_from_dict(raw, source=str(config_path))
    logger.info("Configuration loaded", extra={
        "custom_dimensions": {
            "source": str(config_path),
            "nmax_formula": config.verify.nmax_formula,
            "nmax_oracle": config.verify.nmax_oracle,
            "workers": config.verify.workers,
        }
    })
    return config
