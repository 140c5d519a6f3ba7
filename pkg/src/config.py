"""
Settings loader.

Defaults are overridden by the JSON config file, which is overridden by the
COMPMAT_NMAX environment variable.
"""

import json
import logging
import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, Optional

from .constants import (
    DEFAULT_CONFIG_PATH,
    DEFAULT_ENUMERATION_CAP,
    DEFAULT_LEMKE_MAX_ITERATIONS,
    ENV_NMAX,
    COLOR_PALE_BLUE,
)
from .errors import CapExceeded


@dataclass(frozen=True)
class VerifySettings:
    seed: int = 1
    trials: int = 500
    n_max: int = 4
    entry_min: int = -5
    entry_max: int = 5
    q_samples: int = 100
    competence_samples: int = 20
    top_up_factor: int = 20


@dataclass(frozen=True)
class ExcelSettings:
    header_color: str = COLOR_PALE_BLUE
    auto_fit_columns: bool = True
    freeze_panes: bool = True


@dataclass(frozen=True)
class Settings:
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    lemke_max_iterations: int = DEFAULT_LEMKE_MAX_ITERATIONS
    input_encoding: str = 'auto'
    verify: VerifySettings = field(default_factory=VerifySettings)
    excel_formatting: ExcelSettings = field(default_factory=ExcelSettings)


_active_settings: Optional[Settings] = None


def _settings_from_dict(raw: Dict[str, Any]) -> Settings:
    verify = VerifySettings(**raw.get('verify', {}))
    excel_raw = dict(raw.get('excel_formatting', {}))
    if 'header_color' in excel_raw:
        excel_raw['header_color'] = str(excel_raw['header_color']).lstrip('#')
    excel = ExcelSettings(**excel_raw)
    top_level = {
        key: raw[key]
        for key in ('enumeration_cap', 'lemke_max_iterations', 'input_encoding')
        if key in raw
    }
    return Settings(verify=verify, excel_formatting=excel, **top_level)


def load_settings(config_path: Optional[str] = None) -> Settings:
    """
    Loads settings and makes them the active settings for the process.

    Args:
        config_path (str): Path to a JSON config file. When omitted the default
            config file is used if it exists.

    Returns:
        Settings: The loaded settings.

    Raises:
        FileNotFoundError: If an explicitly given config file doesn't exist.
        ValueError: If the config file holds unknown keys or COMPMAT_NMAX is not an integer.
    """
    global _active_settings

    settings = Settings()
    path = Path(config_path) if config_path else Path(DEFAULT_CONFIG_PATH)
    if path.exists():
        try:
            with open(path, 'r', encoding='utf-8') as handle:
                settings = _settings_from_dict(json.load(handle))
            logging.info(f"Loaded configuration from {path}")
        except (TypeError, json.JSONDecodeError) as e:
            logging.error(f"Error reading configuration {path}: {e}")
            raise ValueError(f"invalid configuration file {path}: {e}") from e
    elif config_path:
        raise FileNotFoundError(f"Config file not found: {config_path}")

    env_cap = os.environ.get(ENV_NMAX)
    if env_cap:
        try:
            settings = replace(settings, enumeration_cap=int(env_cap))
        except ValueError as e:
            raise ValueError(f"{ENV_NMAX} must be an integer, got {env_cap!r}") from e
        logging.info(f"Enumeration cap overridden by {ENV_NMAX}: {settings.enumeration_cap}")

    _active_settings = settings
    return settings


def get_settings() -> Settings:
    """Returns the active settings, loading the defaults on first use."""
    if _active_settings is None:
        return load_settings()
    return _active_settings


def check_enumeration_cap(n: int) -> None:
    """
    Guards every operation that enumerates all 2^n index subsets.

    Raises:
        CapExceeded: If n is above the active enumeration cap.
    """
    cap = get_settings().enumeration_cap
    if n > cap:
        raise CapExceeded(n, cap)
