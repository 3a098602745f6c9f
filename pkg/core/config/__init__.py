"""Lazy access to the active settings module.

The settings module is named by ``SPECGAN_SETTINGS_MODULE`` (default
``specgan.settings``) and imported on first use, so library code that never
touches settings does not trigger logging setup.
"""

import importlib
import os
from types import ModuleType

SETTINGS_ENV_VAR = "SPECGAN_SETTINGS_MODULE"
DEFAULT_SETTINGS_MODULE = "specgan.settings"

_settings: ModuleType | None = None


def get_settings() -> ModuleType:
    """Return the active settings module, importing it on first call.

    Returns:
        The imported settings module.
    """
    global _settings  # noqa: PLW0603
    if _settings is None:
        module_name = os.environ.get(SETTINGS_ENV_VAR, DEFAULT_SETTINGS_MODULE)
        _settings = importlib.import_module(module_name)
    return _settings


def reset_settings() -> None:
    """Forget the cached settings module (used by tests)."""
    global _settings  # noqa: PLW0603
    _settings = None
