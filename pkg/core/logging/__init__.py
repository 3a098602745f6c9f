"""Logging utilities for the spectral GAN toolkit."""

from core.logging.config import configure_logging, setup_logging
from core.logging.context import clear_run_id, get_run_id, set_run_id
from core.logging.filters import RunIDFilter

__all__ = [
    "RunIDFilter",
    "clear_run_id",
    "configure_logging",
    "get_run_id",
    "set_run_id",
    "setup_logging",
]
