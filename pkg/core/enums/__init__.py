"""Enumerations for the core app."""

from core.enums.presets import RepresentationPreset
from core.enums.spectral import ChannelMode, FrequencyScale
from core.enums.training import SchedulePhase

__all__ = [
    "ChannelMode",
    "FrequencyScale",
    "RepresentationPreset",
    "SchedulePhase",
]
