"""Spectral representation enumerations.

This module contains the enums that select how the second image channel is
derived and which frequency axis the image uses.
"""

from enum import Enum


class ChannelMode(str, Enum):
    """Source of the second (non-magnitude) image channel.

    PHASE stores the wrapped STFT phase scaled by 1/pi; IF stores the
    instantaneous frequency (wrapped frame-to-frame phase difference / pi).
    """

    PHASE = "phase"
    IF = "if"


class FrequencyScale(str, Enum):
    """Frequency axis of the spectral image."""

    LINEAR = "linear"
    MEL = "mel"
