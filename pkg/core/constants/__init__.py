"""Constants package for core application."""

from core.constants.audio import (
    CANONICAL_NUM_SAMPLES,
    LOG_MAG_FLOOR,
    MIDI_HIGH,
    MIDI_LOW,
    NORMALIZED_RANGE,
    PITCH_DIM,
    SAMPLE_RATE,
)
from core.constants.representations import REPRESENTATION_PRESETS
from core.constants.training import (
    ACGAN_WEIGHT,
    GP_WEIGHT,
    LATENT_DIM,
    LEAKY_RELU_SLOPE,
    LEARNING_RATE,
)

__all__ = [
    "ACGAN_WEIGHT",
    "CANONICAL_NUM_SAMPLES",
    "GP_WEIGHT",
    "LATENT_DIM",
    "LEAKY_RELU_SLOPE",
    "LEARNING_RATE",
    "LOG_MAG_FLOOR",
    "MIDI_HIGH",
    "MIDI_LOW",
    "NORMALIZED_RANGE",
    "PITCH_DIM",
    "REPRESENTATION_PRESETS",
    "SAMPLE_RATE",
]
