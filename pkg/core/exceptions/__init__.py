"""Exception handling utilities for the spectral GAN pipeline."""

from core.exceptions.handlers import handle_command_exception
from core.exceptions.synthesis_exceptions import (
    ArtifactNotFoundError,
    ConfigurationError,
    DatasetError,
    InvalidImageError,
    InvalidLatentError,
    InvalidWaveformError,
    MetricInputError,
    PitchOutOfRangeError,
    ShapeMismatchError,
    SynthesisError,
    TrainingDivergedError,
    UnfittedNormalizationError,
)

__all__ = [
    "ArtifactNotFoundError",
    "ConfigurationError",
    "DatasetError",
    "InvalidImageError",
    "InvalidLatentError",
    "InvalidWaveformError",
    "MetricInputError",
    "PitchOutOfRangeError",
    "ShapeMismatchError",
    "SynthesisError",
    "TrainingDivergedError",
    "UnfittedNormalizationError",
    "handle_command_exception",
]
