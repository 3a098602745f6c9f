"""Spectral representation schemas."""

from core.schemas.spectral.normalization_stats import NormalizationStats
from core.schemas.spectral.representation_config import RepresentationConfig

__all__ = ["NormalizationStats", "RepresentationConfig"]
