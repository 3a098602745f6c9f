"""Schemas for the core app."""

from core.schemas.bench import LatencyMeasurement, LatencyReport
from core.schemas.checkpoint import CheckpointManifest, TensorEntry
from core.schemas.classifier import ClassifierConfig, ClassifierReport
from core.schemas.dataset import DatasetManifest, NoteRecord, TimbreParams
from core.schemas.gan import (
    GanConfig,
    LossReport,
    ScheduleState,
    TrainSchedule,
)
from core.schemas.metrics import MetricReport
from core.schemas.spectral import NormalizationStats, RepresentationConfig

__all__ = [
    "CheckpointManifest",
    "ClassifierConfig",
    "ClassifierReport",
    "DatasetManifest",
    "GanConfig",
    "LatencyMeasurement",
    "LatencyReport",
    "LossReport",
    "MetricReport",
    "NormalizationStats",
    "NoteRecord",
    "RepresentationConfig",
    "ScheduleState",
    "TensorEntry",
    "TimbreParams",
    "TrainSchedule",
]
