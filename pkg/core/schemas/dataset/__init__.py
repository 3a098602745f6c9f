"""Corpus schemas."""

from core.schemas.dataset.dataset_manifest import (
    MANIFEST_SCHEMA_VERSION,
    DatasetManifest,
)
from core.schemas.dataset.note_record import NoteRecord
from core.schemas.dataset.timbre_params import TimbreParams

__all__ = [
    "MANIFEST_SCHEMA_VERSION",
    "DatasetManifest",
    "NoteRecord",
    "TimbreParams",
]
