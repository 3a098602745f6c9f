"""Checkpoint schemas."""

from core.schemas.checkpoint.checkpoint_manifest import (
    CHECKPOINT_FORMAT_VERSION,
    CheckpointManifest,
    TensorEntry,
)

__all__ = ["CHECKPOINT_FORMAT_VERSION", "CheckpointManifest", "TensorEntry"]
