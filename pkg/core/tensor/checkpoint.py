"""Named-tensor container: a little-endian float32 ``.bin`` plus JSON manifest."""

from collections.abc import Mapping
from pathlib import Path
from typing import Any

import numpy as np
import structlog

from core.exceptions import ArtifactNotFoundError, ShapeMismatchError
from core.schemas.checkpoint import CheckpointManifest, TensorEntry

logger = structlog.get_logger(__name__)

PAYLOAD_DTYPE = np.dtype("<f4")


def container_paths(stem: str | Path) -> tuple[Path, Path]:
    """Payload and manifest paths for a container stem (suffix ignored)."""
    base = Path(stem)
    if base.suffix in (".bin", ".json"):
        base = base.with_suffix("")
    return base.with_name(base.name + ".bin"), base.with_name(base.name + ".json")


def save_tensors(
    stem: str | Path,
    tensors: Mapping[str, np.ndarray],
    metadata: Mapping[str, Any] | None = None,
) -> Path:
    """Write tensors in insertion order.

    Args:
        stem: Output path without suffix; ``.bin`` and ``.json`` are added.
        tensors: Arrays keyed by name; converted to float32.
        metadata: JSON-serializable extras stored in the manifest.

    Returns:
        Path of the manifest.
    """
    bin_path, manifest_path = container_paths(stem)
    bin_path.parent.mkdir(parents=True, exist_ok=True)
    entries = []
    offset = 0
    with bin_path.open("wb") as payload:
        for name, array in tensors.items():
            flat = np.ascontiguousarray(array, dtype=PAYLOAD_DTYPE).reshape(-1)
            payload.write(flat.tobytes())
            entries.append(
                TensorEntry(
                    name=name,
                    shape=list(np.shape(array)),
                    offset=offset,
                    count=flat.size,
                )
            )
            offset += flat.size
    manifest = CheckpointManifest(tensors=entries, metadata=dict(metadata or {}))
    manifest.write_json(manifest_path)
    logger.info(
        "Saved tensor container",
        path=str(manifest_path),
        tensors=len(entries),
        elements=offset,
    )
    return manifest_path


def load_tensors(stem: str | Path) -> tuple[dict[str, np.ndarray], dict[str, Any]]:
    """Read a container written by ``save_tensors``.

    Args:
        stem: Container path with or without suffix.

    Returns:
        (arrays keyed by name in float32, manifest metadata)

    Raises:
        ArtifactNotFoundError: If the payload or manifest is missing.
        ShapeMismatchError: If the payload is shorter than the manifest says.
    """
    bin_path, manifest_path = container_paths(stem)
    if not bin_path.is_file():
        raise ArtifactNotFoundError(str(bin_path), kind="checkpoint payload")
    manifest = CheckpointManifest.read_json(manifest_path)
    payload = np.fromfile(bin_path, dtype=PAYLOAD_DTYPE)
    arrays: dict[str, np.ndarray] = {}
    for entry in manifest.tensors:
        end = entry.offset + entry.count
        if end > payload.size:
            raise ShapeMismatchError(
                f"load_tensors({entry.name})", (payload.size,), (end,),
                component="checkpoint",
            )
        arrays[entry.name] = (
            payload[entry.offset : end].astype(np.float32).reshape(entry.shape)
        )
    return arrays, manifest.metadata
