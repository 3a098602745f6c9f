"""Spectral image model and its on-disk format.

An image is stored as a flat little-endian float32 file (``.f32``) next to a
JSON sidecar carrying the shape and the full representation config, including
normalization stats.
"""

from dataclasses import dataclass
from pathlib import Path

import numpy as np
from pydantic import Field

from core.exceptions import ArtifactNotFoundError, InvalidImageError
from core.schemas.base_schema_model import BaseSchemaModel
from core.schemas.spectral import RepresentationConfig


class SpectralImageSidecar(BaseSchemaModel):
    """JSON sidecar of a stored spectral image."""

    shape: list[int] = Field(..., min_length=3, max_length=3)
    dtype: str = Field(default="<f4")
    config: RepresentationConfig


@dataclass(frozen=True)
class SpectralImage:
    """A (frames, bins, 2) normalized image.

    Channel 0 is normalized log magnitude, channel 1 normalized phase or IF.

    Attributes:
        data: float32 array of shape ``config.image_shape``.
        config: Representation the image was encoded with.
    """

    data: np.ndarray
    config: RepresentationConfig

    def __post_init__(self):
        data = np.asarray(self.data, dtype=np.float32)
        if data.shape != self.config.image_shape:
            raise InvalidImageError(
                f"image shape {data.shape} does not match representation "
                f"shape {self.config.image_shape}"
            )
        object.__setattr__(self, "data", data)

    @property
    def magnitude(self) -> np.ndarray:
        return self.data[..., 0]

    @property
    def channel1(self) -> np.ndarray:
        return self.data[..., 1]

    def validate(self) -> "SpectralImage":
        """Reject non-finite entries and values outside [-1, 1].

        Raises:
            InvalidImageError: If any entry is NaN, Inf or out of range.
        """
        if not np.all(np.isfinite(self.data)):
            raise InvalidImageError("spectral image contains NaN or Inf")
        worst = float(np.max(np.abs(self.data)))
        if worst > 1.0 + 1e-6:
            raise InvalidImageError(
                f"spectral image values must lie in [-1, 1], found |x| = {worst:.4f}"
            )
        return self

    def save(self, path: str | Path) -> Path:
        """Write ``<path>.f32`` and ``<path>.json``; returns the ``.f32`` path."""
        data_path, sidecar_path = image_paths(path)
        data_path.parent.mkdir(parents=True, exist_ok=True)
        self.data.astype("<f4").tofile(data_path)
        SpectralImageSidecar(shape=list(self.data.shape), config=self.config).write_json(
            sidecar_path
        )
        return data_path

    @classmethod
    def load(cls, path: str | Path) -> "SpectralImage":
        """Read an image written by ``save``.

        Raises:
            ArtifactNotFoundError: If the data file or sidecar is missing.
            InvalidImageError: If the data size disagrees with the sidecar.
        """
        data_path, sidecar_path = image_paths(path)
        if not data_path.is_file():
            raise ArtifactNotFoundError(str(data_path), kind="spectral image")
        sidecar = SpectralImageSidecar.read_json(sidecar_path)
        flat = np.fromfile(data_path, dtype="<f4")
        expected = int(np.prod(sidecar.shape))
        if flat.size != expected:
            raise InvalidImageError(
                f"{data_path} holds {flat.size} values, sidecar expects {expected}"
            )
        return cls(flat.reshape(sidecar.shape).astype(np.float32), sidecar.config)


def image_paths(path: str | Path) -> tuple[Path, Path]:
    """Data and sidecar paths for an image path with or without suffix."""
    base = Path(path)
    if base.suffix in (".f32", ".json"):
        base = base.with_suffix("")
    return base.with_name(base.name + ".f32"), base.with_name(base.name + ".json")
