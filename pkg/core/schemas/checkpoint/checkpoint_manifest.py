"""Schema for the JSON manifest of a named-tensor container."""

from typing import Any

from pydantic import Field

from core.schemas.base_schema_model import BaseSchemaModel

CHECKPOINT_FORMAT_VERSION = 1


class TensorEntry(BaseSchemaModel):
    """Location of one tensor inside the ``.bin`` payload.

    Attributes:
        name: Dotted tensor name.
        shape: Tensor dimensions.
        offset: Start of the tensor in float32 elements.
        count: Number of float32 elements.
    """

    name: str = Field(..., min_length=1)
    shape: list[int] = Field(default_factory=list)
    offset: int = Field(..., ge=0)
    count: int = Field(..., ge=0)


class CheckpointManifest(BaseSchemaModel):
    """Names, shapes and offsets of a little-endian float32 payload.

    Attributes:
        format_version: Container layout version.
        dtype: Element type of the payload; always ``<f4``.
        tensors: Entries in payload order.
        metadata: Free-form JSON (configs, optimizer hyperparameters, step).
    """

    format_version: int = Field(default=CHECKPOINT_FORMAT_VERSION)
    dtype: str = Field(default="<f4")
    tensors: list[TensorEntry] = Field(default_factory=list)
    metadata: dict[str, Any] = Field(default_factory=dict)
