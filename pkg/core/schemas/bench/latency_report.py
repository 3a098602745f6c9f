"""Schema for the generation latency benchmark."""

from pydantic import Field

from core.schemas.base_schema_model import BaseSchemaModel


class LatencyMeasurement(BaseSchemaModel):
    """Timing of one batch size.

    Attributes:
        batch_size: Examples generated per forward pass.
        repeats: Timed repetitions (best-of is reported).
        total_seconds: Wall-clock of the best forward pass.
        per_sample_seconds: ``total_seconds / batch_size``.
    """

    batch_size: int = Field(..., ge=1)
    repeats: int = Field(..., ge=1)
    total_seconds: float = Field(..., ge=0.0)
    per_sample_seconds: float = Field(..., ge=0.0)


class LatencyReport(BaseSchemaModel):
    """Generation and decode latency for a trained generator.

    Attributes:
        image_shape: Shape of one generated spectral image.
        audio_seconds: Duration of audio one image decodes to.
        generation: Per-batch-size generator timings.
        decode_per_sample_seconds: Spectral decode time per example.
        forward_passes_per_sample: Generator calls needed per example (1).
    """

    image_shape: tuple[int, int, int]
    audio_seconds: float = Field(..., gt=0.0)
    generation: list[LatencyMeasurement] = Field(..., min_length=1)
    decode_per_sample_seconds: float = Field(..., ge=0.0)
    forward_passes_per_sample: int = Field(default=1, ge=1)

    def to_text(self) -> str:
        """Human-readable report, one line per measurement."""
        lines = [
            f"image shape {self.image_shape}, {self.audio_seconds:.3f} s of audio "
            f"per sample, {self.forward_passes_per_sample} forward pass per batch"
        ]
        for m in self.generation:
            lines.append(
                f"generate batch={m.batch_size:<4d} total={m.total_seconds * 1e3:9.2f} ms"
                f"  per-sample={m.per_sample_seconds * 1e3:9.2f} ms"
            )
        lines.append(
            f"decode   per-sample={self.decode_per_sample_seconds * 1e3:9.2f} ms"
        )
        return "\n".join(lines)
