"""Schema for spectral-image normalization statistics."""

from pydantic import Field

from core.schemas.base_schema_model import BaseSchemaModel


class NormalizationStats(BaseSchemaModel):
    """Affine maps taking raw image channels into [-0.8, 0.8].

    Each channel is normalized as ``(raw - shift) * scale``; ``shift`` is the
    midpoint of the fitted range and ``scale`` maps its half-width to 0.8.

    Attributes:
        mag_shift: Midpoint of the fitted log-magnitude range.
        mag_scale: Multiplier applied after shifting the log magnitude.
        ch1_shift: Midpoint of the fitted phase/IF range (units of pi).
        ch1_scale: Multiplier applied after shifting the phase/IF channel.
        n_examples: Number of waveforms the stats were fitted on.
    """

    mag_shift: float = Field(..., description="Log-magnitude range midpoint")
    mag_scale: float = Field(..., gt=0.0, description="Log-magnitude scale")
    ch1_shift: float = Field(..., description="Phase/IF range midpoint")
    ch1_scale: float = Field(..., gt=0.0, description="Phase/IF scale")
    n_examples: int = Field(default=0, ge=0, description="Fitting sample size")
