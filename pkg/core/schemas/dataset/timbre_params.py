"""Schema for additive-synthesis timbre parameters."""

from pydantic import Field, field_validator

from core.constants.audio import ATTACK_SECONDS
from core.schemas.base_schema_model import BaseSchemaModel


class TimbreParams(BaseSchemaModel):
    """Parameters of a synthetic instrument timbre.

    Attributes:
        harmonic_amplitudes: Relative amplitude of harmonics 1..K (nonnegative).
        decay_rate: Exponential decay rate of the sustained note, 1/s.
        attack: Linear attack duration in seconds.
        inharmonicity: Stretch factor B in f_k = k * f0 * sqrt(1 + B k^2).
        detune_cents: Static detune of the whole note in cents.
    """

    harmonic_amplitudes: list[float] = Field(..., min_length=1, max_length=128)
    decay_rate: float = Field(default=1.0, ge=0.0)
    attack: float = Field(default=ATTACK_SECONDS, gt=0.0, le=0.5)
    inharmonicity: float = Field(default=0.0, ge=0.0, le=1e-2)
    detune_cents: float = Field(default=0.0, ge=-50.0, le=50.0)

    @field_validator("harmonic_amplitudes")
    @classmethod
    def _nonnegative(cls, value: list[float]) -> list[float]:
        """Reject negative amplitudes and all-zero spectra."""
        if any(a < 0 for a in value):
            raise ValueError("harmonic amplitudes must be nonnegative")
        if not any(a > 0 for a in value):
            raise ValueError("at least one harmonic must have positive amplitude")
        return value
