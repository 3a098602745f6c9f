"""Schema for GAN architecture and training configuration."""

from typing import Self

from pydantic import Field, model_validator

from core.constants.audio import PITCH_DIM
from core.constants.training import (
    ACGAN_WEIGHT,
    BATCH_SIZE,
    BLEND_EXAMPLES,
    CANONICAL_STAGE_COUNT,
    CHANNEL_SCHEDULE,
    GP_WEIGHT,
    HIRES_BASE_SHAPE,
    LATENT_DIM,
    LEARNING_RATE,
    STABILIZE_EXAMPLES,
)
from core.schemas.base_schema_model import BaseSchemaModel


class GanConfig(BaseSchemaModel):
    """Progressive pitch-conditional GAN configuration.

    At ``scale_factor`` 1 with the default schedule and 7 stages the networks
    reproduce the high-frequency-resolution architecture: base (2, 16), output
    (128, 1024, 2).

    Attributes:
        latent_dim: Size of the spherical Gaussian latent vector.
        pitch_dim: Size of the one-hot pitch conditioning vector.
        base_shape: (H0, W0) of the first generator block.
        stage_count: Number of resolution stages.
        channel_schedule: Full-scale channels per stage, lowest resolution first.
        scale_factor: Multiplier applied to every channel count.
        learning_rate: ADAM learning rate for both networks.
        acgan_weight: Weight of the auxiliary pitch-classification loss.
        gp_weight: Weight of the gradient penalty.
        batch_size: Examples per training step.
        blend_examples: Examples seen while alpha ramps in each new stage.
        stabilize_examples: Examples seen per stage with alpha held at 1.
        progressive: Grow resolution stage by stage; False trains the final
            resolution from the start.
        seed: Seed for parameter initialization and training randomness.
    """

    latent_dim: int = Field(default=LATENT_DIM, ge=1)
    pitch_dim: int = Field(default=PITCH_DIM, ge=1)
    base_shape: tuple[int, int] = Field(default=HIRES_BASE_SHAPE)
    stage_count: int = Field(default=CANONICAL_STAGE_COUNT, ge=1)
    channel_schedule: tuple[int, ...] = Field(default=CHANNEL_SCHEDULE)
    scale_factor: float = Field(default=1.0, gt=0.0, le=1.0)
    learning_rate: float = Field(default=LEARNING_RATE, gt=0.0)
    acgan_weight: float = Field(default=ACGAN_WEIGHT, ge=0.0)
    gp_weight: float = Field(default=GP_WEIGHT, ge=0.0)
    batch_size: int = Field(default=BATCH_SIZE, ge=1)
    blend_examples: int = Field(default=BLEND_EXAMPLES, ge=0)
    stabilize_examples: int = Field(default=STABILIZE_EXAMPLES, ge=1)
    progressive: bool = Field(default=True)
    seed: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _check_schedule(self) -> Self:
        """The channel schedule must cover every stage."""
        if len(self.channel_schedule) < self.stage_count:
            raise ValueError(
                f"channel_schedule has {len(self.channel_schedule)} entries "
                f"but stage_count is {self.stage_count}"
            )
        if any(c < 1 for c in self.channel_schedule):
            raise ValueError("channel counts must be positive")
        if any(d < 1 for d in self.base_shape):
            raise ValueError("base_shape dimensions must be positive")
        return self

    @classmethod
    def desk(cls, **overrides) -> "GanConfig":
        """Desk-scale configuration: 4 stages, base (2, 16), channels / 8.

        Args:
            **overrides: Field values replacing the desk defaults.

        Returns:
            The desk configuration producing (16, 128, 2) images.
        """
        values = {
            "stage_count": 4,
            "base_shape": (2, 16),
            "scale_factor": 0.125,
            "blend_examples": 800,
            "stabilize_examples": 800,
        }
        values.update(overrides)
        return cls(**values)

    def stage_channels(self, stage: int) -> int:
        """Channel count of the blocks at a given stage.

        Args:
            stage: Stage index, 0 = base resolution.

        Returns:
            Scaled channel count, at least 1.
        """
        return max(1, round(self.channel_schedule[stage] * self.scale_factor))

    def stage_shape(self, stage: int) -> tuple[int, int]:
        """Spatial (H, W) of the generator output at a stage."""
        h0, w0 = self.base_shape
        return (h0 * 2**stage, w0 * 2**stage)

    @property
    def final_stage(self) -> int:
        """Index of the last (full-resolution) stage."""
        return self.stage_count - 1

    @property
    def output_shape(self) -> tuple[int, int, int]:
        """Shape of the final generator output."""
        return (*self.stage_shape(self.final_stage), 2)
