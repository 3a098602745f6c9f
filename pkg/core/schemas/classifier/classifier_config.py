"""Schema for the pitch classifier configuration."""

from pydantic import Field

from core.constants.audio import PITCH_DIM
from core.schemas.base_schema_model import BaseSchemaModel


class ClassifierConfig(BaseSchemaModel):
    """Pitch classifier architecture and training settings.

    Four 3x3 conv blocks, each followed by a 2x2 mean-pool, then global
    average pooling (the feature layer) and a dense softmax head.

    Attributes:
        channels: Output channels of the four conv blocks.
        n_classes: Number of pitch classes (61 for MIDI 24-84).
        learning_rate: ADAM learning rate.
        steps: Optimizer steps.
        batch_size: Examples per step.
        seed: Seed for initialization and batch sampling.
    """

    channels: tuple[int, int, int, int] = Field(default=(16, 32, 32, 64))
    n_classes: int = Field(default=PITCH_DIM, ge=2)
    learning_rate: float = Field(default=2e-3, gt=0.0)
    steps: int = Field(default=300, ge=1)
    batch_size: int = Field(default=32, ge=1)
    seed: int = Field(default=0, ge=0)

    @property
    def feature_dim(self) -> int:
        """Width of the feature (global-average-pool) layer."""
        return self.channels[-1]
