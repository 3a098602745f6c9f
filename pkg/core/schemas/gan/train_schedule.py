"""Schema for the progressive training schedule."""

from pydantic import Field

from core.schemas.base_schema_model import BaseSchemaModel


class TrainSchedule(BaseSchemaModel):
    """Per-stage example budgets.

    Stage ``s`` first blends for ``blend_examples[s]`` examples (alpha ramps
    linearly from 0 to 1) and then stabilizes for ``stabilize_examples[s]``
    examples with alpha held at 1. Stage 0 never blends.

    Attributes:
        stages: Network stage index trained in each schedule entry.
        blend_examples: Blend budget per schedule entry.
        stabilize_examples: Stabilize budget per schedule entry.
    """

    stages: list[int] = Field(..., min_length=1)
    blend_examples: list[int] = Field(..., min_length=1)
    stabilize_examples: list[int] = Field(..., min_length=1)

    @property
    def total_examples(self) -> int:
        """Examples needed to complete the schedule."""
        return sum(self.blend_examples) + sum(self.stabilize_examples)
