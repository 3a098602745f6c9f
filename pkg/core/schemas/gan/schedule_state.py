"""Schema for a point on the training schedule."""

from pydantic import Field

from core.enums import SchedulePhase
from core.schemas.base_schema_model import BaseSchemaModel


class ScheduleState(BaseSchemaModel):
    """Stage and blend coefficient for a number of examples seen.

    Attributes:
        stage: Network stage being trained.
        alpha: Blend coefficient of the newest block in [0, 1].
        phase: Blend or stabilize.
        entry: Index of the schedule entry.
        done: Whether the full budget has been consumed.
    """

    stage: int = Field(..., ge=0)
    alpha: float = Field(..., ge=0.0, le=1.0)
    phase: SchedulePhase
    entry: int = Field(..., ge=0)
    done: bool = Field(default=False)
