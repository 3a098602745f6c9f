"""Schema for classifier training results."""

from pydantic import Field

from core.schemas.base_schema_model import BaseSchemaModel


class ClassifierReport(BaseSchemaModel):
    """Accuracy summary written after classifier training.

    Attributes:
        train_accuracy: Argmax accuracy on the training split.
        held_out_accuracy: Argmax accuracy on the test split.
        final_loss: Cross-entropy of the last training batch.
        n_train: Training examples.
        n_test: Held-out examples.
        pitches: Pitches present in the corpus.
    """

    train_accuracy: float = Field(..., ge=0.0, le=1.0)
    held_out_accuracy: float = Field(..., ge=0.0, le=1.0)
    final_loss: float
    n_train: int = Field(..., ge=0)
    n_test: int = Field(..., ge=0)
    pitches: list[int] = Field(default_factory=list)
