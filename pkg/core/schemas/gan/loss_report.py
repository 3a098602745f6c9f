"""Schema for one training step's losses."""

from pydantic import Field

from core.schemas.base_schema_model import BaseSchemaModel

LOSS_CSV_COLUMNS = (
    "step",
    "d_loss",
    "g_loss",
    "gp",
    "acgan_real",
    "acgan_fake",
    "alpha",
    "stage",
)


class LossReport(BaseSchemaModel):
    """Losses of a discriminator + generator update pair.

    Attributes:
        step: Training step index (0-based).
        stage: Network stage trained at this step.
        alpha: Blend coefficient used at this step.
        d_loss: Total discriminator objective.
        g_loss: Total generator objective.
        gp: Gradient penalty (unweighted).
        acgan_real: Classifier cross-entropy on real examples.
        acgan_fake: Classifier cross-entropy on generated examples (G step).
        wasserstein: Critic estimate D(real) - D(fake).
        examples_seen: Examples consumed after this step.
    """

    step: int = Field(..., ge=0)
    stage: int = Field(..., ge=0)
    alpha: float = Field(..., ge=0.0, le=1.0)
    d_loss: float
    g_loss: float
    gp: float
    acgan_real: float
    acgan_fake: float
    wasserstein: float = 0.0
    examples_seen: int = Field(default=0, ge=0)

    def csv_row(self) -> list[str]:
        """Values in ``LOSS_CSV_COLUMNS`` order."""
        return [
            str(self.step),
            f"{self.d_loss:.6f}",
            f"{self.g_loss:.6f}",
            f"{self.gp:.6f}",
            f"{self.acgan_real:.6f}",
            f"{self.acgan_fake:.6f}",
            f"{self.alpha:.6f}",
            str(self.stage),
        ]
