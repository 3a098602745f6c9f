"""Schema for the evaluation metric report."""

import math

from pydantic import Field

from core.schemas.base_schema_model import BaseSchemaModel

REPORT_COLUMNS = ("NDB", "FID", "IS", "PA", "PE")


class MetricReport(BaseSchemaModel):
    """NDB / FID / IS / PA / PE for a generated set against a reference set.

    Attributes:
        label: Row label (model or data source name).
        ndb: Number of statistically different bins.
        ndb_k: Number of NDB cells.
        fid: Frechet distance between classifier-feature Gaussians.
        is_score: Inception-style score from classifier probabilities.
        pitch_accuracy: Classifier accuracy against the conditioning pitches.
        pitch_entropy: Entropy (nats) of the mean predicted distribution.
        n_generated: Size of the evaluated set.
        n_reference: Size of the reference (training) set.
        representation: Name or summary of the representation config.
        seed: Seed the evaluation ran with.
    """

    label: str = Field(default="model")
    ndb: int = Field(..., ge=0)
    ndb_k: int = Field(..., ge=1)
    fid: float = Field(..., ge=0.0)
    is_score: float = Field(..., ge=1.0 - 1e-9)
    pitch_accuracy: float = Field(..., ge=0.0, le=1.0)
    pitch_entropy: float = Field(..., ge=0.0)
    n_generated: int = Field(..., ge=1)
    n_reference: int = Field(..., ge=1)
    representation: str = Field(default="")
    seed: int = Field(default=0)

    def columns(self) -> dict[str, float]:
        """The five metric values keyed by their table column."""
        return {
            "NDB": self.ndb,
            "FID": self.fid,
            "IS": self.is_score,
            "PA": self.pitch_accuracy,
            "PE": self.pitch_entropy,
        }

    def to_table(self) -> str:
        """Render the report as an aligned text table.

        Returns:
            Header row plus one data row, columns NDB FID IS PA PE.
        """
        label_width = max(len(self.label), len("Model"))
        header = f"{'Model':<{label_width}}  " + "  ".join(
            f"{c:>9}" for c in REPORT_COLUMNS
        )
        values = self.columns()
        cells = []
        for column in REPORT_COLUMNS:
            value = values[column]
            if column == "NDB":
                cells.append(f"{int(value):>9d}")
            elif math.isfinite(value):
                cells.append(f"{value:>9.3f}")
            else:
                cells.append(f"{'nan':>9}")
        row = f"{self.label:<{label_width}}  " + "  ".join(cells)
        return f"{header}\n{row}"
