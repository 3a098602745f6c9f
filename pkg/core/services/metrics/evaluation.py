"""Full metric battery for a generated (or held-out real) set."""

from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import structlog

from core.constants.training import NDB_CLUSTERS
from core.schemas.metrics import MetricReport
from core.services.classifier import PitchClassifier, features, predict
from core.services.gan.model import GanModel
from core.services.gan.sampling import generate_batch, sample_latent
from core.services.metrics.fid import fid
from core.services.metrics.ndb import NdbResult, fit_ndb, ndb
from core.services.metrics.scores import inception_score, pitch_accuracy_entropy

logger = structlog.get_logger(__name__)

REPORT_JSON = "metrics.json"
REPORT_TABLE = "metrics.txt"
NDB_CSV = "ndb_bins.csv"
GENERATION_CHUNK = 32


@dataclass(frozen=True)
class EvaluationResult:
    report: MetricReport
    ndb: NdbResult

    def write(self, out_dir: str | Path) -> dict[str, Path]:
        """Write the JSON report, the text table and the NDB bin CSV."""
        root = Path(out_dir)
        root.mkdir(parents=True, exist_ok=True)
        table = root / REPORT_TABLE
        table.write_text(self.report.to_table() + "\n")
        return {
            "json": self.report.write_json(root / REPORT_JSON),
            "table": table,
            "ndb": self.ndb.write_csv(root / NDB_CSV),
        }


def generate_evaluation_set(
    model: GanModel, pitches: Sequence[int], seed: int
) -> np.ndarray:
    """One generated image per requested pitch, in chunks of 32."""
    latents = sample_latent(len(pitches), model.config, seed)
    chunks = [
        generate_batch(
            model,
            latents[start : start + GENERATION_CHUNK],
            list(pitches[start : start + GENERATION_CHUNK]),
        )
        for start in range(0, len(pitches), GENERATION_CHUNK)
    ]
    return np.concatenate(chunks)


def evaluate_images(
    images: np.ndarray,
    pitches: Sequence[int],
    reference: np.ndarray,
    classifier: PitchClassifier,
    k: int = NDB_CLUSTERS,
    seed: int = 0,
    label: str = "model",
    representation: str = "",
) -> EvaluationResult:
    """NDB, FID, IS, PA and PE of ``images`` against a reference set.

    Args:
        images: (N, frames, bins, 2) evaluated images.
        pitches: MIDI pitch each image should have.
        reference: Real (training) images defining the NDB cells and the
            reference feature distribution.
        classifier: Pitch classifier supplying probabilities and features.
        k: NDB cell count; reduced to the reference size when larger.
        seed: k-means seed.
        label: Row label of the report.
        representation: Representation name echoed in the report.
    """
    if k > len(reference):
        logger.warning("ndb_k_reduced", requested=k, reference=len(reference))
        k = len(reference)
    probabilities = predict(classifier, images)
    accuracy, pitch_entropy = pitch_accuracy_entropy(probabilities, np.asarray(pitches))
    ndb_result = ndb(fit_ndb(reference, k=k, seed=seed), images)
    report = MetricReport(
        label=label,
        ndb=ndb_result.count,
        ndb_k=k,
        fid=fid(features(classifier, images), features(classifier, reference)),
        is_score=inception_score(probabilities),
        pitch_accuracy=accuracy,
        pitch_entropy=pitch_entropy,
        n_generated=len(images),
        n_reference=len(reference),
        representation=representation,
        seed=seed,
    )
    logger.info("evaluation_finished", label=label, **report.columns())
    return EvaluationResult(report=report, ndb=ndb_result)
