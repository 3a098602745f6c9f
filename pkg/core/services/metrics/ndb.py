"""Number of statistically different bins (NDB).

Training examples are clustered with k-means; a generated set is assigned
to the same cells and every cell whose generated proportion differs
significantly from its training proportion counts as one bin.
"""

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import structlog
from scipy.cluster.vq import kmeans2, vq
from scipy.stats import norm

from core.constants.training import NDB_CLUSTERS, NDB_POOL, NDB_SIGNIFICANCE
from core.exceptions import MetricInputError

logger = structlog.get_logger(__name__)

NDB_CSV_COLUMNS = ("cell", "train_proportion", "generated_proportion", "z", "p_value", "significant")
_MAX_RESEEDS = 10


@dataclass(frozen=True)
class NdbModel:
    """Voronoi cells fitted on training examples.

    Attributes:
        centroids: (k, d) cell centers in feature space.
        train_proportions: Fraction of training examples per cell.
        n_train: Number of training examples.
        significance: Test level alpha.
        pool: Mean-pool factor applied to images before clustering.
    """

    centroids: np.ndarray
    train_proportions: np.ndarray
    n_train: int
    significance: float = NDB_SIGNIFICANCE
    pool: int = NDB_POOL

    @property
    def k(self) -> int:
        return len(self.centroids)


@dataclass(frozen=True)
class NdbResult:
    """Per-cell outcome of an NDB test."""

    count: int
    significant: np.ndarray
    train_proportions: np.ndarray
    generated_proportions: np.ndarray
    z_scores: np.ndarray
    p_values: np.ndarray

    def write_csv(self, path: str | Path) -> Path:
        """One row per cell, for bin-proportion histograms."""
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        with target.open("w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(NDB_CSV_COLUMNS)
            for cell in range(len(self.significant)):
                writer.writerow(
                    [
                        cell,
                        f"{self.train_proportions[cell]:.6f}",
                        f"{self.generated_proportions[cell]:.6f}",
                        f"{self.z_scores[cell]:.6f}",
                        f"{self.p_values[cell]:.6g}",
                        int(self.significant[cell]),
                    ]
                )
        return target


def ndb_features(samples: np.ndarray, pool: int = NDB_POOL) -> np.ndarray:
    """Flattened points for clustering.

    (N, frames, bins, 2) images are reduced to their normalized magnitude
    channel, mean-pooled by ``pool`` along both axes when the sizes allow it.
    (N, d) arrays are taken as features already.
    """
    samples = np.asarray(samples, dtype=np.float64)
    if samples.ndim == 2:
        return samples
    if samples.ndim != 4:
        raise MetricInputError(f"expected (N, d) features or (N, H, W, C) images, got {samples.shape}")
    magnitude = samples[..., 0]
    n, h, w = magnitude.shape
    if pool > 1 and h % pool == 0 and w % pool == 0:
        magnitude = magnitude.reshape(n, h // pool, pool, w // pool, pool).mean(axis=(2, 4))
    return magnitude.reshape(n, -1)


def _proportions(labels: np.ndarray, k: int) -> np.ndarray:
    return np.bincount(labels, minlength=k) / len(labels)


def fit_ndb(
    train_samples: np.ndarray,
    k: int = NDB_CLUSTERS,
    seed: int = 0,
    significance: float = NDB_SIGNIFICANCE,
    pool: int = NDB_POOL,
) -> NdbModel:
    """Cluster training samples into ``k`` cells with k-means++.

    A cell left empty is re-seeded at the point farthest from its current
    center and k-means is restarted from the repaired centers.

    Raises:
        MetricInputError: If there are fewer samples than cells.
    """
    points = ndb_features(train_samples, pool)
    if k < 1 or len(points) < k:
        raise MetricInputError(f"NDB needs at least k={k} training samples, got {len(points)}")
    centroids, _ = kmeans2(points, k, minit="++", seed=seed)
    labels, _ = vq(points, centroids)
    for _ in range(_MAX_RESEEDS):
        counts = np.bincount(labels, minlength=k)
        empty = np.flatnonzero(counts == 0)
        if empty.size == 0:
            break
        distances = np.linalg.norm(points - centroids[labels], axis=1)
        farthest = np.argsort(distances)[::-1][: empty.size]
        centroids[empty] = points[farthest]
        logger.debug("ndb_cells_reseeded", cells=empty.size)
        centroids, _ = kmeans2(points, centroids, minit="matrix", seed=seed)
        labels, _ = vq(points, centroids)
    model = NdbModel(
        centroids=centroids,
        train_proportions=_proportions(labels, k),
        n_train=len(points),
        significance=significance,
        pool=pool,
    )
    logger.info("ndb_fitted", k=k, n_train=len(points), dims=points.shape[1])
    return model


def ndb(model: NdbModel, generated_samples: np.ndarray) -> NdbResult:
    """Pooled two-proportion z-test per cell at the model's level.

    Raises:
        MetricInputError: If the generated set is empty or its features do
            not match the centroids.
    """
    points = ndb_features(generated_samples, model.pool)
    if len(points) == 0:
        raise MetricInputError("NDB needs a non-empty generated set")
    if points.shape[1] != model.centroids.shape[1]:
        raise MetricInputError(
            f"generated features have {points.shape[1]} dims, cells have {model.centroids.shape[1]}"
        )
    labels, _ = vq(points, model.centroids)
    generated = _proportions(labels, model.k)
    n1, n2 = model.n_train, len(points)
    p1 = model.train_proportions
    pooled = (n1 * p1 + n2 * generated) / (n1 + n2)
    se = np.sqrt(pooled * (1.0 - pooled) * (1.0 / n1 + 1.0 / n2))
    with np.errstate(divide="ignore", invalid="ignore"):
        z = np.where(se > 0, (p1 - generated) / se, 0.0)
    p_values = 2.0 * norm.sf(np.abs(z))
    significant = p_values < model.significance
    return NdbResult(
        count=int(significant.sum()),
        significant=significant,
        train_proportions=p1,
        generated_proportions=generated,
        z_scores=z,
        p_values=p_values,
    )
