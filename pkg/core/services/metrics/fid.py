"""Frechet distance between Gaussians fitted to two feature sets."""

import numpy as np
from scipy import linalg

from core.constants.training import FID_REGULARIZATION
from core.exceptions import MetricInputError


def _moments(features: np.ndarray, name: str) -> tuple[np.ndarray, np.ndarray]:
    features = np.asarray(features, dtype=np.float64)
    if features.ndim != 2 or len(features) < 2:
        raise MetricInputError(f"{name} needs at least 2 feature rows, got shape {features.shape}")
    if not np.all(np.isfinite(features)):
        raise MetricInputError(f"{name} contains NaN or Inf")
    n, d = features.shape
    covariance = np.atleast_2d(np.cov(features, rowvar=False))
    if n <= d:
        covariance = covariance + FID_REGULARIZATION * np.eye(d)
    return features.mean(axis=0), covariance


def _psd_sqrt(matrix: np.ndarray) -> np.ndarray:
    values, vectors = linalg.eigh((matrix + matrix.T) / 2.0)
    return (vectors * np.sqrt(np.clip(values, 0.0, None))) @ vectors.T


def frechet_distance(
    mu_a: np.ndarray, cov_a: np.ndarray, mu_b: np.ndarray, cov_b: np.ndarray
) -> float:
    """``|mu_a - mu_b|^2 + Tr(cov_a + cov_b - 2 (cov_a cov_b)^(1/2))``.

    The trace of the product's square root is taken from the eigenvalues of
    the symmetric ``cov_a^(1/2) cov_b cov_a^(1/2)``; small negative
    eigenvalues are clamped to zero.
    """
    root_a = _psd_sqrt(cov_a)
    inner = root_a @ cov_b @ root_a
    eigenvalues = linalg.eigvalsh((inner + inner.T) / 2.0)
    trace_sqrt = float(np.sum(np.sqrt(np.clip(eigenvalues, 0.0, None))))
    diff = mu_a - mu_b
    value = float(diff @ diff + np.trace(cov_a) + np.trace(cov_b) - 2.0 * trace_sqrt)
    return max(value, 0.0)


def fid(features_a: np.ndarray, features_b: np.ndarray) -> float:
    """FID between two (n, d) feature matrices.

    Raises:
        MetricInputError: On fewer than 2 rows, non-finite values, or
            mismatched feature widths.
    """
    mu_a, cov_a = _moments(features_a, "first feature set")
    mu_b, cov_b = _moments(features_b, "second feature set")
    if mu_a.shape != mu_b.shape:
        raise MetricInputError(f"feature widths differ: {mu_a.shape[0]} vs {mu_b.shape[0]}")
    return frechet_distance(mu_a, cov_a, mu_b, cov_b)
