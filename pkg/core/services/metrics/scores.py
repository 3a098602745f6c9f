"""Classifier-probability metrics: inception-style score, pitch accuracy and entropy."""

import numpy as np
from scipy.special import rel_entr
from scipy.stats import entropy

from core.constants.audio import MIDI_LOW
from core.exceptions import MetricInputError
from core.services.dataset.pitch import check_pitch

SIMPLEX_TOLERANCE = 1e-5


def check_simplex(probs: np.ndarray) -> np.ndarray:
    """Return ``probs`` as float64 if every row is a probability vector.

    Raises:
        MetricInputError: On an empty or non-2-D array, negative entries or
            rows not summing to 1 within 1e-5.
    """
    probs = np.asarray(probs, dtype=np.float64)
    if probs.ndim != 2 or len(probs) == 0:
        raise MetricInputError(f"expected (n, classes) probabilities, got shape {probs.shape}")
    if np.any(probs < 0) or not np.all(np.isfinite(probs)):
        raise MetricInputError("probabilities must be finite and nonnegative")
    if np.max(np.abs(probs.sum(axis=1) - 1.0)) > SIMPLEX_TOLERANCE:
        raise MetricInputError("probability rows must sum to 1")
    return probs


def inception_score(probs: np.ndarray) -> float:
    """``exp(mean_i KL(p(y|x_i) || p(y)))`` with ``p(y)`` the row mean."""
    probs = check_simplex(probs)
    marginal = probs.mean(axis=0, keepdims=True)
    kl = rel_entr(probs, marginal).sum(axis=1)
    return float(np.exp(kl.mean()))


def _label_indices(labels: np.ndarray, n_classes: int) -> np.ndarray:
    labels = np.asarray(labels)
    if labels.ndim == 2:
        if labels.shape[1] != n_classes:
            raise MetricInputError(f"one-hot labels have {labels.shape[1]} classes, expected {n_classes}")
        return labels.argmax(axis=1)
    return np.array([check_pitch(p) - MIDI_LOW for p in labels], dtype=np.int64)


def pitch_accuracy_entropy(probs: np.ndarray, labels: np.ndarray) -> tuple[float, float]:
    """Pitch accuracy and the entropy (nats) of the mean prediction.

    Args:
        probs: (n, 61) classifier probabilities.
        labels: MIDI pitches (n,) or one-hot rows (n, 61).

    Returns:
        (PA, PE)

    Raises:
        MetricInputError: If the counts differ or rows are not simplex.
    """
    probs = check_simplex(probs)
    if len(labels) != len(probs):
        raise MetricInputError(f"{len(probs)} predictions but {len(labels)} labels")
    targets = _label_indices(labels, probs.shape[1])
    accuracy = float(np.mean(probs.argmax(axis=1) == targets))
    return accuracy, float(entropy(probs.mean(axis=0)))
