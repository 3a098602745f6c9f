"""Tests for inception score, pitch accuracy and pitch entropy."""

import numpy as np
import pytest

from core.exceptions import MetricInputError
from core.services.dataset import one_hot_pitches
from core.services.metrics import check_simplex, inception_score, pitch_accuracy_entropy

ALL_PITCHES = list(range(24, 85))


class TestInceptionScore:
    """Test cases for ``inception_score``."""

    def test_uniform_predictions_score_one(self):
        assert inception_score(np.full((10, 61), 1 / 61)) == pytest.approx(1.0)

    def test_one_confident_prediction_per_class_scores_class_count(self):
        assert inception_score(np.eye(61)) == pytest.approx(61.0)

    def test_collapsed_predictions_score_one(self):
        probs = np.zeros((20, 61))
        probs[:, 7] = 1.0

        assert inception_score(probs) == pytest.approx(1.0)

    def test_bounded_by_class_count(self, rng):
        probs = rng.dirichlet(np.full(61, 0.1), size=200)

        assert 1.0 <= inception_score(probs) <= 61.0


class TestPitchAccuracyEntropy:
    """Test cases for ``pitch_accuracy_entropy``."""

    def test_perfect_uniform_coverage(self):
        accuracy, entropy = pitch_accuracy_entropy(np.eye(61), np.array(ALL_PITCHES))

        assert accuracy == 1.0
        assert entropy == pytest.approx(np.log(61))

    def test_one_hot_labels_are_accepted(self):
        accuracy, _ = pitch_accuracy_entropy(np.eye(61), one_hot_pitches(ALL_PITCHES))

        assert accuracy == 1.0

    def test_collapsed_predictions(self):
        probs = np.zeros((4, 61))
        probs[:, 36] = 1.0

        accuracy, entropy = pitch_accuracy_entropy(probs, np.array([60, 60, 62, 64]))

        assert accuracy == 0.5
        assert entropy == pytest.approx(0.0)

    def test_label_count_must_match(self):
        with pytest.raises(MetricInputError):
            pitch_accuracy_entropy(np.eye(61)[:3], np.array([60, 61]))


class TestCheckSimplex:
    """Test cases for ``check_simplex``."""

    @pytest.mark.parametrize(
        "probs",
        [
            np.array([[0.5, 0.6]]),
            np.array([[1.5, -0.5]]),
            np.array([0.5, 0.5]),
            np.empty((0, 3)),
        ],
    )
    def test_non_simplex_rows_are_rejected(self, probs):
        with pytest.raises(MetricInputError):
            check_simplex(probs)

    def test_tolerates_float32_rounding(self):
        probs = np.full((3, 61), 1 / 61, dtype=np.float32)

        assert check_simplex(probs).dtype == np.float64
