"""Tests for the pitch classifier."""

import numpy as np
import pytest

from core.exceptions import (
    ArtifactNotFoundError,
    ConfigurationError,
    DatasetError,
    ShapeMismatchError,
)
from core.models import SpectralImage
from core.schemas.classifier import ClassifierConfig
from core.services.classifier import (
    PitchClassifier,
    features,
    fit_classifier,
    predict,
    predicted_pitches,
    train_classifier,
)
from core.services.spectral import preset_config
from tests.conftest import DESK_PITCHES

SMALL = ClassifierConfig(channels=(4, 4, 4, 4), steps=3, batch_size=4, seed=1)


class TestPredict:
    """Test cases for ``predict`` and ``features``."""

    def test_probabilities_are_rows_of_a_simplex(self, desk_classifier, desk_images):
        probs = predict(desk_classifier, desk_images)

        assert probs.shape == (8, 61)
        np.testing.assert_allclose(probs.sum(axis=1), 1.0, atol=1e-5)

    def test_feature_width_is_the_last_block(self, desk_classifier, desk_images):
        assert features(desk_classifier, desk_images).shape == (8, 4)

    def test_spectral_image_lists_are_accepted(self, desk_classifier, desk_images, desk_representation):
        images = [SpectralImage(data, desk_representation) for data in desk_images[:2]]

        np.testing.assert_allclose(
            predict(desk_classifier, images), predict(desk_classifier, desk_images[:2]), atol=1e-6
        )

    def test_phase_channel_is_ignored(self, desk_classifier, desk_images):
        scrambled = desk_images.copy()
        scrambled[..., 1] = np.random.default_rng(0).uniform(-1, 1, size=scrambled[..., 1].shape)

        np.testing.assert_array_equal(
            predict(desk_classifier, scrambled), predict(desk_classifier, desk_images)
        )

    def test_wrong_image_shape_is_rejected(self, desk_classifier):
        with pytest.raises(ShapeMismatchError):
            predict(desk_classifier, np.zeros((2, 16, 64, 2)))

    def test_predicted_pitches_are_midi(self):
        probs = np.zeros((2, 61))
        probs[0, 0] = probs[1, 60] = 1.0

        np.testing.assert_array_equal(predicted_pitches(probs), [24, 84])


class TestFitClassifier:
    """Test cases for ``fit_classifier`` and ``train_classifier``."""

    def test_single_pitch_is_rejected(self, desk_images, desk_representation):
        with pytest.raises(DatasetError):
            fit_classifier(desk_images, np.zeros(8, dtype=int), SMALL, desk_representation)

    def test_training_is_seeded(self, desk_images, desk_representation):
        labels = np.array(DESK_PITCHES * 2) - 24

        first, loss_a = fit_classifier(desk_images, labels, SMALL, desk_representation)
        second, loss_b = fit_classifier(desk_images, labels, SMALL, desk_representation)

        assert loss_a == loss_b
        np.testing.assert_array_equal(predict(first, desk_images), predict(second, desk_images))

    def test_report_covers_both_splits(self, desk_images, desk_representation):
        pitches = list(DESK_PITCHES * 2)

        _, report = train_classifier(
            desk_images[:6], pitches[:6], desk_images[6:], pitches[6:], SMALL, desk_representation
        )

        assert (report.n_train, report.n_test) == (6, 2)
        assert report.pitches == sorted(DESK_PITCHES)
        assert np.isfinite(report.final_loss)

    def test_undivisible_image_size_is_rejected(self):
        representation = preset_config("desk").model_copy(update={"n_frames": 20})

        with pytest.raises(ConfigurationError):
            PitchClassifier.initialize(SMALL, representation)


class TestPersistence:
    """Test cases for ``PitchClassifier.save`` and ``load``."""

    def test_saved_classifier_predicts_identically(self, tmp_path, desk_classifier, desk_images):
        desk_classifier.save(tmp_path / "classifier")

        restored = PitchClassifier.load(tmp_path / "classifier")

        assert restored.config == desk_classifier.config
        np.testing.assert_array_equal(
            predict(restored, desk_images), predict(desk_classifier, desk_images)
        )

    def test_missing_checkpoint_is_reported(self, tmp_path):
        with pytest.raises(ArtifactNotFoundError):
            PitchClassifier.load(tmp_path / "absent")
