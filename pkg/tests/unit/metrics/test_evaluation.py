"""Tests for the evaluation battery."""

import json

import numpy as np

from core.services.metrics import evaluate_images, generate_evaluation_set
from tests.conftest import DESK_PITCHES


class TestGenerateEvaluationSet:
    """Test cases for ``generate_evaluation_set``."""

    def test_one_image_per_pitch(self, tiny_gan):
        pitches = [60] * 40 + [48] * 3

        images = generate_evaluation_set(tiny_gan, pitches, seed=0)

        assert images.shape == (43, 16, 128, 2)

    def test_seeded(self, tiny_gan):
        first = generate_evaluation_set(tiny_gan, [48, 60], seed=2)
        second = generate_evaluation_set(tiny_gan, [48, 60], seed=2)

        np.testing.assert_array_equal(first, second)


class TestEvaluateImages:
    """Test cases for ``evaluate_images``."""

    def test_real_images_against_themselves(self, desk_images, desk_classifier):
        result = evaluate_images(
            desk_images,
            list(DESK_PITCHES * 2),
            desk_images,
            desk_classifier,
            k=4,
            label="real",
        )

        report = result.report
        assert report.ndb == 0
        assert report.ndb_k == 4
        assert report.fid < 1e-6
        assert 1.0 <= report.is_score <= 61.0
        assert 0.0 <= report.pitch_accuracy <= 1.0
        assert report.n_generated == report.n_reference == 8

    def test_cell_count_is_capped_by_the_reference_size(self, desk_images, desk_classifier):
        result = evaluate_images(
            desk_images[:4], list(DESK_PITCHES), desk_images, desk_classifier, k=50
        )

        assert result.report.ndb_k == 8

    def test_write_produces_report_table_and_bins(
        self, tmp_path, tiny_gan, desk_images, desk_classifier
    ):
        pitches = list(DESK_PITCHES)
        generated = generate_evaluation_set(tiny_gan, pitches, seed=0)
        result = evaluate_images(
            generated, pitches, desk_images, desk_classifier, k=4, label="tiny", representation="desk"
        )

        paths = result.write(tmp_path)

        assert set(paths) == {"json", "table", "ndb"}
        payload = json.loads(paths["json"].read_text())
        assert payload["label"] == "tiny"
        assert payload["ndbK"] == 4
        table = paths["table"].read_text().splitlines()
        assert table[0].split() == ["Model", "NDB", "FID", "IS", "PA", "PE"]
        assert table[1].startswith("tiny")
