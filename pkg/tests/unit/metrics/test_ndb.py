"""Tests for the number of statistically different bins."""

import csv

import numpy as np
import pytest

from core.exceptions import MetricInputError
from core.services.metrics import fit_ndb, ndb, ndb_features


def blobs(rng, counts, spacing=20.0, dims=3):
    """Tight Gaussian blobs centered on a line, ``counts[i]`` points each."""
    points = [
        rng.normal(scale=0.3, size=(n, dims)) + spacing * i for i, n in enumerate(counts)
    ]
    return np.concatenate(points)


class TestFitNdb:
    """Test cases for ``fit_ndb``."""

    def test_cells_follow_blob_proportions(self, rng):
        model = fit_ndb(blobs(rng, [700, 300]), k=2, seed=1)

        np.testing.assert_allclose(sorted(model.train_proportions), [0.3, 0.7])
        assert model.n_train == 1000

    def test_same_seed_same_centroids(self, rng):
        points = rng.normal(size=(400, 4))

        first = fit_ndb(points, k=8, seed=3)
        second = fit_ndb(points, k=8, seed=3)

        np.testing.assert_array_equal(first.centroids, second.centroids)

    def test_no_cell_is_left_empty(self, rng):
        model = fit_ndb(blobs(rng, [50] * 5), k=5, seed=0)

        assert np.all(model.train_proportions > 0)

    def test_fewer_samples_than_cells_is_rejected(self, rng):
        with pytest.raises(MetricInputError):
            fit_ndb(rng.normal(size=(10, 2)), k=50)


class TestNdb:
    """Test cases for ``ndb``."""

    def test_training_set_against_itself_has_no_bins(self, rng):
        points = blobs(rng, [100] * 10)
        model = fit_ndb(points, k=10, seed=0)

        assert ndb(model, points).count == 0

    def test_fresh_draw_from_the_same_distribution_has_few_bins(self, rng):
        model = fit_ndb(blobs(rng, [100] * 10), k=10, seed=0)

        result = ndb(model, blobs(rng, [100] * 10))

        assert result.count <= 1

    def test_collapse_onto_one_cell_flags_every_cell(self, rng):
        model = fit_ndb(blobs(rng, [100] * 10), k=10, seed=0)
        collapsed = blobs(rng, [1000])

        result = ndb(model, collapsed)

        assert result.count == 10
        assert result.generated_proportions.max() == 1.0

    def test_feature_width_must_match(self, rng):
        model = fit_ndb(rng.normal(size=(50, 3)), k=5)

        with pytest.raises(MetricInputError):
            ndb(model, rng.normal(size=(10, 4)))

    def test_bins_csv_has_a_row_per_cell(self, tmp_path, rng):
        points = blobs(rng, [40, 40, 40])
        result = ndb(fit_ndb(points, k=3), points)

        path = result.write_csv(tmp_path / "ndb_bins.csv")

        with path.open() as handle:
            rows = list(csv.DictReader(handle))
        assert len(rows) == 3
        assert rows[0]["significant"] == "0"


class TestNdbFeatures:
    """Test cases for ``ndb_features``."""

    def test_feature_matrices_pass_through(self, rng):
        points = rng.normal(size=(6, 5))

        np.testing.assert_array_equal(ndb_features(points), points)

    def test_images_are_pooled_magnitudes(self):
        images = np.zeros((2, 16, 128, 2))
        images[..., 0] = 1.0
        images[..., 1] = 5.0

        features = ndb_features(images, pool=4)

        assert features.shape == (2, 4 * 32)
        assert np.all(features == 1.0)
