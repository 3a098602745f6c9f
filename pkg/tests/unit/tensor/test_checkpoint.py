"""Tests for the tensor container format."""

import numpy as np
import pytest

from core.exceptions import ArtifactNotFoundError, ShapeMismatchError
from core.tensor import Conv2d, load_tensors, save_tensors
from core.tensor.checkpoint import container_paths


class TestTensorContainer:
    """Test cases for ``save_tensors`` and ``load_tensors``."""

    def test_arrays_and_metadata_survive(self, tmp_path, rng):
        arrays = {"a.weight": rng.normal(size=(3, 3, 2, 4)), "a.bias": np.arange(4.0)}

        save_tensors(tmp_path / "model", arrays, {"kind": "test", "step": 3})
        loaded, metadata = load_tensors(tmp_path / "model")

        assert list(loaded) == ["a.weight", "a.bias"]
        np.testing.assert_allclose(loaded["a.weight"], arrays["a.weight"], rtol=1e-6)
        assert loaded["a.bias"].dtype == np.float32
        assert metadata == {"kind": "test", "step": 3}

    def test_payload_is_little_endian_float32(self, tmp_path):
        save_tensors(tmp_path / "x", {"v": np.array([1.0, 2.0])})
        bin_path, _ = container_paths(tmp_path / "x")

        assert bin_path.read_bytes() == np.array([1.0, 2.0], dtype="<f4").tobytes()

    def test_suffix_is_ignored(self, tmp_path):
        save_tensors(tmp_path / "x", {"v": np.ones(2)})

        loaded, _ = load_tensors(tmp_path / "x.json")

        assert "v" in loaded

    def test_missing_container_raises(self, tmp_path):
        with pytest.raises(ArtifactNotFoundError):
            load_tensors(tmp_path / "absent")

    def test_truncated_payload_raises(self, tmp_path):
        save_tensors(tmp_path / "x", {"v": np.ones(8)})
        bin_path, _ = container_paths(tmp_path / "x")
        bin_path.write_bytes(bin_path.read_bytes()[:8])

        with pytest.raises(ShapeMismatchError):
            load_tensors(tmp_path / "x")

    def test_module_state_restores(self, tmp_path, rng):
        conv = Conv2d(2, 3, 3, rng)
        save_tensors(tmp_path / "conv", conv.state_dict())
        other = Conv2d(2, 3, 3, np.random.default_rng(99))

        other.load_state_dict(load_tensors(tmp_path / "conv")[0])

        np.testing.assert_array_equal(other.weight.data, conv.weight.data)
