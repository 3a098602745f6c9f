"""Tests for latent sampling, interpolation and generation."""

import numpy as np
import pytest

from core.exceptions import ConfigurationError, InvalidLatentError, PitchOutOfRangeError
from core.schemas.gan import GanConfig
from core.services.gan import (
    GanModel,
    generate,
    generate_batch,
    interpolate,
    pitch_sequence,
    sample_latent,
    sequence_latents,
    slerp,
)


class TestSlerp:
    """Test cases for ``slerp``."""

    def test_endpoints_are_exact(self, rng):
        a, b = rng.normal(size=(2, 16))

        np.testing.assert_allclose(slerp(a, b, 0.0), a)
        np.testing.assert_allclose(slerp(a, b, 1.0), b)

    def test_orthogonal_midpoint(self):
        mid = slerp(np.array([1.0, 0.0]), np.array([0.0, 1.0]), 0.5)

        np.testing.assert_allclose(mid, [0.70711, 0.70711], atol=1e-5)

    def test_unit_vectors_stay_on_the_sphere(self, rng):
        a = rng.normal(size=(1000, 32))
        b = rng.normal(size=(1000, 32))
        a /= np.linalg.norm(a, axis=1, keepdims=True)
        b /= np.linalg.norm(b, axis=1, keepdims=True)
        t = rng.uniform(size=1000)

        norms = [np.linalg.norm(slerp(a[i], b[i], t[i])) for i in range(1000)]

        np.testing.assert_allclose(norms, 1.0, atol=1e-9)

    def test_nearly_parallel_inputs_fall_back_to_linear(self):
        a = np.array([1.0, 0.0])
        b = np.array([1.0, 1e-7])

        np.testing.assert_allclose(slerp(a, b, 0.5), [1.0, 5e-8])

    def test_antipodal_inputs_take_an_orthogonal_path(self, rng):
        a = rng.normal(size=16)
        a /= np.linalg.norm(a)
        path = [slerp(a, -a, t) for t in np.linspace(0.0, 1.0, 9)]

        np.testing.assert_allclose(path[0], a)
        np.testing.assert_allclose(path[-1], -a, atol=1e-12)
        np.testing.assert_allclose(path[4] @ a, 0.0, atol=1e-12)
        np.testing.assert_allclose([np.linalg.norm(z) for z in path], 1.0, atol=1e-9)

    @pytest.mark.parametrize(
        ("z1", "z2", "t"),
        [
            (np.zeros(4), np.ones(4), 0.5),
            (np.ones(4), np.ones(3), 0.5),
            (np.ones(4), np.arange(4.0), 1.5),
            (np.ones(1), -np.ones(1), 0.5),
        ],
    )
    def test_invalid_inputs_are_rejected(self, z1, z2, t):
        with pytest.raises(InvalidLatentError):
            slerp(z1, z2, t)


class TestSampleLatent:
    """Test cases for ``sample_latent`` and ``sequence_latents``."""

    def test_same_seed_same_latents(self):
        config = GanConfig.desk()

        first = sample_latent(3, config, seed=5)

        assert first.shape == (3, 256)
        np.testing.assert_array_equal(first, sample_latent(3, config, seed=5))

    def test_zero_count_is_rejected(self):
        with pytest.raises(InvalidLatentError):
            sample_latent(0, 8, seed=0)

    def test_fixed_latent_sequence_repeats_one_vector(self):
        latents = sequence_latents(5, 8, seed=2)

        assert latents.shape == (5, 8)
        assert np.all(latents == latents[0])

    def test_anchored_sequence_starts_and_ends_on_anchors(self):
        anchors = sample_latent(3, 8, seed=2)

        latents = sequence_latents(7, 8, seed=2, anchors=3)

        np.testing.assert_allclose(latents[0], anchors[0], atol=1e-6)
        np.testing.assert_allclose(latents[3], anchors[1], atol=1e-6)
        np.testing.assert_allclose(latents[-1], anchors[2], atol=1e-6)


class TestGenerate:
    """Test cases for conditional generation."""

    def test_images_are_deterministic_and_bounded(self, tiny_gan):
        z = sample_latent(1, tiny_gan.config, seed=1)[0]

        first = generate(tiny_gan, [48, 60, 72], z)
        second = generate(tiny_gan, [48, 60, 72], z)

        assert len(first) == 3
        for a, b in zip(first, second, strict=True):
            assert a.data.shape == (16, 128, 2)
            np.testing.assert_array_equal(a.data, b.data)
            assert np.all(np.abs(a.data) <= 1.0)

    def test_images_carry_the_model_representation(self, tiny_gan):
        z = sample_latent(1, tiny_gan.config, seed=1)[0]

        (image,) = generate(tiny_gan, [60], z)

        assert image.config == tiny_gan.representation

    def test_batch_rows_match_single_generation(self, tiny_gan):
        latents = sample_latent(2, tiny_gan.config, seed=4)

        batch = generate_batch(tiny_gan, latents, [50, 70])
        (single,) = generate(tiny_gan, [70], latents[1])

        np.testing.assert_allclose(batch[1], single.data, atol=1e-5)

    def test_out_of_range_pitch_is_rejected(self, tiny_gan):
        with pytest.raises(PitchOutOfRangeError):
            generate(tiny_gan, [100], sample_latent(1, tiny_gan.config, seed=0)[0])

    def test_unequal_latent_and_pitch_counts_are_rejected(self, tiny_gan):
        with pytest.raises(InvalidLatentError):
            generate_batch(tiny_gan, sample_latent(3, tiny_gan.config, seed=0), [60, 61])

    def test_growing_model_cannot_generate(self, desk_representation):
        model = GanModel(GanConfig.desk(scale_factor=1 / 32), desk_representation)

        with pytest.raises(ConfigurationError):
            generate(model, [60], sample_latent(1, model.config, seed=0)[0])


class TestInterpolateAndSequence:
    """Test cases for ``interpolate`` and ``pitch_sequence``."""

    def test_interpolation_endpoints_match_generation(self, tiny_gan):
        z1, z2 = sample_latent(2, tiny_gan.config, seed=9)

        path = interpolate(tiny_gan, z1, z2, steps=5, pitch=60)
        (start,) = generate(tiny_gan, [60], z1)
        (end,) = generate(tiny_gan, [60], z2)

        assert len(path) == 5
        np.testing.assert_allclose(path[0].data, start.data, atol=1e-5)
        np.testing.assert_allclose(path[-1].data, end.data, atol=1e-5)

    def test_interpolation_needs_two_steps(self, tiny_gan):
        z1, z2 = sample_latent(2, tiny_gan.config, seed=9)

        with pytest.raises(InvalidLatentError):
            interpolate(tiny_gan, z1, z2, steps=1, pitch=60)

    def test_sequence_audio_has_one_slot_per_note(self, tiny_gan):
        waveform, images = pitch_sequence(tiny_gan, [60, 64, 67], seed=0, note_seconds=0.05)

        assert len(images) == 3
        assert waveform.num_samples == 3 * 800

    def test_empty_sequence_is_rejected(self, tiny_gan):
        with pytest.raises(ConfigurationError):
            pitch_sequence(tiny_gan, [], seed=0)
