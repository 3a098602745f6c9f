"""Tests for phase unwrapping and instantaneous frequency."""

import numpy as np
import pytest

from core.exceptions import ShapeMismatchError
from core.models import Waveform
from core.services.spectral import (
    if_to_phase,
    phase_to_if,
    preset_config,
    stft,
    unwrap_phase,
    wrap_phase,
)


class TestWrapPhase:
    """Test cases for ``wrap_phase``."""

    def test_range_is_half_open_at_minus_pi(self):
        angles = np.array([-np.pi, np.pi, 0.5, -7.0])

        wrapped = wrap_phase(angles)

        assert np.all(wrapped > -np.pi)
        assert np.all(wrapped <= np.pi)
        np.testing.assert_allclose(wrapped[:2], np.pi)
        np.testing.assert_allclose(wrapped[2], 0.5)
        np.testing.assert_allclose(wrapped[3], -7.0 + 2 * np.pi)


class TestUnwrapPhase:
    """Test cases for ``unwrap_phase``."""

    def test_removes_jump_across_pi(self):
        unwrapped = unwrap_phase(np.array([3.0, -3.0, 2.9]))

        np.testing.assert_allclose(unwrapped, [3.0, 3.28319, 2.9], atol=1e-5)

    def test_first_frame_is_untouched(self, rng):
        phase = wrap_phase(rng.normal(scale=5.0, size=(10, 4)))

        unwrapped = unwrap_phase(phase)

        np.testing.assert_array_equal(unwrapped[0], phase[0])
        assert np.all(np.abs(np.diff(unwrapped, axis=0)) <= np.pi + 1e-12)

    def test_single_frame_is_returned_as_is(self):
        phase = np.array([[1.0, -2.0]])

        np.testing.assert_array_equal(unwrap_phase(phase), phase)


class TestInstantaneousFrequency:
    """Test cases for ``phase_to_if`` and ``if_to_phase``."""

    def test_advance_of_pi_per_frame_is_unit_frequency(self):
        phase = wrap_phase(np.arange(6.0)[:, None] * np.pi)

        inst_freq = phase_to_if(phase)

        np.testing.assert_allclose(np.abs(inst_freq[1:]), 1.0)

    def test_first_frame_keeps_initial_phase(self):
        phase = np.array([[0.5 * np.pi], [0.75 * np.pi]])

        inst_freq = phase_to_if(phase)

        np.testing.assert_allclose(inst_freq[:, 0], [0.5, 0.25])

    def test_integration_recovers_wrapped_phase(self, rng):
        phase = wrap_phase(rng.uniform(-10, 10, size=(32, 16)))

        recovered = if_to_phase(phase_to_if(phase))

        np.testing.assert_allclose(np.exp(1j * recovered), np.exp(1j * phase), atol=1e-9)

    def test_values_lie_in_unit_interval(self, rng):
        phase = wrap_phase(rng.normal(scale=4.0, size=(64, 8)))

        inst_freq = phase_to_if(phase)

        assert np.all(np.abs(inst_freq) <= 1.0)

    def test_stationary_tone_has_constant_if(self):
        """Test that a bin-centered tone shows IF 0.5 with negligible spread."""
        config = preset_config("if")
        t = np.arange(config.num_samples) / config.sample_rate
        waveform = Waveform(0.5 * np.sin(2 * np.pi * 2015.625 * t), config.sample_rate)

        inst_freq = phase_to_if(stft(waveform, config).phase)[:, 129]

        interior = inst_freq[4:-8]
        assert abs(float(np.mean(interior)) - 0.5) < 1e-3
        assert float(np.std(interior)) < 1e-3

    def test_single_frame_is_rejected(self):
        with pytest.raises(ShapeMismatchError):
            phase_to_if(np.zeros((1, 8)))
