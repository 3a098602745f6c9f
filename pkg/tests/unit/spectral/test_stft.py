"""Tests for the STFT and its overlap-add inverse."""

import numpy as np
import pytest

from core.exceptions import InvalidWaveformError, ShapeMismatchError
from core.models import ComplexSpectrogram, Waveform
from core.services.spectral import istft, preset_config, snr_db, stft

BIN_129_HZ = 2015.625


def tone(freq, num_samples, sample_rate=16000, phase=0.3):
    t = np.arange(num_samples) / sample_rate
    return Waveform(0.5 * np.sin(2 * np.pi * freq * t + phase), sample_rate)


class TestStft:
    """Test cases for ``stft``."""

    @pytest.mark.parametrize(
        ("preset", "shape"), [("if", (256, 512)), ("if_hires", (128, 1024)), ("desk", (16, 128))]
    )
    def test_frame_and_bin_counts(self, preset, shape):
        config = preset_config(preset)

        spectrogram = stft(tone(440.0, config.num_samples), config)

        assert spectrogram.shape == shape

    def test_silence_has_zero_magnitude_and_phase(self):
        config = preset_config("desk")

        spectrogram = stft(Waveform(np.zeros(config.num_samples)), config)

        assert np.all(spectrogram.magnitude == 0.0)
        assert np.all(spectrogram.phase == 0.0)

    def test_bin_centered_tone_peaks_at_its_bin(self):
        """Test that 2015.625 Hz lands in bin 129 of a 1024-sample frame."""
        config = preset_config("if")

        magnitude = stft(tone(BIN_129_HZ, config.num_samples), config).magnitude

        assert np.all(magnitude[4:-8].argmax(axis=1) == 129)

    def test_interior_frame_matches_direct_dft(self):
        config = preset_config("desk")
        waveform = tone(1000.0, config.num_samples)
        frame = 5
        start = frame * config.stride - config.frame_size // 2
        window = np.hanning(config.frame_size + 1)[:-1]
        segment = waveform.samples[start : start + config.frame_size] * window
        expected = np.fft.rfft(segment)[: config.n_bins]

        spectrogram = stft(waveform, config)

        np.testing.assert_allclose(spectrogram.values[frame], expected, atol=1e-3)

    def test_shorter_than_one_frame_is_rejected(self):
        with pytest.raises(InvalidWaveformError):
            stft(Waveform(np.ones(100)), preset_config("desk"))

    def test_sample_rate_mismatch_is_rejected(self):
        config = preset_config("desk")

        with pytest.raises(InvalidWaveformError):
            stft(Waveform(np.ones(config.num_samples), sample_rate=22050), config)


class TestIstft:
    """Test cases for ``istft``."""

    @pytest.mark.parametrize("preset", ["if", "if_hires", "desk"])
    def test_round_trip_snr_above_60_db(self, preset, rng):
        config = preset_config(preset)
        waveform = Waveform(rng.uniform(-0.5, 0.5, size=config.num_samples))

        reconstruction = istft(stft(waveform, config), config)

        assert reconstruction.num_samples == config.num_samples
        assert snr_db(waveform, reconstruction) >= 60.0

    def test_zero_spectrogram_gives_silence(self):
        config = preset_config("desk")

        out = istft(ComplexSpectrogram(np.zeros((16, 128), dtype=complex)), config)

        assert np.all(out.samples == 0.0)

    def test_shape_mismatch_is_rejected(self):
        with pytest.raises(ShapeMismatchError):
            istft(ComplexSpectrogram(np.zeros((8, 128), dtype=complex)), preset_config("desk"))
