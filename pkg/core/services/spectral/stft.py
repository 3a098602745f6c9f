"""Short-time Fourier transform and its overlap-add inverse.

Frames use a periodic Hann window at 75% overlap. The waveform is offset by
half a frame so the first frame is centered on sample 0, and zero-padded at
the end so exactly ``n_frames`` frames fit. The Nyquist bin is dropped on
analysis and restored as zero on synthesis.
"""

from functools import lru_cache

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from scipy.signal import get_window

from core.exceptions import InvalidWaveformError, ShapeMismatchError
from core.models import ComplexSpectrogram, Waveform
from core.schemas.spectral import RepresentationConfig


@lru_cache(maxsize=8)
def hann_window(frame_size: int) -> np.ndarray:
    """Periodic Hann window (read-only, cached per size)."""
    window = get_window("hann", frame_size, fftbins=True).astype(np.float64)
    window.setflags(write=False)
    return window


def stft(waveform: Waveform, config: RepresentationConfig) -> ComplexSpectrogram:
    """Analyze a waveform into ``config.n_frames`` x ``config.n_bins`` values.

    Waveforms are fitted to ``config.num_samples`` (zero-padded or truncated)
    before framing.

    Args:
        waveform: Input audio at ``config.sample_rate``.
        config: Representation geometry.

    Returns:
        Complex spectrogram with the Nyquist bin removed.

    Raises:
        InvalidWaveformError: If the waveform is shorter than one frame or
            its sample rate differs from the config.
    """
    if waveform.num_samples < config.frame_size:
        raise InvalidWaveformError(
            f"waveform has {waveform.num_samples} samples, fewer than one "
            f"frame of {config.frame_size}"
        )
    if waveform.sample_rate != config.sample_rate:
        raise InvalidWaveformError(
            f"waveform sample rate {waveform.sample_rate} Hz does not match "
            f"representation rate {config.sample_rate} Hz"
        )
    samples = waveform.fit_length(config.num_samples).samples.astype(np.float64)
    padded = np.zeros(config.padded_length, dtype=np.float64)
    start = config.frame_size // 2
    padded[start : start + config.num_samples] = samples

    frames = sliding_window_view(padded, config.frame_size)[:: config.stride]
    frames = frames[: config.n_frames] * hann_window(config.frame_size)
    spectrum = np.fft.rfft(frames, axis=-1)[:, : config.n_bins]
    return ComplexSpectrogram(spectrum)


def istft(spectrogram: ComplexSpectrogram, config: RepresentationConfig) -> Waveform:
    """Overlap-add synthesis normalized by the summed squared window.

    Args:
        spectrogram: Values of shape ``(config.n_frames, config.n_bins)``.
        config: Representation geometry.

    Returns:
        Waveform of ``config.num_samples`` samples.

    Raises:
        ShapeMismatchError: If the spectrogram shape disagrees with the config.
    """
    expected = (config.n_frames, config.n_bins)
    if spectrogram.shape != expected:
        raise ShapeMismatchError(
            "istft", spectrogram.shape, expected, component="spectral"
        )
    nyquist = np.zeros((config.n_frames, 1), dtype=np.complex128)
    full = np.concatenate([spectrogram.values, nyquist], axis=1)
    window = hann_window(config.frame_size)
    frames = np.fft.irfft(full, n=config.frame_size, axis=-1) * window

    signal = np.zeros(config.padded_length, dtype=np.float64)
    weight = np.zeros(config.padded_length, dtype=np.float64)
    squared = window * window
    for t in range(config.n_frames):
        offset = t * config.stride
        signal[offset : offset + config.frame_size] += frames[t]
        weight[offset : offset + config.frame_size] += squared
    signal /= np.maximum(weight, 1e-8)

    start = config.frame_size // 2
    out = signal[start : start + config.num_samples].astype(np.float32)
    return Waveform(out, config.sample_rate)
