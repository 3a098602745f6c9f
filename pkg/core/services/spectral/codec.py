"""Waveform <-> spectral image codec.

Encoding runs: STFT -> magnitude (mel-mapped for mel configs) -> log with
floor -> phase or IF channel (mel-mapped IF for mel configs) -> affine
normalization -> clip to [-1, 1]. Decoding inverts each step.

Raw channel units: channel 0 is natural-log magnitude, channel 1 is phase in
units of pi or IF, both in [-1, 1].
"""

from collections.abc import Sequence

import numpy as np
import structlog

from core.constants.audio import NORMALIZATION_SAMPLE_SIZE, NORMALIZED_RANGE
from core.enums import ChannelMode, FrequencyScale
from core.exceptions import (
    InvalidImageError,
    InvalidWaveformError,
    ShapeMismatchError,
    UnfittedNormalizationError,
)
from core.models import ComplexSpectrogram, SpectralImage, Waveform
from core.schemas.spectral import NormalizationStats, RepresentationConfig
from core.services.spectral.mel import mel_forward, mel_inverse
from core.services.spectral.phase import if_to_phase, phase_to_if
from core.services.spectral.stft import istft, stft

logger = structlog.get_logger(__name__)

_MIN_HALF_RANGE = 1e-6


def encode_raw(waveform: Waveform, config: RepresentationConfig) -> np.ndarray:
    """Unnormalized (frames, bins, 2) image: log magnitude and phase/IF.

    Args:
        waveform: Input audio.
        config: Representation; normalization stats are not needed.

    Returns:
        float64 array of shape ``config.image_shape``.
    """
    spectrogram = stft(waveform, config)
    magnitude = spectrogram.magnitude
    phase = spectrogram.phase
    mel = config.freq_scale == FrequencyScale.MEL

    if mel:
        magnitude = mel_forward(magnitude, config)
    log_magnitude = np.log(np.maximum(magnitude, config.log_mag_floor))

    if config.channel1_mode == ChannelMode.IF:
        channel1 = phase_to_if(phase)
        if mel:
            channel1 = np.clip(mel_forward(channel1, config), -1.0, 1.0)
    else:
        channel1 = phase / np.pi

    return np.stack([log_magnitude, channel1], axis=-1)


def decode_raw(raw: np.ndarray, config: RepresentationConfig) -> Waveform:
    """Invert ``encode_raw``.

    Args:
        raw: Unnormalized (frames, bins, 2) image.
        config: Representation the image was encoded with.

    Returns:
        Reconstructed waveform of ``config.num_samples`` samples.

    Raises:
        ShapeMismatchError: If ``raw`` does not have the config's image shape.
        InvalidImageError: If ``raw`` holds NaN or Inf.
    """
    raw = np.asarray(raw, dtype=np.float64)
    if raw.shape != config.image_shape:
        raise ShapeMismatchError(
            "decode", raw.shape, config.image_shape, component="spectral"
        )
    if not np.all(np.isfinite(raw)):
        raise InvalidImageError("spectral image contains NaN or Inf")
    mel = config.freq_scale == FrequencyScale.MEL

    magnitude = np.exp(raw[..., 0])
    channel1 = raw[..., 1]
    if mel:
        magnitude = mel_inverse(magnitude, config, clip=(0.0, None))

    if config.channel1_mode == ChannelMode.IF:
        if mel:
            channel1 = mel_inverse(channel1, config, clip=(-1.0, 1.0))
        phase = if_to_phase(channel1)
    else:
        phase = channel1 * np.pi

    return istft(ComplexSpectrogram.from_polar(magnitude, phase), config)


def normalize(raw: np.ndarray, norm: NormalizationStats) -> np.ndarray:
    """Apply the fitted affine maps and clip to [-1, 1]."""
    out = np.empty(raw.shape, dtype=np.float32)
    out[..., 0] = (raw[..., 0] - norm.mag_shift) * norm.mag_scale
    out[..., 1] = (raw[..., 1] - norm.ch1_shift) * norm.ch1_scale
    return np.clip(out, -1.0, 1.0)


def denormalize(data: np.ndarray, norm: NormalizationStats) -> np.ndarray:
    """Invert ``normalize`` (before clipping)."""
    data = np.asarray(data, dtype=np.float64)
    out = np.empty(data.shape, dtype=np.float64)
    out[..., 0] = data[..., 0] / norm.mag_scale + norm.mag_shift
    out[..., 1] = data[..., 1] / norm.ch1_scale + norm.ch1_shift
    return out


def encode(waveform: Waveform, config: RepresentationConfig) -> SpectralImage:
    """Encode a waveform into a normalized spectral image.

    Raises:
        UnfittedNormalizationError: If ``config.norm`` is not set.
    """
    if config.norm is None:
        raise UnfittedNormalizationError()
    return SpectralImage(normalize(encode_raw(waveform, config), config.norm), config)


def decode(image: SpectralImage) -> Waveform:
    """Decode a normalized spectral image back to audio.

    Raises:
        InvalidImageError: If the image holds NaN or Inf.
        UnfittedNormalizationError: If the image's config has no stats.
    """
    if not np.all(np.isfinite(image.data)):
        raise InvalidImageError("spectral image contains NaN or Inf")
    config = image.config
    if config.norm is None:
        raise UnfittedNormalizationError()
    clipped = np.clip(image.data, -1.0, 1.0)
    return decode_raw(denormalize(clipped, config.norm), config)


def _affine(low: float, high: float) -> tuple[float, float]:
    half = (high - low) / 2.0
    if half < _MIN_HALF_RANGE:
        logger.warning(
            "Degenerate channel range while fitting normalization",
            low=low,
            high=high,
        )
        half = _MIN_HALF_RANGE
    return (low + high) / 2.0, NORMALIZED_RANGE / half


def stats_from_ranges(
    mag_range: tuple[float, float],
    ch1_range: tuple[float, float],
    n_examples: int = 0,
) -> NormalizationStats:
    """Stats mapping each (min, max) range onto [-0.8, 0.8]."""
    mag_shift, mag_scale = _affine(*mag_range)
    ch1_shift, ch1_scale = _affine(*ch1_range)
    return NormalizationStats(
        mag_shift=mag_shift,
        mag_scale=mag_scale,
        ch1_shift=ch1_shift,
        ch1_scale=ch1_scale,
        n_examples=n_examples,
    )


def fit_normalization(
    waveforms: Sequence[Waveform],
    config: RepresentationConfig,
    sample_size: int = NORMALIZATION_SAMPLE_SIZE,
) -> NormalizationStats:
    """Fit per-channel affine maps from the range of a waveform sample.

    Args:
        waveforms: Candidate waveforms; the first ``sample_size`` are used.
        config: Representation to fit (its own stats are ignored).
        sample_size: Maximum number of waveforms measured.

    Returns:
        Stats mapping the observed min/max of each channel to -0.8/+0.8.

    Raises:
        InvalidWaveformError: If no waveforms are given.
    """
    sample = list(waveforms)[:sample_size]
    if not sample:
        raise InvalidWaveformError("normalization needs at least one waveform")
    mag_low = ch1_low = np.inf
    mag_high = ch1_high = -np.inf
    for waveform in sample:
        raw = encode_raw(waveform, config)
        mag_low = min(mag_low, float(raw[..., 0].min()))
        mag_high = max(mag_high, float(raw[..., 0].max()))
        ch1_low = min(ch1_low, float(raw[..., 1].min()))
        ch1_high = max(ch1_high, float(raw[..., 1].max()))

    stats = stats_from_ranges(
        (mag_low, mag_high), (ch1_low, ch1_high), n_examples=len(sample)
    )
    logger.info(
        "Fitted normalization stats",
        n_examples=len(sample),
        mag_range=(round(mag_low, 4), round(mag_high, 4)),
        ch1_range=(round(ch1_low, 4), round(ch1_high, 4)),
    )
    return stats


def snr_db(reference: Waveform, estimate: Waveform) -> float:
    """Signal-to-noise ratio of ``estimate`` against ``reference`` in dB.

    The shorter signal's length is used. Identical signals give ``inf``.
    """
    n = min(reference.num_samples, estimate.num_samples)
    ref = reference.samples[:n].astype(np.float64)
    err = ref - estimate.samples[:n].astype(np.float64)
    noise = float(np.sum(err * err))
    signal = float(np.sum(ref * ref))
    if noise == 0.0:
        return float("inf")
    if signal == 0.0:
        return float("-inf")
    return 10.0 * np.log10(signal / noise)


def ensure_fitted(
    config: RepresentationConfig, waveforms: Sequence[Waveform]
) -> RepresentationConfig:
    """``config`` itself if it has stats, else a copy fitted on ``waveforms``."""
    if config.is_fitted:
        return config
    logger.warning(
        "Representation has no normalization stats; fitting on the inputs",
        n_examples=min(len(waveforms), NORMALIZATION_SAMPLE_SIZE),
    )
    return config.with_norm(fit_normalization(waveforms, config))
