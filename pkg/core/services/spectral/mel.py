"""Mel filterbank without dimensional compression and its pseudo-inverse.

The filterbank has as many mel bands as trimmed linear bins. Triangular
HTK-mel filters span 0 Hz to Nyquist; bands too narrow to cover any linear
bin fall back to a unit weight on the bin nearest their center, and every
row is normalized to sum to 1.
"""

import warnings
from functools import lru_cache

import librosa
import numpy as np
import structlog

from core.exceptions import ShapeMismatchError
from core.schemas.spectral import RepresentationConfig

logger = structlog.get_logger(__name__)


@lru_cache(maxsize=8)
def mel_filterbank(sample_rate: int, frame_size: int) -> np.ndarray:
    """(mel_bins, n_bins) row-stochastic filterbank, read-only and cached."""
    n_bins = frame_size // 2
    with warnings.catch_warnings():
        # librosa warns about the empty low-frequency bands handled below
        warnings.simplefilter("ignore", UserWarning)
        bank = librosa.filters.mel(
            sr=sample_rate,
            n_fft=frame_size,
            n_mels=n_bins,
            fmin=0.0,
            fmax=sample_rate / 2.0,
            htk=True,
            norm=None,
            dtype=np.float64,
        )
    bank = np.ascontiguousarray(bank[:, :n_bins])

    centers = librosa.mel_frequencies(
        n_mels=n_bins + 2, fmin=0.0, fmax=sample_rate / 2.0, htk=True
    )[1:-1]
    bin_hz = sample_rate / frame_size
    empty = np.flatnonzero(bank.sum(axis=1) <= 0.0)
    nearest = np.clip(np.rint(centers[empty] / bin_hz).astype(int), 0, n_bins - 1)
    bank[empty, nearest] = 1.0
    bank /= bank.sum(axis=1, keepdims=True)

    logger.debug(
        "Built mel filterbank",
        sample_rate=sample_rate,
        frame_size=frame_size,
        empty_bands=int(empty.size),
    )
    bank.setflags(write=False)
    return bank


@lru_cache(maxsize=8)
def mel_pseudo_inverse(sample_rate: int, frame_size: int) -> np.ndarray:
    """(n_bins, mel_bins) Moore-Penrose pseudo-inverse of the filterbank."""
    inverse = np.linalg.pinv(mel_filterbank(sample_rate, frame_size))
    inverse.setflags(write=False)
    return inverse


def _check_bins(op: str, values: np.ndarray, config: RepresentationConfig) -> None:
    if values.ndim != 2 or values.shape[1] != config.n_bins:
        raise ShapeMismatchError(
            op, values.shape, (values.shape[0], config.n_bins), component="spectral"
        )


def mel_forward(linear: np.ndarray, config: RepresentationConfig) -> np.ndarray:
    """Map (frames, n_bins) linear-frequency values to (frames, mel_bins)."""
    linear = np.asarray(linear, dtype=np.float64)
    _check_bins("mel_forward", linear, config)
    return linear @ mel_filterbank(config.sample_rate, config.frame_size).T


def mel_inverse(
    mel: np.ndarray,
    config: RepresentationConfig,
    clip: tuple[float | None, float | None] = (0.0, None),
) -> np.ndarray:
    """Approximate inverse of ``mel_forward`` via the pseudo-inverse.

    Args:
        mel: (frames, mel_bins) values.
        config: Representation the values belong to.
        clip: Bounds applied after inversion; magnitudes clamp at 0, IF
            clips to [-1, 1].

    Returns:
        (frames, n_bins) linear-frequency values.
    """
    mel = np.asarray(mel, dtype=np.float64)
    _check_bins("mel_inverse", mel, config)
    linear = mel @ mel_pseudo_inverse(config.sample_rate, config.frame_size).T
    low, high = clip
    if low is not None or high is not None:
        linear = np.clip(linear, low, high)
    return linear
