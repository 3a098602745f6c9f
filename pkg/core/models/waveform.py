"""Waveform model: mono audio samples at a fixed rate."""

from dataclasses import dataclass

import numpy as np

from core.constants.audio import SAMPLE_RATE
from core.exceptions import InvalidWaveformError


@dataclass(frozen=True)
class Waveform:
    """Mono float32 audio.

    Attributes:
        samples: 1-D float32 amplitudes, nominally in [-1, 1].
        sample_rate: Sampling rate in Hz.
    """

    samples: np.ndarray
    sample_rate: int = SAMPLE_RATE

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.float32)
        if samples.ndim != 1:
            raise InvalidWaveformError(
                f"waveform must be 1-D, got shape {samples.shape}"
            )
        if samples.size == 0:
            raise InvalidWaveformError("waveform is empty")
        if not np.all(np.isfinite(samples)):
            raise InvalidWaveformError("waveform contains NaN or Inf samples")
        if self.sample_rate <= 0:
            raise InvalidWaveformError(f"invalid sample rate {self.sample_rate}")
        object.__setattr__(self, "samples", samples)

    @property
    def num_samples(self) -> int:
        return int(self.samples.size)

    @property
    def duration(self) -> float:
        """Length in seconds."""
        return self.num_samples / self.sample_rate

    @property
    def peak(self) -> float:
        return float(np.max(np.abs(self.samples)))

    def peak_normalized(self, target: float = 1.0) -> "Waveform":
        """Scale so the largest absolute sample equals ``target``.

        Silent waveforms are returned unchanged.
        """
        peak = self.peak
        if peak == 0.0:
            return self
        return Waveform(self.samples * (target / peak), self.sample_rate)

    def fit_length(self, num_samples: int) -> "Waveform":
        """Zero-pad or truncate to exactly ``num_samples``."""
        if self.num_samples == num_samples:
            return self
        out = np.zeros(num_samples, dtype=np.float32)
        keep = min(num_samples, self.num_samples)
        out[:keep] = self.samples[:keep]
        return Waveform(out, self.sample_rate)
