"""Complex STFT model."""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ComplexSpectrogram:
    """STFT values with the Nyquist bin trimmed.

    Attributes:
        values: Complex array of shape (frames, bins).
    """

    values: np.ndarray

    @classmethod
    def from_polar(cls, magnitude: np.ndarray, phase: np.ndarray) -> "ComplexSpectrogram":
        return cls(np.asarray(magnitude) * np.exp(1j * np.asarray(phase)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    @property
    def n_frames(self) -> int:
        return self.values.shape[0]

    @property
    def n_bins(self) -> int:
        return self.values.shape[1]

    @property
    def magnitude(self) -> np.ndarray:
        return np.abs(self.values)

    @property
    def phase(self) -> np.ndarray:
        """Angles in (-pi, pi]; exactly zero where the value is zero."""
        return np.angle(self.values)
