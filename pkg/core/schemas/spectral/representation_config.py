"""Schema for spectral representation configuration."""

from typing import Self

from pydantic import ConfigDict, Field, model_validator

from core.constants.audio import LOG_MAG_FLOOR, SAMPLE_RATE
from core.enums import ChannelMode, FrequencyScale
from core.schemas.base_schema_model import BaseSchemaModel
from core.schemas.spectral.normalization_stats import NormalizationStats


class RepresentationConfig(BaseSchemaModel):
    """How waveforms map to (frames, bins, 2) spectral images.

    The stride is always a quarter of the frame (75% overlap) and the
    Nyquist bin is trimmed, so the image is ``(n_frames, frame_size / 2, 2)``.
    Audio is padded by half a frame at the start and zero-padded at the end
    up to ``(n_frames - 1) * stride + frame_size`` samples.

    Attributes:
        sample_rate: Audio sample rate in Hz.
        frame_size: STFT frame (and FFT) length in samples.
        n_frames: Number of STFT frames in the image (time padding target).
        num_samples: Length of the un-padded waveform the image represents.
        channel1_mode: Phase or instantaneous frequency for channel 1.
        freq_scale: Linear or mel frequency axis.
        log_mag_floor: Magnitudes are clamped to this value before the log.
        norm: Fitted normalization stats, or None before fitting.
    """

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "sampleRate": 16000,
                "frameSize": 1024,
                "nFrames": 256,
                "numSamples": 64000,
                "channel1Mode": "if",
                "freqScale": "linear",
            }
        }
    )

    sample_rate: int = Field(default=SAMPLE_RATE, gt=0)
    frame_size: int = Field(default=1024, ge=16)
    n_frames: int = Field(default=256, ge=2)
    num_samples: int = Field(default=64000, ge=1)
    channel1_mode: ChannelMode = Field(default=ChannelMode.IF)
    freq_scale: FrequencyScale = Field(default=FrequencyScale.LINEAR)
    log_mag_floor: float = Field(default=LOG_MAG_FLOOR, gt=0.0)
    norm: NormalizationStats | None = Field(default=None)

    @model_validator(mode="after")
    def _check_geometry(self) -> Self:
        """Validate frame size, padding coverage and channel/scale pairing."""
        if self.frame_size % 8 != 0:
            raise ValueError("frame_size must be a multiple of 8")
        if self.padded_length < self.num_samples + self.frame_size // 2:
            raise ValueError(
                f"n_frames={self.n_frames} with stride {self.stride} cannot cover "
                f"{self.num_samples} samples"
            )
        if (
            self.freq_scale == FrequencyScale.MEL
            and self.channel1_mode == ChannelMode.PHASE
        ):
            raise ValueError("mel frequency scale is only supported with IF")
        return self

    @property
    def stride(self) -> int:
        """Hop between frames (75% overlap)."""
        return self.frame_size // 4

    @property
    def n_bins(self) -> int:
        """Frequency bins after trimming Nyquist."""
        return self.frame_size // 2

    @property
    def mel_bins(self) -> int:
        """Mel bins; equal to the linear bin count (no compression)."""
        return self.n_bins

    @property
    def padded_length(self) -> int:
        """Length of the zero-padded signal that the frames span."""
        return (self.n_frames - 1) * self.stride + self.frame_size

    @property
    def image_shape(self) -> tuple[int, int, int]:
        """Shape of the encoded spectral image."""
        return (self.n_frames, self.n_bins, 2)

    @property
    def is_fitted(self) -> bool:
        """Whether normalization stats are attached."""
        return self.norm is not None

    def with_norm(self, norm: NormalizationStats) -> "RepresentationConfig":
        """Return a copy of this config carrying the given stats.

        Args:
            norm: Fitted normalization stats.

        Returns:
            New config with ``norm`` set.
        """
        return self.model_copy(update={"norm": norm})
