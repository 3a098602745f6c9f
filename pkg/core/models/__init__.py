"""Domain models: waveforms, complex spectrograms and spectral images."""

from core.models.complex_spectrogram import ComplexSpectrogram
from core.models.spectral_image import SpectralImage, SpectralImageSidecar
from core.models.waveform import Waveform

__all__ = [
    "ComplexSpectrogram",
    "SpectralImage",
    "SpectralImageSidecar",
    "Waveform",
]
