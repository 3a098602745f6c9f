"""Spectral codecs: STFT, phase/IF, mel scaling, normalization and rendering."""

from core.services.spectral.codec import (
    decode,
    decode_raw,
    denormalize,
    encode,
    encode_raw,
    ensure_fitted,
    fit_normalization,
    normalize,
    snr_db,
    stats_from_ranges,
)
from core.services.spectral.mel import (
    mel_filterbank,
    mel_forward,
    mel_inverse,
    mel_pseudo_inverse,
)
from core.services.spectral.phase import (
    if_to_phase,
    phase_to_if,
    unwrap_phase,
    wrap_phase,
)
from core.services.spectral.presets import load_representation, preset_config
from core.services.spectral.rainbowgram import rainbowgram_rgb, save_rainbowgram
from core.services.spectral.stft import hann_window, istft, stft

__all__ = [
    "decode",
    "decode_raw",
    "denormalize",
    "encode",
    "encode_raw",
    "ensure_fitted",
    "fit_normalization",
    "hann_window",
    "if_to_phase",
    "istft",
    "load_representation",
    "mel_filterbank",
    "mel_forward",
    "mel_inverse",
    "mel_pseudo_inverse",
    "normalize",
    "phase_to_if",
    "preset_config",
    "rainbowgram_rgb",
    "save_rainbowgram",
    "snr_db",
    "stats_from_ranges",
    "unwrap_phase",
    "wrap_phase",
]
