"""Representation preset registry.

Each entry holds the keyword arguments of a ``RepresentationConfig``.
Normalization stats are fitted per corpus and are not part of a preset.
"""

from core.enums import ChannelMode, FrequencyScale, RepresentationPreset

_LOW_RES = {"frame_size": 1024, "n_frames": 256, "num_samples": 64000}
_HIGH_RES = {"frame_size": 2048, "n_frames": 128, "num_samples": 64000}
_DESK = {"frame_size": 256, "n_frames": 16, "num_samples": 1024}

REPRESENTATION_PRESETS: dict[RepresentationPreset, dict] = {
    RepresentationPreset.PHASE: {
        **_LOW_RES,
        "channel1_mode": ChannelMode.PHASE,
        "freq_scale": FrequencyScale.LINEAR,
    },
    RepresentationPreset.IF: {
        **_LOW_RES,
        "channel1_mode": ChannelMode.IF,
        "freq_scale": FrequencyScale.LINEAR,
    },
    RepresentationPreset.IF_LINEAR: {
        **_LOW_RES,
        "channel1_mode": ChannelMode.IF,
        "freq_scale": FrequencyScale.LINEAR,
    },
    RepresentationPreset.PHASE_HIRES: {
        **_HIGH_RES,
        "channel1_mode": ChannelMode.PHASE,
        "freq_scale": FrequencyScale.LINEAR,
    },
    RepresentationPreset.IF_HIRES: {
        **_HIGH_RES,
        "channel1_mode": ChannelMode.IF,
        "freq_scale": FrequencyScale.LINEAR,
    },
    RepresentationPreset.IF_LINEAR_HIRES: {
        **_HIGH_RES,
        "channel1_mode": ChannelMode.IF,
        "freq_scale": FrequencyScale.LINEAR,
    },
    RepresentationPreset.IF_MEL: {
        **_LOW_RES,
        "channel1_mode": ChannelMode.IF,
        "freq_scale": FrequencyScale.MEL,
    },
    RepresentationPreset.IF_MEL_HIRES: {
        **_HIGH_RES,
        "channel1_mode": ChannelMode.IF,
        "freq_scale": FrequencyScale.MEL,
    },
    RepresentationPreset.DESK: {
        **_DESK,
        "channel1_mode": ChannelMode.IF,
        "freq_scale": FrequencyScale.LINEAR,
    },
    RepresentationPreset.DESK_MEL: {
        **_DESK,
        "channel1_mode": ChannelMode.IF,
        "freq_scale": FrequencyScale.MEL,
    },
}
