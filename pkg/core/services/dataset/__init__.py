"""Synthetic corpus generation, WAV I/O, pitch encoding and splitting."""

from core.services.dataset.manifest import (
    MANIFEST_NAME,
    derive_seed,
    load_manifest,
    load_waveforms,
    make_dataset,
    manifest_path,
    plan_dataset,
    split_ids,
)
from core.services.dataset.pitch import (
    check_pitch,
    midi_to_hz,
    one_hot_pitch,
    one_hot_pitches,
    pitch_index,
)
from core.services.dataset.synthesis import random_timbre, synth_note
from core.services.dataset.wav_io import read_wav, write_wav

__all__ = [
    "MANIFEST_NAME",
    "check_pitch",
    "derive_seed",
    "load_manifest",
    "load_waveforms",
    "make_dataset",
    "manifest_path",
    "midi_to_hz",
    "one_hot_pitch",
    "one_hot_pitches",
    "pitch_index",
    "plan_dataset",
    "random_timbre",
    "read_wav",
    "split_ids",
    "synth_note",
    "write_wav",
]
