"""MIDI pitch helpers and the 61-way one-hot conditioning vector."""

from collections.abc import Iterable

import numpy as np

from core.constants.audio import MIDI_HIGH, MIDI_LOW, PITCH_DIM
from core.exceptions import PitchOutOfRangeError


def check_pitch(pitch: int) -> int:
    """Return ``pitch`` if it lies in [24, 84], else raise PitchOutOfRangeError."""
    if not MIDI_LOW <= int(pitch) <= MIDI_HIGH:
        raise PitchOutOfRangeError(int(pitch), MIDI_LOW, MIDI_HIGH)
    return int(pitch)


def midi_to_hz(pitch: float) -> float:
    """Equal-tempered frequency with A4 (MIDI 69) at 440 Hz."""
    return 440.0 * 2.0 ** ((pitch - 69) / 12.0)


def pitch_index(pitch: int) -> int:
    """Class index of a pitch (24 -> 0, 84 -> 60)."""
    return check_pitch(pitch) - MIDI_LOW


def one_hot_pitch(pitch: int) -> np.ndarray:
    """61-dim float32 vector with a single 1 at ``pitch - 24``."""
    vector = np.zeros(PITCH_DIM, dtype=np.float32)
    vector[pitch_index(pitch)] = 1.0
    return vector


def one_hot_pitches(pitches: Iterable[int]) -> np.ndarray:
    """(N, 61) stack of one-hot vectors."""
    indices = [pitch_index(p) for p in pitches]
    out = np.zeros((len(indices), PITCH_DIM), dtype=np.float32)
    out[np.arange(len(indices)), indices] = 1.0
    return out
