"""Additive-synthesis notes standing in for acoustic instrument recordings.

A note is a sum of (slightly stretched) harmonics of the pitch's fundamental
under a shared envelope: 10 ms raised-cosine attack, exponential decay, and a
short release at the end of the note-on portion (three quarters of the note,
3 s of a 4 s note). Partials at or above 0.9 x Nyquist are never rendered.
"""

import numpy as np

from core.constants.audio import (
    ATTACK_SECONDS,
    CANONICAL_NUM_SAMPLES,
    NOTE_ON_SECONDS,
    NOTE_SECONDS,
    SAMPLE_RATE,
)
from core.models import Waveform
from core.schemas.dataset import TimbreParams
from core.services.dataset.pitch import check_pitch, midi_to_hz

BAND_LIMIT = 0.9
RELEASE_SECONDS = 0.01
NOTE_ON_FRACTION = NOTE_ON_SECONDS / NOTE_SECONDS


def random_timbre(seed: int) -> TimbreParams:
    """Draw a timbre: spectral rolloff, odd/even balance, decay and stretch.

    Args:
        seed: Timbre seed; equal seeds give equal timbres.

    Returns:
        The timbre parameters.
    """
    rng = np.random.default_rng(seed)
    n_harmonics = int(rng.integers(6, 33))
    k = np.arange(1, n_harmonics + 1, dtype=np.float64)
    rolloff = rng.uniform(0.6, 2.2)
    odd_weight = rng.uniform(0.3, 1.0)
    amplitudes = k**-rolloff
    amplitudes[1::2] *= odd_weight  # even harmonics (k = 2, 4, ...)
    amplitudes *= rng.uniform(0.7, 1.0, size=n_harmonics)
    return TimbreParams(
        harmonic_amplitudes=[float(a) for a in amplitudes / amplitudes.max()],
        decay_rate=float(rng.uniform(0.2, 3.0)),
        attack=ATTACK_SECONDS,
        inharmonicity=float(rng.uniform(0.0, 5e-4)),
        detune_cents=float(rng.uniform(-5.0, 5.0)),
    )


def partial_frequencies(
    pitch: int, timbre: TimbreParams, sample_rate: int = SAMPLE_RATE
) -> tuple[np.ndarray, np.ndarray]:
    """Frequencies and amplitudes of the partials that will be rendered."""
    f0 = midi_to_hz(check_pitch(pitch)) * 2.0 ** (timbre.detune_cents / 1200.0)
    k = np.arange(1, len(timbre.harmonic_amplitudes) + 1, dtype=np.float64)
    freqs = k * f0 * np.sqrt(1.0 + timbre.inharmonicity * k * k)
    amps = np.asarray(timbre.harmonic_amplitudes, dtype=np.float64)
    keep = freqs < BAND_LIMIT * sample_rate / 2.0
    return freqs[keep], amps[keep]


def note_envelope(
    num_samples: int, sample_rate: int, attack: float, decay_rate: float
) -> np.ndarray:
    """Attack, exponential decay and release over ``num_samples``."""
    t = np.arange(num_samples, dtype=np.float64) / sample_rate
    envelope = np.exp(-decay_rate * t)

    attack_len = max(1, round(attack * sample_rate))
    ramp = np.arange(min(attack_len, num_samples), dtype=np.float64) / attack_len
    envelope[: ramp.size] *= 0.5 - 0.5 * np.cos(np.pi * ramp)

    note_off = round(NOTE_ON_FRACTION * num_samples)
    release_len = max(1, round(RELEASE_SECONDS * sample_rate))
    end = min(num_samples, note_off + release_len)
    fall = np.arange(end - note_off, dtype=np.float64) / release_len
    envelope[note_off:end] *= 0.5 + 0.5 * np.cos(np.pi * fall)
    envelope[end:] = 0.0
    return envelope


def synth_note(
    pitch: int,
    timbre: TimbreParams,
    seed: int,
    sample_rate: int = SAMPLE_RATE,
    num_samples: int = CANONICAL_NUM_SAMPLES,
) -> Waveform:
    """Render a peak-normalized note.

    Args:
        pitch: MIDI pitch in [24, 84].
        timbre: Harmonic amplitudes and envelope parameters.
        seed: Per-note seed for partial start phases.
        sample_rate: Output rate in Hz.
        num_samples: Note length in samples.

    Returns:
        The note; identical arguments give bit-identical samples.

    Raises:
        PitchOutOfRangeError: If the pitch is outside [24, 84].
    """
    freqs, amps = partial_frequencies(pitch, timbre, sample_rate)
    rng = np.random.default_rng(seed)
    phases = rng.uniform(-np.pi, np.pi, size=freqs.size)
    t = np.arange(num_samples, dtype=np.float64) / sample_rate

    signal = np.zeros(num_samples, dtype=np.float64)
    for freq, amp, phase in zip(freqs, amps, phases, strict=True):
        signal += amp * np.sin(2.0 * np.pi * freq * t + phase)
    signal *= note_envelope(num_samples, sample_rate, timbre.attack, timbre.decay_rate)

    peak = np.max(np.abs(signal))
    if peak > 0.0:
        signal /= peak
    return Waveform(signal.astype(np.float32), sample_rate)
