"""Audio, pitch and spectral-representation constants."""

# Canonical corpus audio
SAMPLE_RATE = 16000
NOTE_SECONDS = 4.0
CANONICAL_NUM_SAMPLES = 64000  # 4 s at 16 kHz

# Note envelope (3 s on, 1 s release tail)
NOTE_ON_SECONDS = 3.0
ATTACK_SECONDS = 0.01

# Per-note duration when rendering generated pitch sequences
NOTE_SECONDS_DEFAULT = 0.5

# Pitch conditioning range
MIDI_LOW = 24
MIDI_HIGH = 84
PITCH_DIM = MIDI_HIGH - MIDI_LOW + 1  # 61

# Spectral codec
LOG_MAG_FLOOR = 1e-6
NORMALIZED_RANGE = 0.8  # real data is mapped to [-0.8, 0.8]
NORMALIZATION_SAMPLE_SIZE = 100
MEL_BREAK_HZ = 700.0
MEL_HIGH_FREQ_Q = 2595.0

# WAV I/O: symmetric PCM16 scale used for both write and read
PCM16_SCALE = 32767.0
WAV_SUBTYPE = "PCM_16"
