"""Tests for MIDI pitch helpers."""

import numpy as np
import pytest

from core.exceptions import PitchOutOfRangeError
from core.services.dataset import (
    check_pitch,
    midi_to_hz,
    one_hot_pitch,
    one_hot_pitches,
    pitch_index,
)


class TestPitchEncoding:
    """Test cases for the 61-way pitch encoding."""

    @pytest.mark.parametrize(("pitch", "index"), [(24, 0), (60, 36), (84, 60)])
    def test_one_hot_position(self, pitch, index):
        vector = one_hot_pitch(pitch)

        assert vector.shape == (61,)
        assert vector.dtype == np.float32
        assert vector.sum() == 1.0
        assert vector[index] == 1.0
        assert pitch_index(pitch) == index

    def test_batch_matches_single_vectors(self):
        batch = one_hot_pitches([24, 48, 84])

        np.testing.assert_array_equal(batch[1], one_hot_pitch(48))
        assert batch.shape == (3, 61)

    @pytest.mark.parametrize("pitch", [23, 85, 0, 127])
    def test_out_of_range_pitch_is_rejected(self, pitch):
        with pytest.raises(PitchOutOfRangeError) as exc_info:
            check_pitch(pitch)

        assert exc_info.value.pitch == pitch
        assert exc_info.value.exit_code == 2

    def test_concert_a(self):
        assert midi_to_hz(69) == pytest.approx(440.0)
        assert midi_to_hz(81) == pytest.approx(880.0)
