"""Schema for a single corpus note."""

from pydantic import Field

from core.constants.audio import MIDI_HIGH, MIDI_LOW
from core.schemas.base_schema_model import BaseSchemaModel


class NoteRecord(BaseSchemaModel):
    """One rendered note of the synthetic corpus.

    Attributes:
        id: Stable record identifier (``p<pitch>_t<timbre>_<index>``).
        pitch: MIDI pitch in [24, 84].
        waveform_path: WAV path relative to the manifest directory.
        timbre_seed: Seed of the timbre the note was rendered with.
        note_seed: Seed of the per-note randomness (phases, jitter).
    """

    id: str = Field(..., min_length=1)
    pitch: int = Field(..., ge=MIDI_LOW, le=MIDI_HIGH)
    waveform_path: str = Field(..., min_length=1)
    timbre_seed: int = Field(..., ge=0)
    note_seed: int = Field(default=0, ge=0)
