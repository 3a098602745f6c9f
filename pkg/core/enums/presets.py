"""Named representation presets."""

from enum import Enum


class RepresentationPreset(str, Enum):
    """Representation variants selectable with ``--config <name>``.

    Low-resolution presets use a 1024-sample frame, "hires" presets a
    2048-sample frame. DESK is the reduced configuration used for CPU training.
    """

    PHASE = "phase"
    IF = "if"
    IF_LINEAR = "if_linear"
    PHASE_HIRES = "phase_hires"
    IF_HIRES = "if_hires"
    IF_LINEAR_HIRES = "if_linear_hires"
    IF_MEL = "if_mel"
    IF_MEL_HIRES = "if_mel_hires"
    DESK = "desk"
    DESK_MEL = "desk_mel"
