"""Training schedule enumerations."""

from enum import Enum


class SchedulePhase(str, Enum):
    """Phase within a progressive-growing stage.

    BLEND ramps the new resolution block in (alpha 0 -> 1); STABILIZE trains
    the grown network with alpha held at 1.
    """

    BLEND = "blend"
    STABILIZE = "stabilize"
