"""Progressive training schedule: which stage trains and with what alpha."""

from core.enums import SchedulePhase
from core.schemas.gan import GanConfig, ScheduleState, TrainSchedule


def build_schedule(config: GanConfig) -> TrainSchedule:
    """Per-stage budgets for a config.

    Progressive training visits stages 0..final; stage 0 only stabilizes.
    Non-progressive training is a single final-stage entry with alpha fixed
    at 1 and the same total example budget.
    """
    stages = list(range(config.stage_count))
    blend = [0] + [config.blend_examples] * (config.stage_count - 1)
    stabilize = [config.stabilize_examples] * config.stage_count
    if config.progressive:
        return TrainSchedule(stages=stages, blend_examples=blend, stabilize_examples=stabilize)
    return TrainSchedule(
        stages=[config.final_stage],
        blend_examples=[0],
        stabilize_examples=[sum(blend) + sum(stabilize)],
    )


def advance_schedule(schedule: TrainSchedule, examples_seen: int) -> ScheduleState:
    """Stage, alpha and phase after ``examples_seen`` examples.

    Alpha ramps linearly from 0 to 1 over each blend budget and then holds
    at 1 through the stabilize budget. Past the end of the schedule the
    final entry is reported with ``done`` set.
    """
    remaining = max(0, examples_seen)
    for entry, stage in enumerate(schedule.stages):
        blend = schedule.blend_examples[entry]
        if remaining < blend:
            return ScheduleState(
                stage=stage, alpha=remaining / blend, phase=SchedulePhase.BLEND, entry=entry
            )
        remaining -= blend
        stabilize = schedule.stabilize_examples[entry]
        if remaining < stabilize:
            return ScheduleState(
                stage=stage, alpha=1.0, phase=SchedulePhase.STABILIZE, entry=entry
            )
        remaining -= stabilize
    return ScheduleState(
        stage=schedule.stages[-1],
        alpha=1.0,
        phase=SchedulePhase.STABILIZE,
        entry=len(schedule.stages) - 1,
        done=True,
    )
