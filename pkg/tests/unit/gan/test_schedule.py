"""Tests for the progressive training schedule."""

from core.enums import SchedulePhase
from core.schemas.gan import GanConfig
from core.services.gan import advance_schedule, build_schedule


class TestBuildSchedule:
    """Test cases for ``build_schedule``."""

    def test_progressive_desk_budgets(self):
        schedule = build_schedule(GanConfig.desk())

        assert schedule.stages == [0, 1, 2, 3]
        assert schedule.blend_examples == [0, 800, 800, 800]
        assert schedule.stabilize_examples == [800] * 4
        assert schedule.total_examples == 5600

    def test_non_progressive_keeps_the_total_budget(self):
        schedule = build_schedule(GanConfig.desk(progressive=False))

        assert schedule.stages == [3]
        assert schedule.blend_examples == [0]
        assert schedule.total_examples == 5600


class TestAdvanceSchedule:
    """Test cases for ``advance_schedule``."""

    def test_training_starts_stabilizing_stage_zero(self):
        state = advance_schedule(build_schedule(GanConfig.desk()), 0)

        assert (state.stage, state.alpha) == (0, 1.0)
        assert state.phase == SchedulePhase.STABILIZE
        assert not state.done

    def test_alpha_is_half_way_through_a_blend(self):
        state = advance_schedule(build_schedule(GanConfig.desk()), 800 + 400)

        assert state.stage == 1
        assert state.alpha == 0.5
        assert state.phase == SchedulePhase.BLEND

    def test_blend_ends_at_alpha_one(self):
        state = advance_schedule(build_schedule(GanConfig.desk()), 800 + 800)

        assert (state.stage, state.alpha) == (1, 1.0)
        assert state.phase == SchedulePhase.STABILIZE

    def test_alpha_never_decreases_within_a_stage(self):
        schedule = build_schedule(GanConfig.desk(blend_examples=40, stabilize_examples=40))
        states = [advance_schedule(schedule, n) for n in range(0, 280, 4)]

        for before, after in zip(states, states[1:], strict=False):
            assert after.stage >= before.stage
            if after.stage == before.stage:
                assert after.alpha >= before.alpha

    def test_exhausted_schedule_reports_done_at_final_stage(self):
        schedule = build_schedule(GanConfig.desk())

        state = advance_schedule(schedule, schedule.total_examples)

        assert state.done
        assert (state.stage, state.alpha) == (3, 1.0)

    def test_non_progressive_never_blends(self):
        schedule = build_schedule(GanConfig.desk(progressive=False))

        for seen in (0, 1000, 5599):
            state = advance_schedule(schedule, seen)
            assert (state.stage, state.alpha) == (3, 1.0)
