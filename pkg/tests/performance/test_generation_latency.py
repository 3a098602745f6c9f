"""Performance tests for batched generation and desk-scale training."""

import math

import numpy as np
import pytest

from core.schemas.gan import GanConfig
from core.services.gan import GanModel, GanTrainer, measure_latency, per_sample_speedup
from tests.conftest import DESK_PITCHES


class TestGenerationLatency:
    """Batching amortizes per-call overhead of the generator."""

    def test_batching_lowers_per_sample_latency(self, tiny_gan):
        report = measure_latency(tiny_gan, batch_sizes=(1, 16), repeats=3)

        single, batched = sorted(report.generation, key=lambda m: m.batch_size)
        assert batched.per_sample_seconds < single.per_sample_seconds
        assert per_sample_speedup(report) > 1.0
        assert report.image_shape == (16, 128, 2)
        assert report.decode_per_sample_seconds > 0.0


@pytest.mark.slow
class TestDeskTraining:
    """Progressive desk run through every stage."""

    def test_progressive_run_reaches_final_stage(
        self, tmp_path, desk_images, desk_representation
    ):
        config = GanConfig.desk(
            scale_factor=1 / 8, blend_examples=32, stabilize_examples=32, batch_size=8, seed=11
        )
        model = GanModel(config, desk_representation)
        trainer = GanTrainer(model, desk_images, list(DESK_PITCHES * 2), tmp_path)

        reports = trainer.run()

        assert model.schedule_state.done
        assert model.is_fully_grown
        assert sorted({r.stage for r in reports}) == list(range(config.stage_count))
        assert all(math.isfinite(r.d_loss) and math.isfinite(r.g_loss) for r in reports)
        assert np.isfinite(reports[-1].gp)
