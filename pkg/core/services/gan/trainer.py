"""Progressive training loop with loss logging, checkpoints and resume."""

import csv
import math
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from pathlib import Path
from typing import Any

import numpy as np
import structlog

from core.config import get_settings
from core.exceptions import ArtifactNotFoundError, ShapeMismatchError, TrainingDivergedError
from core.jobs.batch_loader import BatchPrefetcher
from core.schemas.gan import LOSS_CSV_COLUMNS, LossReport
from core.services.dataset.pitch import one_hot_pitches
from core.services.gan.model import GanModel
from core.services.gan.training import train_step
from core.tensor.checkpoint import container_paths

logger = structlog.get_logger(__name__)

CHECKPOINT_DIR = "checkpoints"
LATEST_CHECKPOINT = "latest"
LOSS_CSV = "losses.csv"
FINAL_LOSSES = "final_losses.json"
_BATCH_STREAM = 2


def latest_checkpoint(out_dir: str | Path) -> Path:
    """Stem of the most recent checkpoint of a training run."""
    return Path(out_dir) / CHECKPOINT_DIR / LATEST_CHECKPOINT


class GanTrainer:
    """Runs ``train_step`` over a schedule for one exclusively owned model.

    Args:
        model: Model to train in place.
        images: (N, H, W, 2) normalized real images at full resolution.
        pitches: MIDI pitch of each image.
        out_dir: Run directory for the loss CSV and checkpoints.
        checkpoint_every: Steps between periodic checkpoints.
        prefetch_depth: Batches built ahead of the training loop.
    """

    def __init__(
        self,
        model: GanModel,
        images: np.ndarray,
        pitches: Sequence[int],
        out_dir: str | Path,
        checkpoint_every: int | None = None,
        prefetch_depth: int | None = None,
    ):
        settings = get_settings()
        if len(images) != len(pitches) or len(images) == 0:
            raise ShapeMismatchError(
                "training set", np.shape(images), (len(pitches),), component="gan"
            )
        self.model = model
        self.images = np.asarray(images, dtype=np.float32)
        self.one_hot = one_hot_pitches(pitches)
        self.out_dir = Path(out_dir)
        self.checkpoint_every = checkpoint_every or settings.CHECKPOINT_EVERY_STEPS
        self.prefetch_depth = prefetch_depth or settings.PREFETCH_BATCHES

    @classmethod
    def resume(
        cls, out_dir: str | Path, images: np.ndarray, pitches: Sequence[int], **kwargs
    ) -> "GanTrainer":
        """Trainer continuing from the latest checkpoint in ``out_dir``.

        Raises:
            ArtifactNotFoundError: If the run has no checkpoint.
        """
        stem = latest_checkpoint(out_dir)
        if not container_paths(stem)[1].is_file():
            raise ArtifactNotFoundError(str(stem), kind="training checkpoint")
        return cls(GanModel.load(stem), images, pitches, out_dir, **kwargs)

    def batch(self, step: int) -> tuple[np.ndarray, np.ndarray]:
        """Real images and one-hot pitches of a step."""
        rng = np.random.default_rng([self.model.config.seed, _BATCH_STREAM, step])
        size = self.model.config.batch_size
        index = rng.choice(len(self.images), size=size, replace=len(self.images) < size)
        return self.images[index], self.one_hot[index]

    def remaining_steps(self) -> int:
        remaining = self.model.schedule.total_examples - self.model.examples_seen
        return max(0, math.ceil(remaining / self.model.config.batch_size))

    def checkpoint(self) -> Path:
        """Save the model as ``step_<n>`` and as ``latest``."""
        directory = self.out_dir / CHECKPOINT_DIR
        self.model.save(directory / f"step_{self.model.step:06d}")
        return self.model.save(directory / LATEST_CHECKPOINT)

    def snapshot(self) -> Path:
        """Diagnostic checkpoint of a diverged run; ``latest`` is kept."""
        return self.model.save(self.out_dir / CHECKPOINT_DIR / f"diverged_step_{self.model.step:06d}")

    @contextmanager
    def _loss_log(self) -> Iterator[Any]:
        path = self.out_dir / LOSS_CSV
        path.parent.mkdir(parents=True, exist_ok=True)
        is_new = not path.is_file() or path.stat().st_size == 0
        with path.open("a", newline="") as handle:
            writer = csv.writer(handle)
            if is_new:
                writer.writerow(LOSS_CSV_COLUMNS)
            yield writer

    def run(self, max_steps: int | None = None) -> list[LossReport]:
        """Train until the schedule is exhausted or ``max_steps`` have run.

        Returns:
            Loss report of every step run by this call.

        Raises:
            TrainingDivergedError: On a non-finite loss, after writing a
                diagnostic snapshot.
        """
        model = self.model
        steps = self.remaining_steps()
        if max_steps is not None:
            steps = min(steps, max_steps)
        start = model.step
        logger.info(
            "training_started",
            start_step=start,
            steps=steps,
            stage=model.stage,
            alpha=model.alpha,
            progressive=model.config.progressive,
        )
        reports: list[LossReport] = []
        with (
            self._loss_log() as writer,
            BatchPrefetcher(self.batch, start, start + steps, self.prefetch_depth) as batches,
        ):
            for _, (real, one_hot) in batches:
                entry = model.schedule_state.entry
                try:
                    report = train_step(model, real, one_hot)
                except TrainingDivergedError as exc:
                    snapshot = self.snapshot()
                    raise TrainingDivergedError(exc.step, snapshot_path=str(snapshot)) from exc
                writer.writerow(report.csv_row())
                reports.append(report)

                state = model.schedule_state
                if state.entry != entry and not state.done:
                    logger.info(
                        "stage_advanced",
                        step=model.step,
                        stage=state.stage,
                        phase=state.phase,
                        alpha=state.alpha,
                    )
                    self.checkpoint()
                elif model.step % self.checkpoint_every == 0:
                    self.checkpoint()

        if reports:
            if model.step % self.checkpoint_every != 0:
                self.checkpoint()
            reports[-1].write_json(self.out_dir / FINAL_LOSSES)
            logger.info(
                "training_finished",
                steps=len(reports),
                d_loss=round(reports[-1].d_loss, 4),
                g_loss=round(reports[-1].g_loss, 4),
                done=model.schedule_state.done,
            )
        return reports
