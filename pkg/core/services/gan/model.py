"""GAN model state: networks, optimizers, schedule position and checkpoints."""

import json
from pathlib import Path
from typing import Any

import numpy as np
import structlog

from core.constants.training import HIRES_BASE_SHAPE, LOWRES_BASE_SHAPE
from core.exceptions import ArtifactNotFoundError, ConfigurationError
from core.schemas.gan import GanConfig, ScheduleState
from core.schemas.spectral import RepresentationConfig
from core.services.gan.networks import Discriminator, Generator
from core.services.gan.schedule import advance_schedule, build_schedule
from core.tensor import AdamState, load_tensors, save_tensors
from core.tensor.checkpoint import container_paths

logger = structlog.get_logger(__name__)

CHECKPOINT_KIND = "gan"
_GENERATOR = "generator/"
_DISCRIMINATOR = "discriminator/"
_G_ADAM = "g_adam/"
_D_ADAM = "d_adam/"


class GanModel:
    """Generator + discriminator with their training state.

    The current stage and alpha are derived from ``examples_seen`` through
    the training schedule, so restoring the counter restores the position
    in progressive training.

    Attributes:
        config: Architecture and training configuration.
        representation: Representation of the images the model generates,
            normally carrying fitted normalization stats.
        generator: Generator network.
        discriminator: Critic + pitch classifier network.
        g_optimizer: ADAM state of the generator.
        d_optimizer: ADAM state of the discriminator.
        step: Training steps completed.
        examples_seen: Real examples consumed by training.
        rng: Training randomness (latents, gradient-penalty epsilon).
    """

    def __init__(self, config: GanConfig, representation: RepresentationConfig):
        if config.output_shape != representation.image_shape:
            raise ConfigurationError(
                f"generator output {config.output_shape} does not match "
                f"representation image shape {representation.image_shape}",
                component="gan",
            )
        self.config = config
        self.representation = representation
        init_rng = np.random.default_rng(config.seed)
        self.generator = Generator(config, init_rng)
        self.discriminator = Discriminator(config, init_rng)
        self.g_optimizer = AdamState(learning_rate=config.learning_rate)
        self.d_optimizer = AdamState(learning_rate=config.learning_rate)
        self.schedule = build_schedule(config)
        self.step = 0
        self.examples_seen = 0
        self.rng = np.random.default_rng([config.seed, 1])

    @property
    def schedule_state(self) -> ScheduleState:
        return advance_schedule(self.schedule, self.examples_seen)

    @property
    def stage(self) -> int:
        return self.schedule_state.stage

    @property
    def alpha(self) -> float:
        return self.schedule_state.alpha

    @property
    def is_fully_grown(self) -> bool:
        """Whether the model generates at the final resolution with alpha 1."""
        state = self.schedule_state
        return state.stage == self.config.final_stage and state.alpha == 1.0

    def tensors(self) -> dict[str, np.ndarray]:
        """Every array a checkpoint stores, keyed by prefixed name."""
        out: dict[str, np.ndarray] = {}
        out.update({_GENERATOR + k: v for k, v in self.generator.state_dict().items()})
        out.update(
            {_DISCRIMINATOR + k: v for k, v in self.discriminator.state_dict().items()}
        )
        out.update({_G_ADAM + k: v for k, v in self.g_optimizer.buffers().items()})
        out.update({_D_ADAM + k: v for k, v in self.d_optimizer.buffers().items()})
        return out

    def metadata(self) -> dict[str, Any]:
        return {
            "kind": CHECKPOINT_KIND,
            "ganConfig": self.config.model_dump(mode="json", by_alias=True),
            "representation": self.representation.model_dump(mode="json", by_alias=True),
            "gOptimizer": self.g_optimizer.hyperparameters(),
            "dOptimizer": self.d_optimizer.hyperparameters(),
            "step": self.step,
            "examplesSeen": self.examples_seen,
            "rngState": json.dumps(self.rng.bit_generator.state),
        }

    def save(self, stem: str | Path) -> Path:
        """Write a checkpoint container; returns the manifest path."""
        path = save_tensors(stem, self.tensors(), self.metadata())
        logger.info(
            "checkpoint_saved",
            path=str(path),
            step=self.step,
            stage=self.stage,
            examples_seen=self.examples_seen,
        )
        return path

    @classmethod
    def load(cls, stem: str | Path) -> "GanModel":
        """Restore a model, its optimizers and its rng from a checkpoint.

        Raises:
            ArtifactNotFoundError: If the container is missing or not a GAN
                checkpoint.
        """
        arrays, metadata = load_tensors(stem)
        if metadata.get("kind") != CHECKPOINT_KIND:
            raise ArtifactNotFoundError(str(container_paths(stem)[1]), kind="GAN checkpoint")
        model = cls(
            GanConfig.model_validate(metadata["ganConfig"]),
            RepresentationConfig.model_validate(metadata["representation"]),
        )
        model.generator.load_state_dict(_strip(arrays, _GENERATOR))
        model.discriminator.load_state_dict(_strip(arrays, _DISCRIMINATOR))
        model.g_optimizer = AdamState.restore(metadata["gOptimizer"], _strip(arrays, _G_ADAM))
        model.d_optimizer = AdamState.restore(metadata["dOptimizer"], _strip(arrays, _D_ADAM))
        model.step = int(metadata["step"])
        model.examples_seen = int(metadata["examplesSeen"])
        model.rng.bit_generator.state = json.loads(metadata["rngState"])
        logger.info("checkpoint_loaded", path=str(stem), step=model.step, stage=model.stage)
        return model


def _strip(arrays: dict[str, np.ndarray], prefix: str) -> dict[str, np.ndarray]:
    return {k[len(prefix) :]: v for k, v in arrays.items() if k.startswith(prefix)}


def gan_config_for(representation: RepresentationConfig, **overrides: Any) -> GanConfig:
    """GAN config whose output matches a representation's image shape.

    Desk-sized images get the desk config. Larger images get the full-scale
    channel schedule with a (2, 16) or (4, 8) base and as many stages as it
    takes to reach the image size.

    Raises:
        ConfigurationError: If no supported base shape grows into the image.
    """
    frames, bins, _ = representation.image_shape
    desk = GanConfig.desk()
    if desk.output_shape[:2] == (frames, bins):
        return GanConfig.desk(**overrides)
    for base in (HIRES_BASE_SHAPE, LOWRES_BASE_SHAPE):
        ratio_h, ratio_w = frames / base[0], bins / base[1]
        stages = int(np.log2(ratio_h)) + 1 if ratio_h >= 1 else 0
        if ratio_h == ratio_w and stages >= 1 and 2 ** (stages - 1) == ratio_h:
            values = {"base_shape": base, "stage_count": stages}
            values.update(overrides)
            return GanConfig(**values)
    raise ConfigurationError(
        f"no generator layout produces images of shape {representation.image_shape}",
        component="gan",
    )
