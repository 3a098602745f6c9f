"""Progressive generator and discriminator.

Both networks hold the layers of every stage from construction; the stage
and blend coefficient are arguments of the forward pass. Stage ``s`` works at
``base_shape * 2**s`` with ``config.stage_channels(s)`` channels.

Generator: dense(latent + pitch -> H0*W0*C0) and a 3x3 conv at the base
resolution, then per stage [upsample, conv 3x3, conv 3x3], every conv
followed by pixel_norm(leaky_relu(.)), and a per-stage 1x1 ``to_rgb`` conv.
While a stage blends in, the output is
``tanh(alpha * to_rgb_s(h_s) + (1 - alpha) * upsample(to_rgb_{s-1}(h_{s-1})))``.

Discriminator: per-stage 1x1 ``from_rgb`` conv, per stage [conv 3x3,
conv 3x3, downsample] down to the base resolution, then minibatch stddev,
a 3x3 conv, a dense layer, and two heads (critic score, pitch logits).
"""

import numpy as np

from core.exceptions import ConfigurationError, ShapeMismatchError
from core.schemas.gan import GanConfig
from core.tensor import Conv2d, Dense, Module, Tensor, ops


def _activate(x: Tensor) -> Tensor:
    return ops.pixel_norm(ops.leaky_relu(x))


def _check_stage(config: GanConfig, stage: int, alpha: float) -> None:
    if not 0 <= stage < config.stage_count:
        raise ConfigurationError(
            f"stage {stage} outside [0, {config.stage_count - 1}]", component="gan"
        )
    if not 0.0 <= alpha <= 1.0:
        raise ConfigurationError(f"alpha {alpha} outside [0, 1]", component="gan")


class Generator(Module):
    """Maps (latent, one-hot pitch) to a tanh-bounded spectral image."""

    def __init__(self, config: GanConfig, rng: np.random.Generator):
        super().__init__()
        self.config = config
        h0, w0 = config.base_shape
        c0 = config.stage_channels(0)
        self.initial_dense = self.add_module(
            "initial_dense",
            Dense(config.latent_dim + config.pitch_dim, h0 * w0 * c0, rng),
        )
        self.initial_conv = self.add_module("initial_conv", Conv2d(c0, c0, 3, rng))
        self.blocks: list[tuple[Conv2d, Conv2d]] = []
        self.to_rgb: list[Conv2d] = []
        for stage in range(config.stage_count):
            channels = config.stage_channels(stage)
            if stage > 0:
                previous = config.stage_channels(stage - 1)
                conv1 = self.add_module(
                    f"block{stage}.conv1", Conv2d(previous, channels, 3, rng)
                )
                conv2 = self.add_module(
                    f"block{stage}.conv2", Conv2d(channels, channels, 3, rng)
                )
                self.blocks.append((conv1, conv2))
            self.to_rgb.append(
                self.add_module(f"to_rgb{stage}", Conv2d(channels, 2, 1, rng))
            )

    @property
    def input_dim(self) -> int:
        return self.config.latent_dim + self.config.pitch_dim

    def features(self, latent: Tensor, pitch: Tensor, stage: int) -> list[Tensor]:
        """Hidden activations of stages 0..stage."""
        if latent.ndim != 2 or latent.shape[1] != self.config.latent_dim:
            raise ShapeMismatchError("generator latent", latent.shape, (-1, self.config.latent_dim))
        if pitch.shape != (latent.shape[0], self.config.pitch_dim):
            raise ShapeMismatchError(
                "generator pitch", pitch.shape, (latent.shape[0], self.config.pitch_dim)
            )
        h0, w0 = self.config.base_shape
        c0 = self.config.stage_channels(0)
        x = ops.concat([latent, pitch], axis=1)
        x = _activate(ops.reshape(self.initial_dense(x), (latent.shape[0], h0, w0, c0)))
        x = _activate(self.initial_conv(x))
        hidden = [x]
        for conv1, conv2 in self.blocks[:stage]:
            x = ops.upsample2x2(x)
            x = _activate(conv1(x))
            x = _activate(conv2(x))
            hidden.append(x)
        return hidden

    def __call__(
        self, latent: Tensor, pitch: Tensor, stage: int | None = None, alpha: float = 1.0
    ) -> Tensor:
        """Generate images at ``stage`` (default: final) blended by ``alpha``.

        Args:
            latent: (N, latent_dim) latent vectors.
            pitch: (N, pitch_dim) one-hot pitch rows.
            stage: Output stage.
            alpha: Weight of the newest stage's path; ignored at stage 0.

        Returns:
            (N, H_stage, W_stage, 2) tensor in [-1, 1].
        """
        stage = self.config.final_stage if stage is None else stage
        _check_stage(self.config, stage, alpha)
        hidden = self.features(latent, pitch, stage)
        out = self.to_rgb[stage](hidden[stage])
        if stage > 0 and alpha < 1.0:
            skip = ops.upsample2x2(self.to_rgb[stage - 1](hidden[stage - 1]))
            out = ops.add(ops.mul(out, alpha), ops.mul(skip, 1.0 - alpha))
        return ops.tanh(out)


class Discriminator(Module):
    """Scores images (critic) and predicts their pitch (auxiliary classifier)."""

    def __init__(self, config: GanConfig, rng: np.random.Generator):
        super().__init__()
        self.config = config
        self.from_rgb: list[Conv2d] = []
        self.blocks: dict[int, tuple[Conv2d, Conv2d]] = {}
        for stage in range(config.stage_count):
            channels = config.stage_channels(stage)
            self.from_rgb.append(
                self.add_module(f"from_rgb{stage}", Conv2d(2, channels, 1, rng))
            )
            if stage > 0:
                previous = config.stage_channels(stage - 1)
                conv1 = self.add_module(
                    f"block{stage}.conv1", Conv2d(channels, channels, 3, rng)
                )
                conv2 = self.add_module(
                    f"block{stage}.conv2", Conv2d(channels, previous, 3, rng)
                )
                self.blocks[stage] = (conv1, conv2)
        h0, w0 = config.base_shape
        c0 = config.stage_channels(0)
        self.final_conv = self.add_module("final_conv", Conv2d(c0 + 1, c0, 3, rng))
        self.final_dense = self.add_module("final_dense", Dense(h0 * w0 * c0, c0, rng))
        self.critic_head = self.add_module("critic_head", Dense(c0, 1, rng))
        self.classifier_head = self.add_module(
            "classifier_head", Dense(c0, config.pitch_dim, rng)
        )

    def _block(self, stage: int, x: Tensor) -> Tensor:
        conv1, conv2 = self.blocks[stage]
        x = ops.leaky_relu(conv1(x))
        x = ops.leaky_relu(conv2(x))
        return ops.downsample2x2(x)

    def trunk(self, images: Tensor, stage: int | None = None, alpha: float = 1.0) -> Tensor:
        """Base-resolution activations after minibatch stddev, (N, H0, W0, C0 + 1)."""
        stage = self.config.final_stage if stage is None else stage
        _check_stage(self.config, stage, alpha)
        expected = (*self.config.stage_shape(stage), 2)
        if images.ndim != 4 or images.shape[1:] != expected:
            raise ShapeMismatchError("discriminator input", images.shape, (-1, *expected))

        x = ops.leaky_relu(self.from_rgb[stage](images))
        if stage > 0:
            x = self._block(stage, x)
            if alpha < 1.0:
                skip = ops.leaky_relu(self.from_rgb[stage - 1](ops.downsample2x2(images)))
                x = ops.add(ops.mul(x, alpha), ops.mul(skip, 1.0 - alpha))
        for s in range(stage - 1, 0, -1):
            x = self._block(s, x)
        return ops.minibatch_stddev(x)

    def __call__(
        self, images: Tensor, stage: int | None = None, alpha: float = 1.0
    ) -> tuple[Tensor, Tensor]:
        """Critic scores (N, 1) and pitch logits (N, pitch_dim)."""
        x = self.trunk(images, stage, alpha)
        x = ops.leaky_relu(self.final_conv(x))
        x = ops.reshape(x, (x.shape[0], -1))
        x = ops.leaky_relu(self.final_dense(x))
        return self.critic_head(x), self.classifier_head(x)


def build_generator(config: GanConfig, rng: np.random.Generator) -> Generator:
    return Generator(config, rng)


def build_discriminator(config: GanConfig, rng: np.random.Generator) -> Discriminator:
    return Discriminator(config, rng)
