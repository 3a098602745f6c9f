"""Convolutional pitch classifier network."""

import numpy as np

from core.exceptions import ConfigurationError
from core.schemas.classifier import ClassifierConfig
from core.tensor import Conv2d, Dense, Module, Tensor, ops

POOL_LEVELS = 4


class PitchClassifierNet(Module):
    """Conv blocks, global average pooling and a dense pitch head.

    Each of the four blocks is conv 3x3, leaky ReLU and a 2x2 mean-pool.

    Input is the magnitude channel of a spectral image, (N, frames, bins, 1).
    """

    def __init__(self, config: ClassifierConfig, rng: np.random.Generator):
        super().__init__()
        self.config = config
        self.convs: list[Conv2d] = []
        in_channels = 1
        for i, channels in enumerate(config.channels):
            self.convs.append(self.add_module(f"conv{i}", Conv2d(in_channels, channels, 3, rng)))
            in_channels = channels
        self.head = self.add_module("head", Dense(in_channels, config.n_classes, rng))

    @staticmethod
    def check_input_shape(frames: int, bins: int) -> None:
        factor = 2**POOL_LEVELS
        if frames % factor or bins % factor:
            raise ConfigurationError(
                f"classifier input ({frames}, {bins}) must be divisible by {factor}",
                component="classifier",
            )

    def features(self, magnitude: Tensor) -> Tensor:
        """Global-average-pooled activations of the last block, (N, d)."""
        x = magnitude
        for conv in self.convs:
            x = ops.downsample2x2(ops.leaky_relu(conv(x)))
        return ops.reduce_mean(x, axis=(1, 2))

    def __call__(self, magnitude: Tensor) -> Tensor:
        return self.head(self.features(magnitude))
