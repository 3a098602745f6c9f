"""Parameterized layers and the module container used by the networks."""

from collections.abc import Iterator, Mapping

import numpy as np

from core.constants.training import LEAKY_RELU_SLOPE
from core.exceptions import ShapeMismatchError
from core.tensor import ops
from core.tensor.modes import default_dtype
from core.tensor.tensor import Tensor


def he_normal(
    rng: np.random.Generator, shape: tuple[int, ...], fan_in: int
) -> np.ndarray:
    """He initialization with the leaky-ReLU gain."""
    gain = np.sqrt(2.0 / (1.0 + LEAKY_RELU_SLOPE**2))
    std = gain / np.sqrt(fan_in)
    return (rng.standard_normal(shape) * std).astype(default_dtype())


class Module:
    """Container of named parameters and child modules.

    Parameter names are dotted paths (``block1.conv2.weight``), which is also
    how checkpoints key them.
    """

    def __init__(self):
        self._parameters: dict[str, Tensor] = {}
        self._modules: dict[str, Module] = {}

    def register_parameter(self, name: str, value: np.ndarray) -> Tensor:
        param = Tensor(value, requires_grad=True, name=name, dtype=value.dtype)
        self._parameters[name] = param
        return param

    def add_module(self, name: str, module: "Module") -> "Module":
        self._modules[name] = module
        return module

    def named_parameters(self, prefix: str = "") -> Iterator[tuple[str, Tensor]]:
        for name, param in self._parameters.items():
            yield f"{prefix}{name}", param
        for name, module in self._modules.items():
            yield from module.named_parameters(prefix=f"{prefix}{name}.")

    def parameters(self) -> list[Tensor]:
        return [p for _, p in self.named_parameters()]

    def parameter_count(self) -> int:
        return sum(p.size for p in self.parameters())

    def state_dict(self) -> dict[str, np.ndarray]:
        """Copy of every parameter's values keyed by dotted name."""
        return {name: p.data.copy() for name, p in self.named_parameters()}

    def load_state_dict(self, state: Mapping[str, np.ndarray]) -> None:
        """Overwrite parameter values in place.

        Raises:
            ShapeMismatchError: If a stored array does not match its parameter.
            KeyError: If a parameter is missing from ``state``.
        """
        for name, param in self.named_parameters():
            if name not in state:
                raise KeyError(f"checkpoint has no parameter {name!r}")
            value = np.asarray(state[name])
            if value.shape != param.shape:
                raise ShapeMismatchError(f"load {name}", value.shape, param.shape)
            param.data = value.astype(param.dtype, copy=True)


class Conv2d(Module):
    """Same-padded stride-1 convolution with a (kh, kw, C_in, C_out) kernel."""

    def __init__(
        self,
        in_channels: int,
        out_channels: int,
        kernel_size: int,
        rng: np.random.Generator,
    ):
        super().__init__()
        shape = (kernel_size, kernel_size, in_channels, out_channels)
        fan_in = kernel_size * kernel_size * in_channels
        self.weight = self.register_parameter("weight", he_normal(rng, shape, fan_in))
        self.bias = self.register_parameter(
            "bias", np.zeros(out_channels, dtype=default_dtype())
        )

    def __call__(self, x: Tensor) -> Tensor:
        return ops.conv2d(x, self.weight, self.bias)


class Dense(Module):
    """Fully connected layer on (N, D_in) inputs."""

    def __init__(self, in_features: int, out_features: int, rng: np.random.Generator):
        super().__init__()
        self.weight = self.register_parameter(
            "weight", he_normal(rng, (in_features, out_features), in_features)
        )
        self.bias = self.register_parameter(
            "bias", np.zeros(out_features, dtype=default_dtype())
        )

    def __call__(self, x: Tensor) -> Tensor:
        return ops.dense(x, self.weight, self.bias)
