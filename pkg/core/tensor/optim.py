"""ADAM optimizer with bias correction."""

from collections.abc import Mapping
from dataclasses import dataclass, field

import numpy as np

from core.constants.training import (
    ADAM_BETA1,
    ADAM_BETA2,
    ADAM_EPSILON,
    LEARNING_RATE,
)
from core.exceptions import ShapeMismatchError
from core.tensor.tensor import Tensor


@dataclass
class AdamState:
    """Moment buffers and hyperparameters for one set of parameters.

    Attributes:
        learning_rate: Step size.
        beta1: First-moment decay (0 disables momentum).
        beta2: Second-moment decay.
        epsilon: Denominator guard.
        step: Number of updates applied so far.
        m: First-moment buffer per parameter name.
        v: Second-moment buffer per parameter name.
    """

    learning_rate: float = LEARNING_RATE
    beta1: float = ADAM_BETA1
    beta2: float = ADAM_BETA2
    epsilon: float = ADAM_EPSILON
    step: int = 0
    m: dict[str, np.ndarray] = field(default_factory=dict)
    v: dict[str, np.ndarray] = field(default_factory=dict)

    def buffers(self) -> dict[str, np.ndarray]:
        """Moment buffers flattened into checkpoint names."""
        out = {f"m/{k}": a for k, a in self.m.items()}
        out.update({f"v/{k}": a for k, a in self.v.items()})
        return out

    def hyperparameters(self) -> dict[str, float | int]:
        return {
            "learning_rate": self.learning_rate,
            "beta1": self.beta1,
            "beta2": self.beta2,
            "epsilon": self.epsilon,
            "step": self.step,
        }

    @classmethod
    def restore(
        cls, hyperparameters: Mapping[str, float | int], buffers: Mapping[str, np.ndarray]
    ) -> "AdamState":
        """Rebuild a state saved with ``hyperparameters`` and ``buffers``."""
        state = cls(
            learning_rate=float(hyperparameters["learning_rate"]),
            beta1=float(hyperparameters["beta1"]),
            beta2=float(hyperparameters["beta2"]),
            epsilon=float(hyperparameters["epsilon"]),
            step=int(hyperparameters["step"]),
        )
        for key, array in buffers.items():
            kind, _, name = key.partition("/")
            target = state.m if kind == "m" else state.v
            target[name] = np.array(array)
        return state


def adam_step(
    params: Mapping[str, Tensor],
    grads: Mapping[str, np.ndarray | None],
    state: AdamState,
) -> Mapping[str, Tensor]:
    """Apply one ADAM update in place.

    Parameters whose gradient is missing or None are treated as having a
    zero gradient.

    Args:
        params: Parameters keyed by name.
        grads: Gradient arrays keyed by the same names.
        state: Optimizer state; its step counter is incremented once.

    Returns:
        The updated parameters.

    Raises:
        ShapeMismatchError: If a gradient or moment buffer does not match
            its parameter's shape.
    """
    state.step += 1
    t = state.step
    correction1 = 1.0 - state.beta1**t
    correction2 = 1.0 - state.beta2**t
    for name, param in params.items():
        g = grads.get(name)
        g = np.zeros_like(param.data) if g is None else np.asarray(g)
        if g.shape != param.shape:
            raise ShapeMismatchError(f"adam_step({name})", param.shape, g.shape)
        m = state.m.get(name)
        v = state.v.get(name)
        if m is None or v is None:
            m = np.zeros_like(param.data)
            v = np.zeros_like(param.data)
        elif m.shape != param.shape:
            raise ShapeMismatchError(f"adam_step({name})", param.shape, m.shape)
        m = state.beta1 * m + (1.0 - state.beta1) * g
        v = state.beta2 * v + (1.0 - state.beta2) * g * g
        state.m[name] = m
        state.v[name] = v
        m_hat = m / correction1
        v_hat = v / correction2
        update = state.learning_rate * m_hat / (np.sqrt(v_hat) + state.epsilon)
        param.data = (param.data - update).astype(param.dtype, copy=False)
    return params
