"""Finite-difference verification of autodiff gradients (float64 mode)."""

from collections.abc import Callable, Sequence

import numpy as np

from core.tensor.modes import precision
from core.tensor.tensor import Tensor, grad


def numeric_gradient(
    fn: Callable[..., Tensor], inputs: Sequence[np.ndarray], wrt: int, eps: float
) -> np.ndarray:
    """Central differences of scalar ``fn`` with respect to ``inputs[wrt]``."""
    base = [np.array(x, dtype=np.float64) for x in inputs]
    target = base[wrt]
    out = np.zeros_like(target)
    for i in np.ndindex(target.shape):
        original = target[i]
        target[i] = original + eps
        plus = fn(*(Tensor(x, dtype=np.float64) for x in base)).item()
        target[i] = original - eps
        minus = fn(*(Tensor(x, dtype=np.float64) for x in base)).item()
        target[i] = original
        out[i] = (plus - minus) / (2.0 * eps)
    return out


def gradient_error(
    fn: Callable[..., Tensor],
    inputs: Sequence[np.ndarray],
    eps: float = 1e-3,
) -> float:
    """Largest relative error between autodiff and finite differences.

    Runs in float64. The relative error of each input's gradient is
    ``|analytic - numeric| / max(|analytic|, |numeric|)`` in the 2-norm.

    Args:
        fn: Maps tensors (one per input) to a scalar tensor.
        inputs: Arrays at which to check the gradient.
        eps: Finite-difference step.

    Returns:
        The maximum relative error over all inputs.
    """
    with precision("float64"):
        leaves = [Tensor(x, requires_grad=True, dtype=np.float64) for x in inputs]
        analytic = grad(fn(*leaves), leaves)
        worst = 0.0
        for k, g in enumerate(analytic):
            numeric = numeric_gradient(fn, inputs, k, eps)
            scale = max(np.linalg.norm(g.data), np.linalg.norm(numeric), 1e-12)
            worst = max(worst, float(np.linalg.norm(g.data - numeric) / scale))
    return worst
