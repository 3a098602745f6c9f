"""WGAN-GP and auxiliary-classifier losses."""

from collections.abc import Callable

import numpy as np

from core.exceptions import ShapeMismatchError
from core.tensor import Tensor, grad, ops

GRADIENT_NORM_EPSILON = 1e-12


def interpolate_batch(
    x_real: np.ndarray, x_fake: np.ndarray, epsilon: np.ndarray
) -> np.ndarray:
    """``eps * real + (1 - eps) * fake`` with one epsilon per example."""
    shape = (x_real.shape[0],) + (1,) * (x_real.ndim - 1)
    eps = np.asarray(epsilon, dtype=x_real.dtype).reshape(shape)
    return eps * x_real + (1.0 - eps) * x_fake


def gradient_penalty(
    critic: Callable[[Tensor], Tensor],
    x_real: np.ndarray,
    x_fake: np.ndarray,
    rng: np.random.Generator | None = None,
    epsilon: np.ndarray | None = None,
) -> Tensor:
    """Mean over the batch of ``(||grad_x D(x_hat)||_2 - 1)**2``.

    The returned tensor is differentiable with respect to the critic's
    parameters (the input gradient is computed with ``create_graph``).

    Args:
        critic: Maps (N, ...) inputs to (N, 1) or (N,) scores.
        x_real: Real batch.
        x_fake: Generated batch of the same shape.
        rng: Source of the per-example epsilon ~ U[0, 1].
        epsilon: Explicit per-example epsilon, overriding ``rng``.

    Returns:
        Scalar penalty tensor.

    Raises:
        ShapeMismatchError: If the batches differ in shape.
    """
    x_real = np.asarray(x_real)
    x_fake = np.asarray(x_fake)
    if x_real.shape != x_fake.shape:
        raise ShapeMismatchError("gradient_penalty", x_real.shape, x_fake.shape, component="gan")
    n = x_real.shape[0]
    if epsilon is None:
        epsilon = (rng or np.random.default_rng()).uniform(0.0, 1.0, size=n)
    x_hat = Tensor(
        interpolate_batch(x_real, x_fake, epsilon), requires_grad=True, dtype=x_real.dtype
    )
    scores = critic(x_hat)
    (input_grad,) = grad(ops.reduce_sum(scores), [x_hat], create_graph=True)
    flat = ops.reshape(input_grad, (n, -1))
    norms = ops.sqrt(ops.add(ops.reduce_sum(ops.mul(flat, flat), axis=1), GRADIENT_NORM_EPSILON))
    deviation = ops.sub(norms, 1.0)
    return ops.reduce_mean(ops.mul(deviation, deviation))


def wasserstein_critic_loss(real_scores: Tensor, fake_scores: Tensor) -> Tensor:
    """``mean(D(fake)) - mean(D(real))``."""
    return ops.sub(ops.reduce_mean(fake_scores), ops.reduce_mean(real_scores))


def wasserstein_generator_loss(fake_scores: Tensor) -> Tensor:
    """``-mean(D(fake))``."""
    return ops.neg(ops.reduce_mean(fake_scores))


def auxiliary_classifier_loss(logits: Tensor, labels: np.ndarray) -> Tensor:
    """Pitch cross-entropy of the discriminator's classifier head."""
    return ops.softmax_cross_entropy(logits, labels)
