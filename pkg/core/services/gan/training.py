"""One WGAN-GP + AC-GAN update of the discriminator and the generator."""

from dataclasses import dataclass

import numpy as np
import structlog

from core.exceptions import ShapeMismatchError, TrainingDivergedError
from core.schemas.gan import LossReport
from core.services.gan.losses import (
    auxiliary_classifier_loss,
    gradient_penalty,
    wasserstein_critic_loss,
    wasserstein_generator_loss,
)
from core.services.gan.model import GanModel
from core.tensor import Module, Tensor, adam_step, backward, no_grad, ops

logger = structlog.get_logger(__name__)


@dataclass
class GeneratorObjective:
    """Generator loss graph plus its reportable parts."""

    loss: Tensor
    adversarial: float
    acgan_fake: float


def downsample_images(images: np.ndarray, factor: int) -> np.ndarray:
    """Mean-pool (N, H, W, C) images by ``factor`` along H and W."""
    if factor == 1:
        return images
    n, h, w, c = images.shape
    if h % factor or w % factor:
        raise ShapeMismatchError("downsample_images", images.shape, (factor, factor), component="gan")
    return images.reshape(n, h // factor, factor, w // factor, factor, c).mean(axis=(2, 4))


def real_images_at_stage(
    images: np.ndarray, model: GanModel, stage: int, alpha: float
) -> np.ndarray:
    """Real batch at a stage's resolution, faded the way the generator is.

    While a stage blends in, the real images are mixed with their
    half-resolution copy upsampled back:
    ``alpha * x + (1 - alpha) * upsample(downsample(x))``.
    """
    images = np.asarray(images, dtype=np.float32)
    final = model.config.output_shape
    if images.ndim != 4 or images.shape[1:] != final:
        raise ShapeMismatchError("real batch", images.shape, (-1, *final), component="gan")
    x = downsample_images(images, 2 ** (model.config.final_stage - stage))
    if stage > 0 and alpha < 1.0:
        coarse = downsample_images(x, 2).repeat(2, axis=1).repeat(2, axis=2)
        x = alpha * x + (1.0 - alpha) * coarse
    return x.astype(np.float32)


def _grads_by_name(module: Module, leaves: dict[Tensor, np.ndarray]) -> dict[str, np.ndarray | None]:
    return {name: leaves.get(param) for name, param in module.named_parameters()}


def _xe_value(logits: Tensor, labels: np.ndarray) -> float:
    with no_grad():
        return auxiliary_classifier_loss(logits.detach(), labels).item()


def generator_objective(
    model: GanModel,
    latents: np.ndarray,
    pitch_one_hot: np.ndarray,
    stage: int,
    alpha: float,
) -> GeneratorObjective:
    """``-mean(D(G(z))) + acgan_weight * XE(classifier(G(z)), pitch)``.

    With ``acgan_weight`` 0 the classification term is left out of the graph
    entirely, so no gradient reaches the classifier head.
    """
    labels = pitch_one_hot.argmax(axis=1)
    fake = model.generator(Tensor(latents), Tensor(pitch_one_hot), stage, alpha)
    scores, logits = model.discriminator(fake, stage, alpha)
    adversarial = wasserstein_generator_loss(scores)
    weight = model.config.acgan_weight
    if weight > 0.0:
        classification = auxiliary_classifier_loss(logits, labels)
        loss = ops.add(adversarial, ops.mul(classification, weight))
        acgan_fake = classification.item()
    else:
        loss = adversarial
        acgan_fake = _xe_value(logits, labels)
    return GeneratorObjective(loss=loss, adversarial=adversarial.item(), acgan_fake=acgan_fake)


def _check_finite(value: float, model: GanModel, what: str) -> None:
    if not np.isfinite(value):
        logger.error("loss_diverged", step=model.step, loss=what, value=value)
        raise TrainingDivergedError(model.step)


def train_step(model: GanModel, real_batch: np.ndarray, pitch_batch: np.ndarray) -> LossReport:
    """Update the discriminator, then the generator, on one batch.

    The stage and alpha come from the model's schedule position; the
    examples counter advances by the batch size afterwards.

    Args:
        model: Model to update in place.
        real_batch: (N, H, W, 2) normalized real images at full resolution.
        pitch_batch: (N, 61) one-hot pitch rows of the real images; the
            generator is conditioned on the same pitches.

    Returns:
        The step's losses.

    Raises:
        ShapeMismatchError: If the batch does not match the model.
        TrainingDivergedError: If a loss is NaN or infinite. Parameters of
            the network whose loss diverged are left untouched.
    """
    pitch_batch = np.asarray(pitch_batch, dtype=np.float32)
    n = real_batch.shape[0]
    if pitch_batch.shape != (n, model.config.pitch_dim):
        raise ShapeMismatchError(
            "pitch batch", pitch_batch.shape, (n, model.config.pitch_dim), component="gan"
        )
    state = model.schedule_state
    stage, alpha = state.stage, state.alpha
    labels = pitch_batch.argmax(axis=1)
    real = real_images_at_stage(real_batch, model, stage, alpha)
    config = model.config
    D = model.discriminator  # noqa: N806
    G = model.generator  # noqa: N806

    # Discriminator
    latents = model.rng.standard_normal((n, config.latent_dim)).astype(np.float32)
    with no_grad():
        fake = G(Tensor(latents), Tensor(pitch_batch), stage, alpha).data
    real_scores, real_logits = D(Tensor(real), stage, alpha)
    fake_scores, _ = D(Tensor(fake), stage, alpha)
    critic = wasserstein_critic_loss(real_scores, fake_scores)
    penalty = gradient_penalty(lambda x: D(x, stage, alpha)[0], real, fake, rng=model.rng)
    d_loss = ops.add(critic, ops.mul(penalty, config.gp_weight))
    if config.acgan_weight > 0.0:
        acgan_real_t = auxiliary_classifier_loss(real_logits, labels)
        d_loss = ops.add(d_loss, ops.mul(acgan_real_t, config.acgan_weight))
        acgan_real = acgan_real_t.item()
    else:
        acgan_real = _xe_value(real_logits, labels)
    _check_finite(d_loss.item(), model, "d_loss")
    adam_step(dict(D.named_parameters()), _grads_by_name(D, backward(d_loss)), model.d_optimizer)

    # Generator
    latents = model.rng.standard_normal((n, config.latent_dim)).astype(np.float32)
    objective = generator_objective(model, latents, pitch_batch, stage, alpha)
    _check_finite(objective.loss.item(), model, "g_loss")
    adam_step(
        dict(G.named_parameters()),
        _grads_by_name(G, backward(objective.loss)),
        model.g_optimizer,
    )

    report = LossReport(
        step=model.step,
        stage=stage,
        alpha=alpha,
        d_loss=d_loss.item(),
        g_loss=objective.loss.item(),
        gp=penalty.item(),
        acgan_real=acgan_real,
        acgan_fake=objective.acgan_fake,
        wasserstein=-critic.item(),
        examples_seen=model.examples_seen + n,
    )
    model.step += 1
    model.examples_seen += n
    return report
