"""Latent sampling, spherical interpolation and conditional generation."""

from collections.abc import Sequence

import numpy as np
import structlog

from core.constants.audio import NOTE_SECONDS_DEFAULT
from core.exceptions import ConfigurationError, InvalidLatentError
from core.models import SpectralImage, Waveform
from core.schemas.gan import GanConfig
from core.services.dataset.pitch import check_pitch, one_hot_pitches
from core.services.gan.model import GanModel
from core.services.spectral import decode
from core.tensor import Tensor, no_grad

logger = structlog.get_logger(__name__)

SLERP_LINEAR_THRESHOLD = 1e-4


def sample_latent(n: int, config: GanConfig | int, seed: int) -> np.ndarray:
    """(n, latent_dim) i.i.d. standard-normal latents, deterministic per seed."""
    if n < 1:
        raise InvalidLatentError(f"latent count must be positive, got {n}")
    dim = config if isinstance(config, int) else config.latent_dim
    return np.random.default_rng(seed).standard_normal((n, dim)).astype(np.float32)


def _orthogonal_direction(a: np.ndarray) -> np.ndarray:
    """Unit vector orthogonal to ``a``, built from its smallest coordinate axis."""
    flat = a.ravel()
    if flat.size < 2:
        raise InvalidLatentError("one-dimensional latents have no orthogonal direction")
    unit = flat / np.linalg.norm(flat)
    axis = np.zeros_like(flat)
    axis[np.argmin(np.abs(flat))] = 1.0
    axis -= axis @ unit * unit
    return (axis / np.linalg.norm(axis)).reshape(a.shape)


def slerp(z1: np.ndarray, z2: np.ndarray, t: float) -> np.ndarray:
    """Great-circle interpolation between two latents.

    Nearly parallel inputs (angle below 1e-4 rad) are interpolated linearly.
    Antipodal inputs have no unique great circle; the path goes through a
    fixed point orthogonal to ``z1``, with norm halfway between the inputs.

    Raises:
        InvalidLatentError: On a zero vector, mismatched shapes, ``t``
            outside [0, 1] or antipodal one-dimensional inputs.
    """
    a = np.asarray(z1, dtype=np.float64)
    b = np.asarray(z2, dtype=np.float64)
    if a.shape != b.shape:
        raise InvalidLatentError(f"latent shapes differ: {a.shape} vs {b.shape}")
    if not 0.0 <= t <= 1.0:
        raise InvalidLatentError(f"interpolation position {t} outside [0, 1]")
    norm_a, norm_b = np.linalg.norm(a), np.linalg.norm(b)
    if norm_a == 0.0 or norm_b == 0.0:
        raise InvalidLatentError("cannot interpolate from a zero latent vector")
    cos_theta = np.clip(np.dot(a.ravel(), b.ravel()) / (norm_a * norm_b), -1.0, 1.0)
    theta = float(np.arccos(cos_theta))
    if theta < SLERP_LINEAR_THRESHOLD:
        return (1.0 - t) * a + t * b
    if np.pi - theta < SLERP_LINEAR_THRESHOLD:
        middle = _orthogonal_direction(a) * (norm_a + norm_b) / 2.0
        if t <= 0.5:
            return slerp(a, middle, 2.0 * t)
        return slerp(middle, b, 2.0 * t - 1.0)
    sin_theta = np.sin(theta)
    return (np.sin((1.0 - t) * theta) * a + np.sin(t * theta) * b) / sin_theta


def _require_final_stage(model: GanModel) -> None:
    if model.stage != model.config.final_stage:
        raise ConfigurationError(
            f"model is at stage {model.stage}; generation needs the final stage "
            f"{model.config.final_stage}",
            component="gan",
        )


def generate_batch(model: GanModel, latents: np.ndarray, pitches: Sequence[int]) -> np.ndarray:
    """One forward pass: (N, H, W, 2) images for paired latents and pitches.

    Raises:
        ConfigurationError: If the model has not reached its final stage.
        PitchOutOfRangeError: If a pitch is outside [24, 84].
        InvalidLatentError: If latents and pitches disagree in count.
    """
    _require_final_stage(model)
    latents = np.atleast_2d(np.asarray(latents, dtype=np.float32))
    if latents.shape != (len(pitches), model.config.latent_dim):
        raise InvalidLatentError(
            f"latents {latents.shape} do not pair with {len(pitches)} pitches of "
            f"dimension {model.config.latent_dim}"
        )
    one_hot = one_hot_pitches(pitches)
    with no_grad():
        images = model.generator(
            Tensor(latents), Tensor(one_hot), model.config.final_stage, model.alpha
        )
    return images.data


def generate(model: GanModel, pitches: Sequence[int], z: np.ndarray) -> list[SpectralImage]:
    """One image per pitch, all conditioned on the latent ``z``."""
    pitches = [check_pitch(p) for p in pitches]
    z = np.asarray(z, dtype=np.float32).reshape(1, -1)
    images = generate_batch(model, np.repeat(z, len(pitches), axis=0), pitches)
    return [SpectralImage(image, model.representation) for image in images]


def interpolate(
    model: GanModel, z1: np.ndarray, z2: np.ndarray, steps: int, pitch: int
) -> list[SpectralImage]:
    """Images along the slerp path from ``z1`` to ``z2`` at one pitch.

    ``steps`` positions are spaced evenly over [0, 1], endpoints included.
    """
    if steps < 2:
        raise InvalidLatentError(f"interpolation needs at least 2 steps, got {steps}")
    check_pitch(pitch)
    latents = np.stack([slerp(z1, z2, t) for t in np.linspace(0.0, 1.0, steps)])
    images = generate_batch(model, latents, [pitch] * steps)
    return [SpectralImage(image, model.representation) for image in images]


def sequence_latents(
    n_notes: int, latent_dim: int, seed: int, anchors: int | None = None
) -> np.ndarray:
    """Latents for a note sequence.

    Without anchors every note shares one latent. With ``anchors`` K >= 2
    the latent travels along slerp segments through K random anchor
    latents, first note at the first anchor and last note at the last.
    """
    if anchors is None or anchors < 2 or n_notes == 1:
        return np.repeat(sample_latent(1, latent_dim, seed), n_notes, axis=0)
    points = sample_latent(anchors, latent_dim, seed)
    latents = []
    for i in range(n_notes):
        u = i / (n_notes - 1) * (anchors - 1)
        segment = min(int(u), anchors - 2)
        latents.append(slerp(points[segment], points[segment + 1], u - segment))
    return np.asarray(latents, dtype=np.float32)


def pitch_sequence(
    model: GanModel,
    pitches: Sequence[int],
    seed: int,
    anchors: int | None = None,
    note_seconds: float = NOTE_SECONDS_DEFAULT,
) -> tuple[Waveform, list[SpectralImage]]:
    """Render a melody note by note and concatenate the audio.

    Each note is generated independently, decoded, and trimmed or padded to
    ``note_seconds``.

    Returns:
        (concatenated waveform, generated image per note)
    """
    if not pitches:
        raise ConfigurationError("pitch sequence is empty", component="gan")
    if note_seconds <= 0:
        raise ConfigurationError("note duration must be positive", component="gan")
    pitches = [check_pitch(p) for p in pitches]
    latents = sequence_latents(len(pitches), model.config.latent_dim, seed, anchors)
    images = [
        SpectralImage(image, model.representation)
        for image in generate_batch(model, latents, pitches)
    ]
    sample_rate = model.representation.sample_rate
    note_length = max(1, round(note_seconds * sample_rate))
    notes = [decode(image).fit_length(note_length).samples for image in images]
    logger.info(
        "pitch_sequence_rendered",
        notes=len(pitches),
        anchors=anchors or 1,
        seconds=len(pitches) * note_length / sample_rate,
    )
    return Waveform(np.concatenate(notes), sample_rate), images
