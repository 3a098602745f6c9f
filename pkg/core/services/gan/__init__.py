"""Progressive pitch-conditional GAN over spectral images."""

from core.services.gan.bench import measure_latency, per_sample_speedup
from core.services.gan.losses import gradient_penalty
from core.services.gan.model import GanModel, gan_config_for
from core.services.gan.networks import (
    Discriminator,
    Generator,
    build_discriminator,
    build_generator,
)
from core.services.gan.sampling import (
    generate,
    generate_batch,
    interpolate,
    pitch_sequence,
    sample_latent,
    sequence_latents,
    slerp,
)
from core.services.gan.schedule import advance_schedule, build_schedule
from core.services.gan.trainer import GanTrainer, latest_checkpoint
from core.services.gan.training import generator_objective, real_images_at_stage, train_step

__all__ = [
    "Discriminator",
    "GanModel",
    "GanTrainer",
    "Generator",
    "advance_schedule",
    "build_discriminator",
    "build_generator",
    "build_schedule",
    "gan_config_for",
    "generate",
    "generate_batch",
    "generator_objective",
    "gradient_penalty",
    "interpolate",
    "latest_checkpoint",
    "measure_latency",
    "per_sample_speedup",
    "pitch_sequence",
    "real_images_at_stage",
    "sample_latent",
    "sequence_latents",
    "slerp",
    "train_step",
]
