"""Generation latency measurements."""

import time
from collections.abc import Sequence

import numpy as np
import structlog

from core.models import SpectralImage
from core.schemas.bench import LatencyMeasurement, LatencyReport
from core.services.gan.model import GanModel
from core.services.gan.sampling import generate_batch, sample_latent
from core.services.spectral import decode

logger = structlog.get_logger(__name__)

DEFAULT_BATCH_SIZES = (1, 16)


def _best_of(repeats: int, fn) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def measure_latency(
    model: GanModel,
    batch_sizes: Sequence[int] = DEFAULT_BATCH_SIZES,
    repeats: int = 3,
    seed: int = 0,
    pitch: int = 60,
) -> LatencyReport:
    """Time batched generation and spectral decoding separately.

    Each batch size runs once untimed, then ``repeats`` timed forward passes
    of which the fastest is reported.
    """
    measurements = []
    for batch_size in batch_sizes:
        latents = sample_latent(batch_size, model.config, seed)
        pitches = [pitch] * batch_size
        generate_batch(model, latents, pitches)
        total = _best_of(repeats, lambda: generate_batch(model, latents, pitches))  # noqa: B023
        measurements.append(
            LatencyMeasurement(
                batch_size=batch_size,
                repeats=repeats,
                total_seconds=total,
                per_sample_seconds=total / batch_size,
            )
        )
        logger.info("generation_timed", batch_size=batch_size, seconds=round(total, 6))

    image = SpectralImage(
        generate_batch(model, sample_latent(1, model.config, seed), [pitch])[0],
        model.representation,
    )
    decode_seconds = _best_of(repeats, lambda: decode(image))
    representation = model.representation
    return LatencyReport(
        image_shape=representation.image_shape,
        audio_seconds=representation.num_samples / representation.sample_rate,
        generation=measurements,
        decode_per_sample_seconds=decode_seconds,
    )


def per_sample_speedup(report: LatencyReport) -> float:
    """Per-sample latency of the smallest batch over that of the largest."""
    ordered = sorted(report.generation, key=lambda m: m.batch_size)
    largest = ordered[-1].per_sample_seconds
    return ordered[0].per_sample_seconds / largest if largest > 0 else float("inf")
