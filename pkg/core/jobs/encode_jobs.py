"""Background jobs for encoding waveforms and corpora into spectral images."""

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import structlog

from core.exceptions import ConfigurationError
from core.models import Waveform
from core.schemas.spectral import RepresentationConfig
from core.services.dataset import load_manifest, load_waveforms, manifest_path
from core.services.spectral import encode, fit_normalization

logger = structlog.get_logger(__name__)


def encode_waveforms(
    waveforms: Sequence[Waveform], config: RepresentationConfig, workers: int = 1
) -> np.ndarray:
    """Encode every waveform with a fitted config.

    Returns:
        (N, frames, bins, 2) float32 stack in input order.
    """
    logger.info("encode_started", waveforms=len(waveforms), workers=workers)
    if workers <= 1:
        images = [encode(w, config).data for w in waveforms]
    else:
        with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="encode") as pool:
            images = [image.data for image in pool.map(lambda w: encode(w, config), waveforms)]
    logger.info("encode_finished", waveforms=len(images))
    return np.stack(images).astype(np.float32)


@dataclass
class EncodedCorpus:
    """Both splits of a corpus encoded with one fitted representation."""

    representation: RepresentationConfig
    train_images: np.ndarray
    train_pitches: list[int]
    test_images: np.ndarray
    test_pitches: list[int]


def encode_corpus(
    corpus: str | Path, representation: RepresentationConfig, workers: int = 1
) -> EncodedCorpus:
    """Load a rendered corpus and encode its train and test splits.

    Normalization stats are fitted on the training split unless the
    representation already carries them.

    Raises:
        ConfigurationError: If the corpus notes do not match the
            representation's sample rate or length.
    """
    manifest = load_manifest(corpus)
    root = manifest_path(corpus).parent
    if (
        manifest.sample_rate != representation.sample_rate
        or manifest.num_samples != representation.num_samples
    ):
        raise ConfigurationError(
            f"corpus notes are {manifest.num_samples} samples at {manifest.sample_rate} Hz; "
            f"representation expects {representation.num_samples} at "
            f"{representation.sample_rate} Hz",
            component="dataio",
        )
    train_records, test_records = manifest.train_records(), manifest.test_records()
    train_waveforms = load_waveforms(manifest, root, train_records)
    test_waveforms = load_waveforms(manifest, root, test_records)
    if not representation.is_fitted:
        representation = representation.with_norm(
            fit_normalization(train_waveforms, representation)
        )
    empty = np.empty((0, *representation.image_shape), dtype=np.float32)
    return EncodedCorpus(
        representation=representation,
        train_images=encode_waveforms(train_waveforms, representation, workers),
        train_pitches=[r.pitch for r in train_records],
        test_images=(
            encode_waveforms(test_waveforms, representation, workers)
            if test_waveforms
            else empty
        ),
        test_pitches=[r.pitch for r in test_records],
    )
