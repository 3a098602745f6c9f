"""Pytest configuration and shared fixtures."""

import os

import numpy as np
import pytest

# Configure settings for tests
os.environ.setdefault("SPECGAN_SETTINGS_MODULE", "specgan.settings_test")

from core.config import get_settings
from core.logging import configure_logging
from core.schemas.classifier import ClassifierConfig
from core.schemas.gan import GanConfig
from core.services.classifier import fit_classifier
from core.services.dataset import make_dataset, random_timbre, synth_note
from core.services.gan import GanModel
from core.services.spectral import encode, fit_normalization, preset_config

get_settings()
configure_logging()

DESK_PITCHES = (48, 55, 60, 67)


@pytest.fixture
def rng():
    """Seeded numpy generator."""
    return np.random.default_rng(1234)


@pytest.fixture(scope="session")
def desk_notes():
    """Short synthetic notes matching the desk representation."""
    config = preset_config("desk")
    return [
        synth_note(pitch, random_timbre(seed), seed, num_samples=config.num_samples)
        for seed, pitch in enumerate(DESK_PITCHES * 2)
    ]


@pytest.fixture(scope="session")
def desk_representation(desk_notes):
    """Desk representation with stats fitted on ``desk_notes``."""
    config = preset_config("desk")
    return config.with_norm(fit_normalization(desk_notes, config))


@pytest.fixture(scope="session")
def desk_images(desk_notes, desk_representation):
    """Encoded ``desk_notes``, (8, 16, 128, 2)."""
    return np.stack([encode(note, desk_representation).data for note in desk_notes])


@pytest.fixture(scope="session")
def desk_classifier(desk_images, desk_representation):
    """Briefly trained narrow classifier over the desk pitches."""
    labels = np.array(DESK_PITCHES * 2) - 24
    config = ClassifierConfig(channels=(4, 4, 4, 4), steps=20, batch_size=8, seed=0)
    classifier, _ = fit_classifier(desk_images, labels, config, desk_representation)
    return classifier


@pytest.fixture
def tiny_gan_config():
    """Non-progressive desk-shaped config with very few channels."""
    return GanConfig.desk(
        scale_factor=1 / 32,
        progressive=False,
        batch_size=4,
        blend_examples=8,
        stabilize_examples=8,
        seed=7,
    )


@pytest.fixture
def tiny_gan(tiny_gan_config, desk_representation):
    """Untrained model that is already at its final stage."""
    return GanModel(tiny_gan_config, desk_representation)


@pytest.fixture(scope="session")
def desk_corpus(tmp_path_factory):
    """Rendered 4-pitch desk corpus directory."""
    root = tmp_path_factory.mktemp("corpus")
    config = preset_config("desk")
    make_dataset(
        root,
        n_per_pitch=5,
        pitches=DESK_PITCHES,
        n_timbres=2,
        seed=3,
        sample_rate=config.sample_rate,
        num_samples=config.num_samples,
    )
    return root
