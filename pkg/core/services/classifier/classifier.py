"""Pitch classifier training, inference and persistence.

The classifier reads only the magnitude channel of spectral images so that
its judgements of generated audio do not depend on the phase or IF channel.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import structlog

from core.constants.audio import MIDI_LOW
from core.exceptions import ArtifactNotFoundError, DatasetError, ShapeMismatchError
from core.models import SpectralImage
from core.schemas.classifier import ClassifierConfig, ClassifierReport
from core.schemas.spectral import RepresentationConfig
from core.services.classifier.network import PitchClassifierNet
from core.tensor import AdamState, Tensor, adam_step, backward, load_tensors, no_grad, ops, save_tensors
from core.tensor.checkpoint import container_paths

logger = structlog.get_logger(__name__)

CHECKPOINT_KIND = "classifier"
INFERENCE_CHUNK = 64
LOG_EVERY_STEPS = 50


@dataclass
class PitchClassifier:
    """A trained classifier bound to the representation it was trained on.

    Attributes:
        config: Architecture and training settings.
        representation: Representation of the images it accepts.
        network: The convolutional network.
    """

    config: ClassifierConfig
    representation: RepresentationConfig
    network: PitchClassifierNet

    @classmethod
    def initialize(
        cls, config: ClassifierConfig, representation: RepresentationConfig
    ) -> "PitchClassifier":
        frames, bins, _ = representation.image_shape
        PitchClassifierNet.check_input_shape(frames, bins)
        rng = np.random.default_rng(config.seed)
        return cls(config, representation, PitchClassifierNet(config, rng))

    @property
    def feature_dim(self) -> int:
        return self.config.feature_dim

    def save(self, stem: str | Path) -> Path:
        metadata = {
            "kind": CHECKPOINT_KIND,
            "classifierConfig": self.config.model_dump(mode="json", by_alias=True),
            "representation": self.representation.model_dump(mode="json", by_alias=True),
        }
        return save_tensors(stem, self.network.state_dict(), metadata)

    @classmethod
    def load(cls, stem: str | Path) -> "PitchClassifier":
        """Restore a classifier saved with ``save``.

        Raises:
            ArtifactNotFoundError: If the container is missing or holds
                another kind of model.
        """
        arrays, metadata = load_tensors(stem)
        if metadata.get("kind") != CHECKPOINT_KIND:
            raise ArtifactNotFoundError(str(container_paths(stem)[1]), kind="classifier checkpoint")
        classifier = cls.initialize(
            ClassifierConfig.model_validate(metadata["classifierConfig"]),
            RepresentationConfig.model_validate(metadata["representation"]),
        )
        classifier.network.load_state_dict(arrays)
        return classifier


def _magnitudes(classifier: PitchClassifier, images: np.ndarray | Sequence[SpectralImage]) -> np.ndarray:
    if not isinstance(images, np.ndarray):
        images = np.stack([image.data for image in images]) if len(images) else np.empty((0,))
    expected = classifier.representation.image_shape
    if images.ndim != 4 or images.shape[1:] != expected:
        raise ShapeMismatchError(
            "classifier input", images.shape, (-1, *expected), component="classifier"
        )
    return np.ascontiguousarray(images[..., :1], dtype=np.float32)


def _chunked(classifier: PitchClassifier, images, head: bool) -> np.ndarray:
    magnitudes = _magnitudes(classifier, images)
    net = classifier.network
    out = []
    with no_grad():
        for start in range(0, len(magnitudes), INFERENCE_CHUNK):
            x = Tensor(magnitudes[start : start + INFERENCE_CHUNK])
            out.append((ops.softmax(net(x)) if head else net.features(x)).data)
    width = classifier.config.n_classes if head else classifier.feature_dim
    return np.concatenate(out) if out else np.empty((0, width), dtype=np.float32)


def predict(classifier: PitchClassifier, images: np.ndarray | Sequence[SpectralImage]) -> np.ndarray:
    """(N, 61) class probabilities; rows sum to 1."""
    return _chunked(classifier, images, head=True).astype(np.float64)


def features(classifier: PitchClassifier, images: np.ndarray | Sequence[SpectralImage]) -> np.ndarray:
    """(N, d) feature-layer activations."""
    return _chunked(classifier, images, head=False).astype(np.float64)


def predicted_pitches(probabilities: np.ndarray) -> np.ndarray:
    """MIDI pitch of each row's most probable class."""
    return probabilities.argmax(axis=1) + MIDI_LOW


def accuracy(classifier: PitchClassifier, images: np.ndarray, labels: np.ndarray) -> float:
    """Fraction of images whose argmax class equals the label index."""
    if len(images) == 0:
        return 0.0
    return float(np.mean(predict(classifier, images).argmax(axis=1) == labels))


def fit_classifier(
    images: np.ndarray,
    labels: np.ndarray,
    config: ClassifierConfig,
    representation: RepresentationConfig,
) -> tuple[PitchClassifier, float]:
    """Train on encoded images with class-index labels.

    Returns:
        (classifier, cross-entropy of the last batch)

    Raises:
        DatasetError: If fewer than two classes are present.
    """
    labels = np.asarray(labels, dtype=np.int64)
    if len(np.unique(labels)) < 2:
        raise DatasetError("classifier training needs at least two pitches")
    classifier = PitchClassifier.initialize(config, representation)
    magnitudes = _magnitudes(classifier, images)
    net = classifier.network
    params = dict(net.named_parameters())
    optimizer = AdamState(learning_rate=config.learning_rate, beta1=0.9, beta2=0.999)
    rng = np.random.default_rng([config.seed, 3])
    n = len(magnitudes)
    loss_value = float("nan")
    for step in range(config.steps):
        index = rng.choice(n, size=config.batch_size, replace=n < config.batch_size)
        loss = ops.softmax_cross_entropy(net(Tensor(magnitudes[index])), labels[index])
        leaves = backward(loss)
        adam_step(params, {name: leaves.get(p) for name, p in params.items()}, optimizer)
        loss_value = loss.item()
        if step % LOG_EVERY_STEPS == 0:
            logger.debug("classifier_step", step=step, loss=round(loss_value, 5))
    logger.info("classifier_trained", steps=config.steps, final_loss=round(loss_value, 5))
    return classifier, loss_value


def train_classifier(
    train_images: np.ndarray,
    train_pitches: Sequence[int],
    test_images: np.ndarray,
    test_pitches: Sequence[int],
    config: ClassifierConfig,
    representation: RepresentationConfig,
) -> tuple[PitchClassifier, ClassifierReport]:
    """Train on one split and report accuracy on both.

    Args:
        train_images: (N, frames, bins, 2) encoded training images.
        train_pitches: MIDI pitch per training image.
        test_images: Held-out images (may be empty).
        test_pitches: MIDI pitch per held-out image.
        config: Classifier settings.
        representation: Fitted representation the images were encoded with.

    Returns:
        (classifier, report)
    """
    train_labels = np.asarray(train_pitches) - MIDI_LOW
    test_labels = np.asarray(test_pitches, dtype=np.int64) - MIDI_LOW
    classifier, final_loss = fit_classifier(train_images, train_labels, config, representation)
    report = ClassifierReport(
        train_accuracy=accuracy(classifier, train_images, train_labels),
        held_out_accuracy=accuracy(classifier, test_images, test_labels),
        final_loss=final_loss,
        n_train=len(train_images),
        n_test=len(test_images),
        pitches=sorted({int(p) for p in train_pitches} | {int(p) for p in test_pitches}),
    )
    logger.info(
        "classifier_evaluated",
        train_accuracy=round(report.train_accuracy, 4),
        held_out_accuracy=round(report.held_out_accuracy, 4),
    )
    return classifier, report
