"""Pitch classifier supplying labels, features and probabilities to metrics."""

from core.services.classifier.classifier import (
    PitchClassifier,
    accuracy,
    features,
    fit_classifier,
    predict,
    predicted_pitches,
    train_classifier,
)
from core.services.classifier.network import PitchClassifierNet

__all__ = [
    "PitchClassifier",
    "PitchClassifierNet",
    "accuracy",
    "features",
    "fit_classifier",
    "predict",
    "predicted_pitches",
    "train_classifier",
]
