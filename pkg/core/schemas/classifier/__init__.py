"""Classifier schemas."""

from core.schemas.classifier.classifier_config import ClassifierConfig
from core.schemas.classifier.classifier_report import ClassifierReport

__all__ = ["ClassifierConfig", "ClassifierReport"]
