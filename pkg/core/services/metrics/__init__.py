"""Evaluation metrics: NDB, FID, inception-style score, pitch accuracy and entropy."""

from core.services.metrics.evaluation import (
    EvaluationResult,
    evaluate_images,
    generate_evaluation_set,
)
from core.services.metrics.fid import fid, frechet_distance
from core.services.metrics.ndb import NdbModel, NdbResult, fit_ndb, ndb, ndb_features
from core.services.metrics.scores import check_simplex, inception_score, pitch_accuracy_entropy

__all__ = [
    "EvaluationResult",
    "NdbModel",
    "NdbResult",
    "check_simplex",
    "evaluate_images",
    "fid",
    "fit_ndb",
    "frechet_distance",
    "generate_evaluation_set",
    "inception_score",
    "ndb",
    "ndb_features",
    "pitch_accuracy_entropy",
]
