"""Train the pitch classifier used by the evaluation metrics."""

from pathlib import Path

from core.config import get_settings
from core.jobs.encode_jobs import encode_corpus
from core.management.base import BaseCommand
from core.schemas.classifier import ClassifierConfig
from core.services.classifier import train_classifier

CHECKPOINT_STEM = "classifier"
REPORT_FILE = "classifier_report.json"


class Command(BaseCommand):
    help = "Train the spectrogram pitch classifier on a corpus"

    def add_arguments(self, parser):
        parser.add_argument("--data", type=Path, required=True, help="corpus directory")
        parser.add_argument(
            "--classifier-config", type=Path, default=None, help="ClassifierConfig JSON"
        )
        parser.add_argument("--steps", type=int, default=None, help="override training steps")

    def handle(self, options):
        config = (
            ClassifierConfig.read_json(options.classifier_config)
            if options.classifier_config
            else ClassifierConfig()
        )
        overrides = {"seed": options.seed}
        if options.steps is not None:
            overrides["steps"] = options.steps
        config = config.model_copy(update=overrides)

        corpus = encode_corpus(
            options.data, self.representation(options), workers=get_settings().NUM_WORKERS
        )
        classifier, report = train_classifier(
            corpus.train_images,
            corpus.train_pitches,
            corpus.test_images,
            corpus.test_pitches,
            config,
            corpus.representation,
        )
        out = self.output_dir(options)
        checkpoint = classifier.save(out / CHECKPOINT_STEM)
        report.write_json(out / REPORT_FILE)
        self.write(
            f"train accuracy {report.train_accuracy:.3f}, "
            f"held-out accuracy {report.held_out_accuracy:.3f}; saved {checkpoint}"
        )
