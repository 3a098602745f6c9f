"""Score a GAN checkpoint, or the held-out real notes, with the metric battery."""

from pathlib import Path

from core.config import get_settings
from core.constants.training import NDB_CLUSTERS
from core.exceptions import ConfigurationError
from core.jobs.encode_jobs import encode_corpus
from core.management.base import BaseCommand, resolve_checkpoint
from core.services.classifier import PitchClassifier
from core.services.gan import GanModel
from core.services.metrics import evaluate_images, generate_evaluation_set


class Command(BaseCommand):
    help = "Compute NDB, FID, IS, pitch accuracy and pitch entropy"

    def add_arguments(self, parser):
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument("--checkpoint", type=Path, help="GAN checkpoint stem or run directory")
        source.add_argument(
            "--real", action="store_true", help="score the held-out real notes instead"
        )
        parser.add_argument("--classifier", type=Path, required=True, help="classifier stem")
        parser.add_argument("--data", type=Path, required=True, help="corpus directory")
        parser.add_argument("--ndb-k", type=int, default=NDB_CLUSTERS, help="NDB cell count")
        parser.add_argument("--label", default=None, help="row label in the report")

    def handle(self, options):
        classifier = PitchClassifier.load(options.classifier)
        model = None if options.real else GanModel.load(resolve_checkpoint(options.checkpoint))
        representation = model.representation if model else classifier.representation
        corpus = encode_corpus(
            options.data, representation, workers=get_settings().NUM_WORKERS
        )
        if not corpus.test_pitches:
            raise ConfigurationError("corpus has no held-out notes", component="metrics")
        # generated notes follow the held-out pitch distribution
        pitches = corpus.test_pitches
        if options.real:
            images = corpus.test_images
            label = options.label or "real"
        else:
            images = generate_evaluation_set(model, pitches, options.seed)
            label = options.label or options.checkpoint.name

        result = evaluate_images(
            images,
            pitches,
            corpus.train_images,
            classifier,
            k=options.ndb_k,
            seed=options.seed,
            label=label,
            representation=(
                f"{representation.channel1_mode}-{representation.freq_scale}"
                f"-{representation.frame_size}"
            ),
        )
        result.write(self.output_dir(options))
        self.write(result.report.to_table())
