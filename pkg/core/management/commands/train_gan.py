"""Train the progressive pitch-conditional GAN."""

from pathlib import Path

from core.config import get_settings
from core.jobs.encode_jobs import encode_corpus
from core.management.base import BaseCommand
from core.schemas.gan import GanConfig
from core.schemas.spectral import RepresentationConfig
from core.services.gan import GanModel, GanTrainer, gan_config_for

REPRESENTATION_FILE = "representation.json"


class Command(BaseCommand):
    help = "Train the GAN on a corpus, writing checkpoints and a loss CSV"

    def add_arguments(self, parser):
        parser.add_argument("--data", type=Path, required=True, help="corpus directory")
        parser.add_argument("--gan-config", type=Path, default=None, help="GanConfig JSON")
        parser.add_argument(
            "--no-progressive",
            action="store_true",
            help="train the final resolution from the start",
        )
        parser.add_argument("--learning-rate", type=float, default=None)
        parser.add_argument("--acgan-weight", type=float, default=None)
        parser.add_argument("--batch-size", type=int, default=None)
        parser.add_argument(
            "--max-steps", type=int, default=None, help="stop after this many steps"
        )
        parser.add_argument(
            "--resume", action="store_true", help="continue from the latest checkpoint in --out"
        )

    def gan_config(self, options, representation: RepresentationConfig) -> GanConfig:
        overrides = {"seed": options.seed}
        if options.no_progressive:
            overrides["progressive"] = False
        for field in ("learning_rate", "acgan_weight", "batch_size"):
            value = getattr(options, field)
            if value is not None:
                overrides[field] = value
        if options.gan_config:
            base = GanConfig.read_json(options.gan_config)
            return GanConfig.model_validate(base.model_dump() | overrides)
        return gan_config_for(representation, **overrides)

    def handle(self, options):
        out = self.output_dir(options)
        workers = get_settings().NUM_WORKERS
        if options.resume:
            # the stats the run was started with, not a refit
            representation = RepresentationConfig.read_json(out / REPRESENTATION_FILE)
            corpus = encode_corpus(options.data, representation, workers=workers)
            trainer = GanTrainer.resume(out, corpus.train_images, corpus.train_pitches)
        else:
            corpus = encode_corpus(options.data, self.representation(options), workers=workers)
            corpus.representation.write_json(out / REPRESENTATION_FILE)
            model = GanModel(self.gan_config(options, corpus.representation), corpus.representation)
            trainer = GanTrainer(model, corpus.train_images, corpus.train_pitches, out)

        reports = trainer.run(max_steps=options.max_steps)
        model = trainer.model
        self.write(
            f"ran {len(reports)} steps; step {model.step}, stage {model.stage}, "
            f"alpha {model.alpha:.3f}, examples {model.examples_seen}"
        )
