"""Time generation and decoding of a GAN checkpoint."""

from pathlib import Path

from core.management.base import BaseCommand, parse_int_list, resolve_checkpoint
from core.services.gan import GanModel, measure_latency, per_sample_speedup
from core.services.gan.bench import DEFAULT_BATCH_SIZES

REPORT_FILE = "bench.json"


class Command(BaseCommand):
    help = "Measure per-sample generation latency at several batch sizes"

    def add_arguments(self, parser):
        parser.add_argument(
            "--checkpoint", type=Path, required=True, help="checkpoint stem or run directory"
        )
        parser.add_argument(
            "--batch-sizes",
            type=parse_int_list,
            default=list(DEFAULT_BATCH_SIZES),
            help="comma-separated batch sizes",
        )
        parser.add_argument("--repeats", type=int, default=3)

    def handle(self, options):
        model = GanModel.load(resolve_checkpoint(options.checkpoint))
        report = measure_latency(
            model, options.batch_sizes, repeats=options.repeats, seed=options.seed
        )
        report.write_json(self.output_dir(options) / REPORT_FILE)
        self.write(report.to_text())
        if len(options.batch_sizes) > 1:
            self.write(f"batching speedup per sample: {per_sample_speedup(report):.2f}x")
