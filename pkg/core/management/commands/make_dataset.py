"""Render the synthetic note corpus."""

from core.config import get_settings
from core.constants.audio import MIDI_HIGH, MIDI_LOW
from core.management.base import BaseCommand, parse_pitches
from core.services.dataset import make_dataset


class Command(BaseCommand):
    help = "Render a synthetic corpus of harmonic notes with a manifest and 80/20 split"

    def add_arguments(self, parser):
        parser.add_argument("--n-per-pitch", type=int, default=10, help="notes per pitch")
        parser.add_argument(
            "--pitches",
            type=parse_pitches,
            default=list(range(MIDI_LOW, MIDI_HIGH + 1)),
            help=f"pitches such as 60,64,67 or {MIDI_LOW}-{MIDI_HIGH}, or a file",
        )
        parser.add_argument("--timbres", type=int, default=4, help="distinct random timbres")

    def handle(self, options):
        representation = self.representation(options)
        out = self.output_dir(options)
        manifest = make_dataset(
            out,
            n_per_pitch=options.n_per_pitch,
            pitches=options.pitches,
            n_timbres=options.timbres,
            seed=options.seed,
            sample_rate=representation.sample_rate,
            num_samples=representation.num_samples,
            workers=get_settings().NUM_WORKERS,
        )
        self.write(
            f"wrote {len(manifest.records)} notes to {out} "
            f"({len(manifest.train_ids)} train, {len(manifest.test_ids)} test)"
        )
