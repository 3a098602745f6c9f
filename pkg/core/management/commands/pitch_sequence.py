"""Render a melody with one timbre or a slowly drifting one."""

from pathlib import Path

from core.constants.audio import NOTE_SECONDS_DEFAULT
from core.management.base import BaseCommand, parse_pitches, resolve_checkpoint
from core.services.dataset import write_wav
from core.services.gan import GanModel, pitch_sequence

OUTPUT_WAV = "sequence.wav"


class Command(BaseCommand):
    help = "Generate a note sequence and concatenate it into one WAV"

    def add_arguments(self, parser):
        parser.add_argument(
            "--checkpoint", type=Path, required=True, help="checkpoint stem or run directory"
        )
        parser.add_argument(
            "--pitches", type=parse_pitches, required=True, help="melody as MIDI pitches"
        )
        group = parser.add_mutually_exclusive_group()
        group.add_argument(
            "--fixed-latent", action="store_true", help="one latent for every note (default)"
        )
        group.add_argument(
            "--anchors", type=int, default=None, help="interpolate through this many latents"
        )
        parser.add_argument("--note-seconds", type=float, default=NOTE_SECONDS_DEFAULT)

    def handle(self, options):
        model = GanModel.load(resolve_checkpoint(options.checkpoint))
        waveform, _ = pitch_sequence(
            model,
            options.pitches,
            seed=options.seed,
            anchors=None if options.fixed_latent else options.anchors,
            note_seconds=options.note_seconds,
        )
        path = write_wav(self.output_dir(options) / OUTPUT_WAV, waveform)
        self.write(f"wrote {len(options.pitches)} notes ({waveform.duration:.2f} s) to {path}")
