"""Render rainbowgram PNGs for WAVs or spectral images."""

from pathlib import Path

from core.management.base import BaseCommand
from core.models import SpectralImage
from core.services.dataset import read_wav
from core.services.spectral import encode, ensure_fitted, save_rainbowgram
from core.services.spectral.rainbowgram import DEFAULT_DB_RANGE

IMAGE_SUFFIXES = (".f32", ".json")


class Command(BaseCommand):
    help = "Draw rainbowgrams: brightness is log magnitude, hue is instantaneous frequency"

    def add_arguments(self, parser):
        parser.add_argument("inputs", nargs="+", type=Path, help="WAV or .f32 image files")
        parser.add_argument("--db-range", type=float, default=DEFAULT_DB_RANGE)

    def handle(self, options):
        out = self.output_dir(options)
        wavs = [p for p in options.inputs if p.suffix not in IMAGE_SUFFIXES]
        representation = None
        if wavs:
            base = self.representation(options)
            waveforms = [read_wav(p).fit_length(base.num_samples) for p in wavs]
            representation = ensure_fitted(base, waveforms)
            encoded = dict(zip(wavs, waveforms, strict=True))
        for path in options.inputs:
            if path.suffix in IMAGE_SUFFIXES:
                image = SpectralImage.load(path).validate()
            else:
                image = encode(encoded[path], representation)
            target = save_rainbowgram(
                image, out / f"{path.with_suffix('').name}.png", db_range=options.db_range
            )
            self.write(f"{path} -> {target}")
