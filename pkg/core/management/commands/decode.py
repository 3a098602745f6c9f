"""Decode spectral images back into WAV files."""

from pathlib import Path

from core.management.base import BaseCommand
from core.models import SpectralImage
from core.services.dataset import write_wav
from core.services.spectral import decode


class Command(BaseCommand):
    help = "Decode spectral images (.f32 with JSON sidecar) into 16-bit WAV files"

    def add_arguments(self, parser):
        parser.add_argument("inputs", nargs="+", type=Path, help="spectral image files")

    def handle(self, options):
        out = self.output_dir(options)
        for path in options.inputs:
            image = SpectralImage.load(path).validate()
            written = write_wav(out / f"{path.with_suffix('').name}.wav", decode(image))
            self.write(f"{path} -> {written}")
