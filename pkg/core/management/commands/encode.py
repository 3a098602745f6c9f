"""Encode WAV files into spectral images."""

from pathlib import Path

from core.management.base import BaseCommand
from core.services.dataset import read_wav
from core.services.spectral import encode, ensure_fitted

REPRESENTATION_FILE = "representation.json"


class Command(BaseCommand):
    help = "Encode WAV files into normalized (frames, bins, 2) spectral images"

    def add_arguments(self, parser):
        parser.add_argument("inputs", nargs="+", type=Path, help="WAV files")

    def handle(self, options):
        waveforms = [read_wav(path) for path in options.inputs]
        representation = ensure_fitted(self.representation(options), waveforms)
        out = self.output_dir(options)
        representation.write_json(out / REPRESENTATION_FILE)
        for path, waveform in zip(options.inputs, waveforms, strict=True):
            image = encode(waveform.fit_length(representation.num_samples), representation)
            written = image.save(out / path.stem)
            self.write(f"{path} -> {written} {image.data.shape}")
