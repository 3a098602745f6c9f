"""Encode and decode WAV files, optionally reporting reconstruction SNR."""

from pathlib import Path

from core.management.base import BaseCommand
from core.services.dataset import read_wav, write_wav
from core.services.spectral import decode, encode, ensure_fitted, snr_db


class Command(BaseCommand):
    help = "Run WAV files through encode and decode"

    def add_arguments(self, parser):
        parser.add_argument("inputs", nargs="+", type=Path, help="WAV files")
        parser.add_argument(
            "--report-snr", action="store_true", help="print the SNR of each reconstruction"
        )
        parser.add_argument(
            "--write", action="store_true", help="also write reconstructed WAVs to --out"
        )

    def handle(self, options):
        representation = self.representation(options)
        waveforms = [
            read_wav(path).fit_length(representation.num_samples) for path in options.inputs
        ]
        representation = ensure_fitted(representation, waveforms)
        for path, waveform in zip(options.inputs, waveforms, strict=True):
            reconstruction = decode(encode(waveform, representation))
            if options.write:
                write_wav(self.output_dir(options) / f"{path.stem}_roundtrip.wav", reconstruction)
            if options.report_snr:
                self.write(f"{path}: SNR {snr_db(waveform, reconstruction):.2f} dB")
            elif not options.write:
                self.write(f"{path}: ok")
