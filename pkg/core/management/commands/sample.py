"""Generate notes from a trained GAN."""

from pathlib import Path

from core.management.base import BaseCommand, parse_pitches, resolve_checkpoint
from core.models import SpectralImage
from core.services.dataset import write_wav
from core.services.gan import GanModel, generate_batch, sample_latent
from core.services.spectral import decode, save_rainbowgram


class Command(BaseCommand):
    help = "Generate WAVs and rainbowgrams for pitches from a GAN checkpoint"

    def add_arguments(self, parser):
        parser.add_argument(
            "--checkpoint", type=Path, required=True, help="checkpoint stem or run directory"
        )
        parser.add_argument("--pitch", type=parse_pitches, required=True, help="pitches to render")
        parser.add_argument("--n", type=int, default=1, help="notes per pitch")
        parser.add_argument("--no-png", action="store_true", help="skip rainbowgram images")

    def handle(self, options):
        model = GanModel.load(resolve_checkpoint(options.checkpoint))
        pitches = [p for p in options.pitch for _ in range(options.n)]
        latents = sample_latent(len(pitches), model.config, options.seed)
        out = self.output_dir(options)
        for i, (pitch, data) in enumerate(
            zip(pitches, generate_batch(model, latents, pitches), strict=True)
        ):
            image = SpectralImage(data, model.representation)
            stem = f"pitch{pitch:02d}_{i % options.n:03d}"
            write_wav(out / f"{stem}.wav", decode(image))
            if not options.no_png:
                save_rainbowgram(image, out / f"{stem}.png")
        self.write(f"wrote {len(pitches)} notes to {out}")
