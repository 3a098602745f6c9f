"""Timbre interpolation between two latents at a fixed pitch."""

from pathlib import Path

from core.management.base import BaseCommand, resolve_checkpoint
from core.services.dataset import write_wav
from core.services.gan import GanModel, interpolate, sample_latent
from core.services.spectral import decode, save_rainbowgram


class Command(BaseCommand):
    help = "Render notes along the spherical path between two random latents"

    def add_arguments(self, parser):
        parser.add_argument(
            "--checkpoint", type=Path, required=True, help="checkpoint stem or run directory"
        )
        parser.add_argument("--pitch", type=int, default=60, help="MIDI pitch")
        parser.add_argument("--steps", type=int, default=8, help="notes including endpoints")

    def handle(self, options):
        model = GanModel.load(resolve_checkpoint(options.checkpoint))
        z1, z2 = sample_latent(2, model.config, options.seed)
        out = self.output_dir(options)
        images = interpolate(model, z1, z2, options.steps, options.pitch)
        for i, image in enumerate(images):
            stem = f"interp_{i:02d}"
            write_wav(out / f"{stem}.wav", decode(image))
            save_rainbowgram(image, out / f"{stem}.png")
        self.write(f"wrote {len(images)} interpolation steps at pitch {options.pitch} to {out}")
