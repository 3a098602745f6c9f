"""Tests for rainbowgram rendering."""

import numpy as np
from PIL import Image

from core.models import SpectralImage
from core.services.spectral import encode, rainbowgram_rgb, save_rainbowgram


class TestRainbowgram:
    """Test cases for ``rainbowgram_rgb`` and ``save_rainbowgram``."""

    def test_pixels_are_bins_by_frames_rgb(self, desk_notes, desk_representation):
        rgb = rainbowgram_rgb(encode(desk_notes[0], desk_representation))

        assert rgb.shape == (128, 16, 3)
        assert rgb.dtype == np.uint8

    def test_magnitude_floor_renders_black(self, desk_representation):
        config = desk_representation.model_copy(update={"norm": None})
        data = np.zeros(config.image_shape, dtype=np.float32)
        data[..., 0] = np.log(config.log_mag_floor)

        rgb = rainbowgram_rgb(SpectralImage(data, config))

        assert rgb.max() == 0

    def test_loudest_bin_is_at_full_brightness(self, desk_notes, desk_representation):
        rgb = rainbowgram_rgb(encode(desk_notes[2], desk_representation))

        assert rgb.max() == 255

    def test_unfitted_image_renders_raw_channels(self, desk_representation):
        config = desk_representation.model_copy(update={"norm": None})
        data = np.zeros(config.image_shape, dtype=np.float32)

        rgb = rainbowgram_rgb(SpectralImage(data, config))

        assert rgb.shape == (128, 16, 3)

    def test_png_is_written_with_time_stretch(self, tmp_path, desk_notes, desk_representation):
        image = encode(desk_notes[1], desk_representation)

        path = save_rainbowgram(image, tmp_path / "plots" / "note.png", time_stretch=4)

        with Image.open(path) as png:
            assert png.size == (64, 128)
            assert png.mode == "RGB"
