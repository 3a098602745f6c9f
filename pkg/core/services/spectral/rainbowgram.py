"""Rainbowgram rendering: IF as hue, log magnitude as brightness."""

from pathlib import Path

import numpy as np
import structlog
from matplotlib.colors import hsv_to_rgb
from PIL import Image

from core.enums import ChannelMode
from core.models import SpectralImage
from core.services.spectral.codec import denormalize
from core.services.spectral.phase import phase_to_if

logger = structlog.get_logger(__name__)

DEFAULT_DB_RANGE = 80.0


def rainbowgram_rgb(image: SpectralImage, db_range: float = DEFAULT_DB_RANGE) -> np.ndarray:
    """(bins, frames, 3) uint8 RGB array with low frequencies at the bottom.

    Phase images are converted to IF first, so both modes render the same way.

    Args:
        image: Normalized spectral image with fitted stats.
        db_range: Dynamic range mapped onto brightness, below the peak.

    Returns:
        RGB pixels.
    """
    if image.config.norm is not None:
        raw = denormalize(image.data, image.config.norm)
        log_magnitude = raw[..., 0]
        channel1 = raw[..., 1]
    else:
        log_magnitude = image.data[..., 0].astype(np.float64)
        channel1 = image.data[..., 1].astype(np.float64)

    if image.config.channel1_mode == ChannelMode.PHASE:
        inst_freq = phase_to_if(channel1 * np.pi)
    else:
        inst_freq = channel1

    decibels = 20.0 * log_magnitude / np.log(10.0)
    # the floor stays black even when nothing rises above it
    floor_db = 20.0 * np.log10(image.config.log_mag_floor)
    top = max(float(decibels.max()), floor_db + db_range)
    value = np.clip((decibels - top + db_range) / db_range, 0.0, 1.0)
    hue = np.mod((np.clip(inst_freq, -1.0, 1.0) + 1.0) / 2.0, 1.0)
    hsv = np.stack([hue, np.ones_like(hue), value], axis=-1)
    rgb = hsv_to_rgb(hsv)
    # time runs left to right, frequency bottom to top
    rgb = np.flipud(np.transpose(rgb, (1, 0, 2)))
    return (rgb * 255.0).round().astype(np.uint8)


def save_rainbowgram(
    image: SpectralImage,
    path: str | Path,
    db_range: float = DEFAULT_DB_RANGE,
    time_stretch: int = 1,
) -> Path:
    """Write a rainbowgram PNG.

    Args:
        image: Spectral image to render.
        path: Output PNG path.
        db_range: Dynamic range of the brightness channel.
        time_stretch: Horizontal pixel repeat for short images.

    Returns:
        The written path.
    """
    rgb = rainbowgram_rgb(image, db_range)
    if time_stretch > 1:
        rgb = np.repeat(rgb, time_stretch, axis=1)
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    Image.fromarray(rgb).save(target)
    logger.info("Saved rainbowgram", path=str(target), size=rgb.shape[:2])
    return target
