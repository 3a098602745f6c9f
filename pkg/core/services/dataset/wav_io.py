"""16-bit PCM mono WAV I/O with a symmetric 32767 scale."""

from pathlib import Path

import numpy as np
import soundfile as sf

from core.constants.audio import PCM16_SCALE, WAV_SUBTYPE
from core.exceptions import ArtifactNotFoundError, DatasetError
from core.models import Waveform


def write_wav(path: str | Path, waveform: Waveform) -> Path:
    """Quantize to int16 and write a mono WAV.

    Args:
        path: Output file; parent directories are created.
        waveform: Audio in [-1, 1]; out-of-range samples are clipped.

    Returns:
        The written path.

    Raises:
        DatasetError: If the file cannot be written.
    """
    target = Path(path)
    quantized = np.clip(np.rint(waveform.samples * PCM16_SCALE), -PCM16_SCALE, PCM16_SCALE)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        sf.write(target, quantized.astype(np.int16), waveform.sample_rate, subtype=WAV_SUBTYPE)
    except (OSError, sf.LibsndfileError) as exc:
        raise DatasetError(f"could not write WAV: {exc}", path=str(target)) from exc
    return target


def read_wav(path: str | Path) -> Waveform:
    """Read a WAV as float32 in [-1, 1]; multichannel files are mixed to mono.

    Raises:
        ArtifactNotFoundError: If the file does not exist.
        DatasetError: If the file cannot be decoded.
    """
    source = Path(path)
    if not source.is_file():
        raise ArtifactNotFoundError(str(source), kind="WAV file")
    try:
        data, sample_rate = sf.read(source, dtype="int16", always_2d=True)
    except (OSError, sf.LibsndfileError) as exc:
        raise DatasetError(f"could not read WAV: {exc}", path=str(source)) from exc
    samples = data.astype(np.float64).mean(axis=1) / PCM16_SCALE
    return Waveform(samples.astype(np.float32), int(sample_rate))
