"""Corpus generation, manifest I/O and train/test splitting."""

from collections.abc import Sequence
from pathlib import Path

import numpy as np
import structlog

from core.constants.audio import CANONICAL_NUM_SAMPLES, MIDI_HIGH, MIDI_LOW, SAMPLE_RATE
from core.exceptions import DatasetError
from core.models import Waveform
from core.schemas.dataset import DatasetManifest, NoteRecord, TimbreParams
from core.services.dataset.pitch import check_pitch
from core.services.dataset.synthesis import random_timbre
from core.services.dataset.wav_io import read_wav

logger = structlog.get_logger(__name__)

MANIFEST_NAME = "manifest.json"
TRAIN_FRACTION = 0.8
_TIMBRE_STREAM = 1
_NOTE_STREAM = 2


def derive_seed(*entropy: int) -> int:
    """Stable 32-bit seed from a tuple of integers."""
    return int(np.random.SeedSequence(list(entropy)).generate_state(1)[0])


def split_ids(ids: Sequence[str], seed: int) -> tuple[list[str], list[str]]:
    """Shuffle ids with ``seed`` and cut them 80/20.

    Returns:
        (train ids, test ids), each in shuffled order.
    """
    order = np.random.default_rng(seed).permutation(len(ids))
    n_train = round(TRAIN_FRACTION * len(ids))
    shuffled = [ids[i] for i in order]
    return shuffled[:n_train], shuffled[n_train:]


def plan_dataset(
    n_per_pitch: int,
    pitches: Sequence[int],
    n_timbres: int,
    seed: int,
) -> tuple[list[NoteRecord], dict[int, TimbreParams]]:
    """Records and timbres of a corpus, without rendering audio.

    Notes of one pitch cycle through the timbres, so every timbre is heard
    at every pitch once ``n_per_pitch >= n_timbres``.
    """
    if n_per_pitch < 1 or n_timbres < 1:
        raise DatasetError("n_per_pitch and n_timbres must be positive")
    pitches = [check_pitch(p) for p in pitches]
    if len(set(pitches)) != len(pitches):
        raise DatasetError("pitch list contains duplicates")

    timbre_seeds = [derive_seed(seed, _TIMBRE_STREAM, t) for t in range(n_timbres)]
    timbres = {s: random_timbre(s) for s in timbre_seeds}
    records = []
    for pitch in pitches:
        for i in range(n_per_pitch):
            t = i % n_timbres
            record_id = f"p{pitch:03d}_t{t:02d}_{i:03d}"
            records.append(
                NoteRecord(
                    id=record_id,
                    pitch=pitch,
                    waveform_path=f"wav/{record_id}.wav",
                    timbre_seed=timbre_seeds[t],
                    note_seed=derive_seed(seed, _NOTE_STREAM, pitch, i),
                )
            )
    return records, timbres


def make_dataset(
    out_dir: str | Path,
    n_per_pitch: int,
    pitches: Sequence[int] = tuple(range(MIDI_LOW, MIDI_HIGH + 1)),
    n_timbres: int = 4,
    seed: int = 0,
    sample_rate: int = SAMPLE_RATE,
    num_samples: int = CANONICAL_NUM_SAMPLES,
    workers: int = 1,
) -> DatasetManifest:
    """Render a synthetic corpus and write its manifest.

    Args:
        out_dir: Corpus directory; WAVs go to ``wav/`` below it.
        n_per_pitch: Notes rendered per pitch.
        pitches: MIDI pitches, each in [24, 84].
        n_timbres: Number of distinct random timbres.
        seed: Seed for timbres, note phases and the split.
        sample_rate: Output rate in Hz.
        num_samples: Note length in samples.
        workers: Rendering threads.

    Returns:
        The written manifest.

    Raises:
        PitchOutOfRangeError: If a pitch is outside [24, 84].
        DatasetError: If the directory or a file cannot be written.
    """
    # jobs import this package; resolve lazily
    from core.jobs.corpus_jobs import render_corpus  # noqa: PLC0415

    root = Path(out_dir)
    try:
        root.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise DatasetError(f"cannot create corpus directory: {exc}", path=str(root)) from exc

    records, timbres = plan_dataset(n_per_pitch, pitches, n_timbres, seed)
    render_corpus(records, timbres, root, sample_rate, num_samples, workers=workers)

    train_ids, test_ids = split_ids([r.id for r in records], seed)
    manifest = DatasetManifest(
        sample_rate=sample_rate,
        num_samples=num_samples,
        records=records,
        split_seed=seed,
        train_ids=train_ids,
        test_ids=test_ids,
    )
    try:
        manifest.write_json(root / MANIFEST_NAME)
    except OSError as exc:
        raise DatasetError(f"cannot write manifest: {exc}", path=str(root)) from exc
    logger.info(
        "Dataset written",
        root=str(root),
        records=len(records),
        train=len(train_ids),
        test=len(test_ids),
    )
    return manifest


def manifest_path(path: str | Path) -> Path:
    """Accept a corpus directory or a manifest file."""
    path = Path(path)
    return path / MANIFEST_NAME if path.is_dir() else path


def load_manifest(path: str | Path) -> DatasetManifest:
    """Read and validate a manifest from a file or corpus directory."""
    return DatasetManifest.read_json(manifest_path(path))


def load_waveforms(
    manifest: DatasetManifest, root: str | Path, records: Sequence[NoteRecord]
) -> list[Waveform]:
    """Read the WAVs of ``records``, resolving paths against ``root``."""
    root = Path(root)
    waveforms = []
    for record in records:
        waveform = read_wav(root / record.waveform_path)
        if waveform.sample_rate != manifest.sample_rate:
            raise DatasetError(
                f"sample rate {waveform.sample_rate} differs from manifest "
                f"{manifest.sample_rate}",
                path=str(root / record.waveform_path),
            )
        waveforms.append(waveform.fit_length(manifest.num_samples))
    return waveforms
