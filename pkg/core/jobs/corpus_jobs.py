"""Background jobs for rendering the synthetic corpus.

Each note is rendered and written by one job; jobs share no mutable state,
so they run concurrently on a thread pool. The manifest is written by the
caller once every job has finished.
"""

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import structlog

from core.exceptions import DatasetError
from core.schemas.dataset import NoteRecord, TimbreParams
from core.services.dataset.synthesis import synth_note
from core.services.dataset.wav_io import write_wav

logger = structlog.get_logger(__name__)


def render_note_job(
    record: NoteRecord,
    timbre: TimbreParams,
    root: Path,
    sample_rate: int,
    num_samples: int,
) -> Path:
    """Render one note and write it to ``root / record.waveform_path``.

    Args:
        record: Note to render.
        timbre: Timbre identified by ``record.timbre_seed``.
        root: Corpus directory (manifest location).
        sample_rate: Output rate in Hz.
        num_samples: Note length in samples.

    Returns:
        Path of the written WAV.
    """
    waveform = synth_note(
        record.pitch,
        timbre,
        seed=record.note_seed,
        sample_rate=sample_rate,
        num_samples=num_samples,
    )
    path = write_wav(root / record.waveform_path, waveform)
    logger.debug("note_rendered", record_id=record.id, path=str(path))
    return path


def render_corpus(
    records: Sequence[NoteRecord],
    timbres: dict[int, TimbreParams],
    root: Path,
    sample_rate: int,
    num_samples: int,
    workers: int = 1,
) -> list[Path]:
    """Render every record, in parallel when ``workers`` > 1.

    Args:
        records: Notes to render.
        timbres: Timbres keyed by timbre seed.
        root: Corpus directory.
        sample_rate: Output rate in Hz.
        num_samples: Note length in samples.
        workers: Thread count.

    Returns:
        Written paths in record order.

    Raises:
        DatasetError: If any note fails to render; the first failure wins.
    """
    def job(record: NoteRecord) -> Path:
        return render_note_job(
            record, timbres[record.timbre_seed], root, sample_rate, num_samples
        )

    logger.info("corpus_render_started", notes=len(records), workers=workers)
    if workers <= 1:
        paths = [job(r) for r in records]
    else:
        with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="render") as pool:
            try:
                paths = list(pool.map(job, records))
            except DatasetError:
                logger.error("corpus_render_failed", root=str(root))
                raise
    logger.info("corpus_render_finished", notes=len(paths), root=str(root))
    return paths
