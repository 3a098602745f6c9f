"""Bounded-queue batch prefetcher feeding the training loop.

Batches are built on a worker thread while the loop trains on the previous
one. The batch for a step depends only on the step index, so prefetching
and resuming never change which examples a step sees.
"""

import queue
import threading
from collections.abc import Callable, Iterator
from typing import Generic, TypeVar

import structlog

logger = structlog.get_logger(__name__)

T = TypeVar("T")

_DONE = object()


class BatchPrefetcher(Generic[T]):
    """Iterate ``make_batch(step)`` for ``step`` in [start, stop) in order.

    Args:
        make_batch: Builds the batch of one step.
        start: First step index.
        stop: One past the last step index.
        depth: Maximum batches buffered ahead of the consumer.
    """

    def __init__(self, make_batch: Callable[[int], T], start: int, stop: int, depth: int = 4):
        self._make_batch = make_batch
        self._start = start
        self._stop = stop
        self._queue: queue.Queue = queue.Queue(maxsize=max(1, depth))
        self._closed = threading.Event()
        self._thread = threading.Thread(target=self._fill, name="batch-prefetch", daemon=True)
        self._started = False

    def _put(self, item: object) -> bool:
        while not self._closed.is_set():
            try:
                self._queue.put(item, timeout=0.1)
                return True
            except queue.Full:
                continue
        return False

    def _fill(self) -> None:
        try:
            for step in range(self._start, self._stop):
                if not self._put((step, self._make_batch(step))):
                    return
        except Exception as exc:  # noqa: BLE001
            logger.error("batch_prefetch_failed", error=str(exc))
            self._put(exc)
            return
        self._put(_DONE)

    def __iter__(self) -> Iterator[tuple[int, T]]:
        if not self._started:
            self._started = True
            self._thread.start()
        while True:
            item = self._queue.get()
            if item is _DONE:
                return
            if isinstance(item, Exception):
                raise item
            yield item

    def close(self) -> None:
        """Stop the worker; buffered batches are dropped."""
        self._closed.set()
        if self._started:
            self._thread.join(timeout=5.0)

    def __enter__(self) -> "BatchPrefetcher[T]":
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()
