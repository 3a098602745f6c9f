"""Thread-local autodiff modes: gradient recording and working precision.

Each thread has its own flags, so independent graphs can be built and
differentiated concurrently on separate threads.
"""

import threading
from collections.abc import Iterator
from contextlib import contextmanager

import numpy as np

_state = threading.local()


def is_grad_enabled() -> bool:
    """Whether new ops record their inputs for backpropagation."""
    return getattr(_state, "grad_enabled", True)


def default_dtype() -> np.dtype:
    """Floating dtype used when tensors are created from Python data."""
    return getattr(_state, "dtype", np.dtype(np.float32))


@contextmanager
def set_grad_enabled(enabled: bool) -> Iterator[None]:
    """Enable or disable graph recording inside the block.

    Args:
        enabled: Whether ops inside the block record the graph.
    """
    previous = is_grad_enabled()
    _state.grad_enabled = enabled
    try:
        yield
    finally:
        _state.grad_enabled = previous


@contextmanager
def no_grad() -> Iterator[None]:
    """Disable graph recording inside the block (inference, optimizer updates)."""
    with set_grad_enabled(False):
        yield


@contextmanager
def precision(dtype: str | np.dtype) -> Iterator[None]:
    """Create new tensors with the given dtype inside the block.

    float64 is the gradient-verification mode; training runs in float32.

    Args:
        dtype: ``"float32"`` or ``"float64"``.
    """
    resolved = np.dtype(dtype)
    if resolved not in (np.dtype(np.float32), np.dtype(np.float64)):
        raise ValueError(f"unsupported tensor precision: {resolved}")
    previous = default_dtype()
    _state.dtype = resolved
    try:
        yield
    finally:
        _state.dtype = previous
