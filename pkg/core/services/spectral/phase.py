"""Phase unwrapping and instantaneous frequency along the time axis (axis 0)."""

import numpy as np

from core.exceptions import ShapeMismatchError


def wrap_phase(angles: np.ndarray) -> np.ndarray:
    """Map angles into (-pi, pi]."""
    return np.pi - np.mod(np.pi - angles, 2.0 * np.pi)


def unwrap_phase(phase: np.ndarray) -> np.ndarray:
    """Add multiples of 2 pi so successive frame differences lie in (-pi, pi].

    The first frame is left unchanged.

    Args:
        phase: (frames, bins) wrapped phase in radians.

    Returns:
        Unwrapped phase of the same shape.
    """
    phase = np.asarray(phase, dtype=np.float64)
    if phase.shape[0] < 2:
        return phase.copy()
    delta = np.diff(phase, axis=0)
    correction = np.cumsum(wrap_phase(delta) - delta, axis=0)
    out = phase.copy()
    out[1:] += correction
    return out


def phase_to_if(phase: np.ndarray) -> np.ndarray:
    """Instantaneous frequency in [-1, 1] from wrapped phase.

    ``IF[t] = wrap(phase[t] - phase[t-1]) / pi`` for ``t >= 1`` and
    ``IF[0] = phase[0] / pi``, which keeps the initial phase so the map is
    exactly invertible.

    Args:
        phase: (frames, bins) wrapped phase in radians.

    Returns:
        IF of the same shape.

    Raises:
        ShapeMismatchError: If there are fewer than two frames.
    """
    phase = np.asarray(phase, dtype=np.float64)
    if phase.ndim < 1 or phase.shape[0] < 2:
        raise ShapeMismatchError("phase_to_if", phase.shape, component="spectral")
    out = np.empty_like(phase)
    out[0] = phase[0] / np.pi
    out[1:] = wrap_phase(np.diff(phase, axis=0)) / np.pi
    return out


def if_to_phase(inst_freq: np.ndarray) -> np.ndarray:
    """Integrate IF back to wrapped phase; inverse of ``phase_to_if``."""
    inst_freq = np.asarray(inst_freq, dtype=np.float64)
    return wrap_phase(np.cumsum(inst_freq * np.pi, axis=0))
