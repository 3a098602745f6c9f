"""Thread-local context management for run tracking."""

import threading

# Thread-local storage for run context
_run_context = threading.local()


def set_run_id(run_id: str) -> None:
    """Store the run ID in thread-local storage.

    Args:
        run_id: The unique identifier of the current command invocation.
    """
    _run_context.run_id = run_id


def get_run_id() -> str | None:
    """Retrieve the run ID from thread-local storage.

    Returns:
        The current run ID, or None if not set.
    """
    return getattr(_run_context, "run_id", None)


def clear_run_id() -> None:
    """Clear the run ID from thread-local storage.

    Called when a command finishes so worker threads reused by a later
    invocation do not inherit a stale identifier.
    """
    if hasattr(_run_context, "run_id"):
        delattr(_run_context, "run_id")
