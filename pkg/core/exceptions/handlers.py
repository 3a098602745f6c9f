"""Global exception handler for command-line invocations."""

import logging
import sys
import traceback
from typing import Any

from pydantic import ValidationError

from core.config import get_settings
from core.exceptions.synthesis_exceptions import SynthesisError

logger = logging.getLogger(__name__)

EXIT_FAILURE = 1
EXIT_USAGE = 2


def handle_command_exception(exc: Exception, context: dict[str, Any]) -> int:
    """Convert an exception raised by a command into an exit code.

    Handles pipeline errors and common library errors, providing:
    - A one-line message on stderr for the user: ``error: <message>``
    - Detailed logging for troubleshooting: error type, command, stack trace

    Args:
        exc: The exception that was raised.
        context: Context dictionary with the command name and its options.

    Returns:
        The process exit code to report.
    """
    if isinstance(exc, SynthesisError):
        exit_code = exc.exit_code
        message = str(exc)
    elif isinstance(exc, FileNotFoundError):
        exit_code = EXIT_USAGE
        message = f"file not found: {exc.filename or exc}"
    elif isinstance(exc, ValidationError):
        exit_code = EXIT_USAGE
        message = f"invalid configuration: {_summarize_validation_error(exc)}"
    elif isinstance(exc, (ValueError, OSError)):
        exit_code = EXIT_FAILURE
        message = str(exc)
    else:
        exit_code = EXIT_FAILURE
        message = "An internal error occurred."

    print(f"error: {message}", file=sys.stderr)
    _log_exception(exc, context, exit_code)
    return exit_code


def _summarize_validation_error(exc: ValidationError) -> str:
    """Flatten a pydantic validation error into one line.

    Args:
        exc: The pydantic validation error.

    Returns:
        Semicolon-separated ``field: message`` pairs.
    """
    parts = []
    for error in exc.errors():
        location = ".".join(str(p) for p in error.get("loc", ()))
        parts.append(f"{location}: {error.get('msg', 'invalid')}")
    return "; ".join(parts)


def _log_exception(exc: Exception, context: dict[str, Any], exit_code: int) -> None:
    """Log detailed exception information for troubleshooting.

    In DEBUG mode, logs include stack traces.

    Args:
        exc: The exception that was raised.
        context: Context dictionary with the command name and options.
        exit_code: Exit code that will be reported.
    """
    # Usage errors are the caller's fault; everything else is ours
    log_level = logging.WARNING if exit_code == EXIT_USAGE else logging.ERROR

    error_type = type(exc).__name__
    command = context.get("command", "unknown")
    component = getattr(exc, "component", None) or "unknown"

    log_message = (
        f"Command failed: {error_type}: {exc} | "
        f"Command: {command} | Component: {component} | "
        f"Exit code: {exit_code}"
    )

    if get_settings().DEBUG:
        stack_trace = "".join(
            traceback.format_exception(type(exc), exc, exc.__traceback__)
        )
        log_message += f"\nStack trace:\n{stack_trace}"
        options = context.get("options")
        if options:
            log_message += f"\nCommand options: {options}"

    logger.log(log_level, log_message)
