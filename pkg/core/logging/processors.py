"""structlog processors: run id, toolkit metadata and the console renderer."""

import os
import threading

from colorama import Fore, Style
from structlog.typing import EventDict, WrappedLogger

from core.logging.context import get_run_id

LEVEL_COLORS = {
    "DEBUG": Fore.CYAN,
    "INFO": Fore.GREEN,
    "WARNING": Fore.YELLOW,
    "ERROR": Fore.RED,
    "CRITICAL": Fore.RED + Style.BRIGHT,
}

# Keys laid out in the console prefix or kept for the JSON file only
CONSOLE_HIDDEN_KEYS = frozenset(
    {
        "level",
        "timestamp",
        "run_id",
        "logger",
        "event",
        "process_id",
        "thread_id",
        "service_name",
        "environment",
    }
)


def add_run_context(
    _logger: WrappedLogger, _method_name: str, event_dict: EventDict
) -> EventDict:
    """Tag the event with the invocation's run id, when one is set."""
    run_id = get_run_id()
    if run_id:
        event_dict["run_id"] = run_id
    return event_dict


class ToolkitMetadata:
    """Processor stamping deployment and process metadata on JSON events.

    Worker threads (corpus rendering, batch prefetching) have no run id, so
    ``thread_id`` is what ties their lines to a command.
    """

    def __init__(self, service_name: str, environment: str):
        self.service_name = service_name
        self.environment = environment

    def __call__(
        self, _logger: WrappedLogger, _method_name: str, event_dict: EventDict
    ) -> EventDict:
        event_dict["service_name"] = self.service_name
        event_dict["environment"] = self.environment
        event_dict["process_id"] = os.getpid()
        event_dict["thread_id"] = threading.get_ident()
        return event_dict


def console_renderer(
    _logger: WrappedLogger, _method_name: str, event_dict: EventDict
) -> str:
    """``[LEVEL] timestamp | run_id | logger | message key=value ...`` in color."""
    level = str(event_dict.get("level", "info")).upper()
    color = LEVEL_COLORS.get(level, Fore.WHITE)
    line = (
        f"{color}[{level:<8}]{Style.RESET_ALL} "
        f"{Fore.WHITE}{event_dict.get('timestamp', '')}{Style.RESET_ALL} | "
        f"{Fore.MAGENTA}{event_dict.get('run_id', 'no-run-id')}{Style.RESET_ALL} | "
        f"{Fore.BLUE}{event_dict.get('logger', 'root')}{Style.RESET_ALL} | "
        f"{event_dict.get('event', '')}"
    )
    extras = " ".join(
        f"{key}={value}"
        for key, value in event_dict.items()
        if key not in CONSOLE_HIDDEN_KEYS
    )
    if extras:
        line += f" {Fore.YELLOW}{extras}{Style.RESET_ALL}"
    return line
