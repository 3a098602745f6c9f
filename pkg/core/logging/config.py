"""structlog setup: JSON lines to a rotating file, colored lines on stderr.

Commands call ``configure_logging()`` once their arguments have parsed, so a
rejected command line leaves no log directory behind.
"""

import logging
import logging.handlers
from pathlib import Path

import structlog
from colorama import just_fix_windows_console

from core.config import get_settings
from core.logging.filters import RunIDFilter
from core.logging.processors import ToolkitMetadata, add_run_context, console_renderer

MAX_LOG_BYTES = 100 * 1024 * 1024
LOG_BACKUPS = 20

# Loggers of numeric/plotting libraries that flood DEBUG output
QUIET_LIBRARIES = ("numba", "matplotlib", "PIL")

_configured = False


def setup_logging(
    log_file: str | Path,
    level: str = "INFO",
    service_name: str = "specgan",
    environment: str = "development",
) -> None:
    """Route structlog and stdlib records to the file and console handlers.

    Args:
        log_file: Rotating JSON log path; its directory is created.
        level: Level name for both handlers.
        service_name: Stamped on every JSON line.
        environment: Stamped on every JSON line.
    """
    global _configured  # noqa: PLW0603
    numeric_level = getattr(logging, level.upper(), logging.INFO)
    log_file = Path(log_file)
    log_file.parent.mkdir(parents=True, exist_ok=True)
    just_fix_windows_console()

    metadata = ToolkitMetadata(service_name, environment)
    timestamper = structlog.processors.TimeStamper(fmt="iso", utc=True)
    # records from libraries that log through stdlib
    foreign_chain = [
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        timestamper,
        add_run_context,
    ]

    file_handler = logging.handlers.RotatingFileHandler(
        filename=log_file,
        maxBytes=MAX_LOG_BYTES,
        backupCount=LOG_BACKUPS,
        encoding="utf-8",
    )
    file_handler.setFormatter(
        structlog.stdlib.ProcessorFormatter(
            processor=structlog.processors.JSONRenderer(),
            foreign_pre_chain=[*foreign_chain, metadata],
        )
    )
    console_handler = logging.StreamHandler()
    console_handler.setFormatter(
        structlog.stdlib.ProcessorFormatter(
            processor=console_renderer, foreign_pre_chain=foreign_chain
        )
    )
    for handler in (file_handler, console_handler):
        handler.setLevel(numeric_level)
        handler.addFilter(RunIDFilter())

    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_log_level,
            structlog.stdlib.add_logger_name,
            timestamper,
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            add_run_context,
            metadata,
            structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )

    root = logging.getLogger()
    for handler in root.handlers[:]:
        root.removeHandler(handler)
        handler.close()
    root.addHandler(file_handler)
    root.addHandler(console_handler)
    root.setLevel(numeric_level)
    for name in QUIET_LIBRARIES:
        logging.getLogger(name).setLevel(max(numeric_level, logging.WARNING))
    _configured = True

    structlog.get_logger(__name__).debug(
        "Logging configured", log_file=str(log_file), log_level=level.upper()
    )


def configure_logging() -> None:
    """Set up logging from the active settings module, once per process."""
    if _configured:
        return
    settings = get_settings()
    setup_logging(
        settings.LOG_FILE_PATH,
        level=settings.LOG_LEVEL,
        service_name=settings.SERVICE_NAME,
        environment=settings.ENVIRONMENT,
    )
