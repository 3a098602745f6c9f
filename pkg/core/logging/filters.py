"""Logging filters for enriching log records with run context."""

import logging

from core.logging.context import get_run_id


class RunIDFilter(logging.Filter):
    """Add run ID to log records.

    This filter injects the current run ID from thread-local storage
    into every log record, so stdlib loggers used by third-party libraries
    can be correlated with the command that triggered them.

    If no run ID is set, it uses 'N/A' as a placeholder.
    """

    def filter(self, record: logging.LogRecord) -> bool:
        """Add run_id attribute to the log record.

        Args:
            record: The log record to enrich.

        Returns:
            True to indicate the record should be logged.
        """
        record.run_id = get_run_id() or "N/A"
        return True
