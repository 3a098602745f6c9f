"""Unit tests for run-id context, filters and processors."""

import logging
import tempfile
import threading
import unittest
from pathlib import Path

from core.config import get_settings
from core.logging import (
    RunIDFilter,
    clear_run_id,
    get_run_id,
    set_run_id,
    setup_logging,
)
from core.logging.processors import ToolkitMetadata, add_run_context, console_renderer


class TestRunIdContext(unittest.TestCase):
    """Test cases for the thread-local run id."""

    def tearDown(self):
        clear_run_id()

    def test_set_and_get(self):
        """Test that a stored run id is returned."""
        set_run_id("run-1")

        self.assertEqual(get_run_id(), "run-1")

    def test_clear_removes_run_id(self):
        """Test that clearing leaves no run id behind."""
        set_run_id("run-1")
        clear_run_id()

        self.assertIsNone(get_run_id())

    def test_clear_without_run_id_is_harmless(self):
        """Test that clearing twice does not raise."""
        clear_run_id()
        clear_run_id()

        self.assertIsNone(get_run_id())

    def test_run_id_is_per_thread(self):
        """Test that worker threads do not see the caller's run id."""
        set_run_id("main-run")
        seen = []
        worker = threading.Thread(target=lambda: seen.append(get_run_id()))
        worker.start()
        worker.join()

        self.assertEqual(seen, [None])
        self.assertEqual(get_run_id(), "main-run")


class TestRunIDFilter(unittest.TestCase):
    """Test cases for RunIDFilter."""

    def tearDown(self):
        clear_run_id()

    def _record(self):
        return logging.LogRecord("test", logging.INFO, __file__, 1, "msg", None, None)

    def test_adds_current_run_id(self):
        """Test that the filter copies the run id onto the record."""
        set_run_id("run-7")
        record = self._record()

        self.assertTrue(RunIDFilter().filter(record))
        self.assertEqual(record.run_id, "run-7")

    def test_placeholder_without_run_id(self):
        """Test that records outside a command get 'N/A'."""
        record = self._record()

        RunIDFilter().filter(record)

        self.assertEqual(record.run_id, "N/A")


class TestProcessors(unittest.TestCase):
    """Test cases for the structlog processors."""

    def tearDown(self):
        clear_run_id()

    def test_run_context_added_when_set(self):
        """Test that add_run_context injects the run id."""
        set_run_id("run-3")

        event = add_run_context(None, "info", {"event": "x"})

        self.assertEqual(event["run_id"], "run-3")

    def test_run_context_skipped_when_unset(self):
        """Test that add_run_context leaves events alone outside a run."""
        event = add_run_context(None, "info", {"event": "x"})

        self.assertNotIn("run_id", event)

    def test_toolkit_metadata(self):
        """Test that deployment, process and thread metadata are attached."""
        event = ToolkitMetadata("specgan-ci", "ci")(None, "info", {"event": "x"})

        self.assertEqual(event["service_name"], "specgan-ci")
        self.assertEqual(event["environment"], "ci")
        self.assertEqual(event["thread_id"], threading.get_ident())
        self.assertIn("process_id", event)

    def test_console_renderer_shows_extras_not_metadata(self):
        """Test that console lines carry event fields but not process metadata."""
        line = console_renderer(
            None,
            "info",
            {
                "event": "step_finished",
                "level": "info",
                "logger": "core.services.gan.trainer",
                "run_id": "run-9",
                "step": 12,
                "process_id": 1,
                "service_name": "specgan",
            },
        )

        self.assertIn("[INFO    ]", line)
        self.assertIn("run-9", line)
        self.assertIn("step_finished", line)
        self.assertIn("step=12", line)
        self.assertNotIn("process_id", line)
        self.assertNotIn("service_name", line)


class TestSetupLogging(unittest.TestCase):
    """Test cases for ``setup_logging``."""

    def tearDown(self):
        settings = get_settings()
        setup_logging(
            settings.LOG_FILE_PATH,
            level=settings.LOG_LEVEL,
            service_name=settings.SERVICE_NAME,
            environment=settings.ENVIRONMENT,
        )

    def test_creates_log_directory_and_json_handler(self):
        """Test that the log directory appears only once logging is set up."""
        with tempfile.TemporaryDirectory() as root:
            log_file = Path(root) / "logs" / "run.log"
            self.assertFalse(log_file.parent.exists())

            setup_logging(log_file, level="WARNING")

            self.assertTrue(log_file.parent.is_dir())
            handlers = logging.getLogger().handlers
            self.assertEqual(len(handlers), 2)
            self.assertEqual(logging.getLogger().level, logging.WARNING)
            for handler in handlers:
                handler.close()
