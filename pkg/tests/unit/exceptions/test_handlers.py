"""Unit tests for the command exception handler."""

import io
import logging
import unittest
from unittest.mock import Mock, patch

from pydantic import BaseModel, ValidationError

from core.exceptions import (
    ArtifactNotFoundError,
    ConfigurationError,
    DatasetError,
    PitchOutOfRangeError,
    ShapeMismatchError,
    SynthesisError,
    TrainingDivergedError,
    handle_command_exception,
)


class _Options(BaseModel):
    steps: int


class TestHandleCommandException(unittest.TestCase):
    """Test cases for handle_command_exception."""

    def setUp(self):
        """Set up test fixtures."""
        self.context = {"command": "train-gan", "options": {"seed": 0}}

    def _handle(self, exc):
        with patch("sys.stderr", new_callable=io.StringIO) as stderr:
            exit_code = handle_command_exception(exc, self.context)
        return exit_code, stderr.getvalue()

    def test_synthesis_error_uses_its_exit_code(self):
        """Test that pipeline errors report their own exit code and message."""
        exit_code, stderr = self._handle(DatasetError("corpus is empty"))

        self.assertEqual(exit_code, 1)
        self.assertEqual(stderr, "error: corpus is empty\n")

    def test_usage_errors_exit_with_two(self):
        """Test that caller-side pipeline errors map to exit code 2."""
        for exc in (
            ConfigurationError("mel needs magnitude"),
            PitchOutOfRangeError(90),
            ArtifactNotFoundError("run/ckpt.json", kind="checkpoint"),
        ):
            with self.subTest(exc=type(exc).__name__):
                exit_code, _ = self._handle(exc)
                self.assertEqual(exit_code, 2)

    def test_missing_file_exits_with_two(self):
        """Test that FileNotFoundError is reported as a usage error."""
        exc = FileNotFoundError(2, "No such file", "notes/a.wav")

        exit_code, stderr = self._handle(exc)

        self.assertEqual(exit_code, 2)
        self.assertIn("notes/a.wav", stderr)

    def test_validation_error_is_flattened(self):
        """Test that pydantic errors become one ``field: message`` line."""
        try:
            _Options(steps="many")
        except ValidationError as exc:
            exit_code, stderr = self._handle(exc)

        self.assertEqual(exit_code, 2)
        self.assertTrue(stderr.startswith("error: invalid configuration: steps: "))
        self.assertEqual(stderr.count("\n"), 1)

    def test_value_error_exits_with_one(self):
        """Test that ValueError keeps its message and exits with 1."""
        exit_code, stderr = self._handle(ValueError("bad shape"))

        self.assertEqual(exit_code, 1)
        self.assertEqual(stderr, "error: bad shape\n")

    def test_unexpected_error_hides_details(self):
        """Test that unknown exceptions print a generic message."""
        exit_code, stderr = self._handle(RuntimeError("secret internals"))

        self.assertEqual(exit_code, 1)
        self.assertNotIn("secret internals", stderr)
        self.assertIn("An internal error occurred.", stderr)

    def test_usage_errors_log_at_warning(self):
        """Test that exit code 2 failures are logged as warnings."""
        with self.assertLogs("core.exceptions.handlers", level="WARNING") as logs:
            self._handle(ConfigurationError("bad preset"))

        self.assertEqual(logs.records[0].levelno, logging.WARNING)
        self.assertIn("Command: train-gan", logs.output[0])

    def test_failures_log_at_error(self):
        """Test that exit code 1 failures are logged as errors."""
        with self.assertLogs("core.exceptions.handlers", level="ERROR") as logs:
            self._handle(TrainingDivergedError(step=12))

        self.assertIn("Component: gan", logs.output[0])

    @patch("core.exceptions.handlers.get_settings")
    def test_debug_mode_adds_stack_trace(self, mock_get_settings):
        """Test that DEBUG settings append the traceback and options."""
        mock_get_settings.return_value = Mock(DEBUG=True)
        try:
            raise DatasetError("broken wav")
        except DatasetError as exc:
            with self.assertLogs("core.exceptions.handlers", level="ERROR") as logs:
                self._handle(exc)

        self.assertIn("Stack trace:", logs.output[0])
        self.assertIn("Command options:", logs.output[0])


class TestSynthesisErrors(unittest.TestCase):
    """Test cases for the pipeline exception hierarchy."""

    def test_all_errors_share_a_base(self):
        """Test that every pipeline error is a SynthesisError."""
        for exc in (
            DatasetError("x"),
            ConfigurationError("x"),
            TrainingDivergedError(step=1),
            ShapeMismatchError("matmul", (2, 3), (4, 5)),
        ):
            with self.subTest(exc=type(exc).__name__):
                self.assertIsInstance(exc, SynthesisError)

    def test_shape_mismatch_lists_operands(self):
        """Test that ShapeMismatchError renders every operand shape."""
        exc = ShapeMismatchError("matmul", (2, 3), (4, 5))

        self.assertEqual(exc.shapes, [(2, 3), (4, 5)])
        self.assertEqual(str(exc), "matmul: incompatible shapes (2, 3), (4, 5)")

    def test_dataset_error_includes_path(self):
        """Test that DatasetError appends the offending path."""
        exc = DatasetError("unreadable", path="a.wav")

        self.assertEqual(str(exc), "unreadable (path: a.wav)")

    def test_divergence_mentions_snapshot(self):
        """Test that the snapshot path is part of the divergence message."""
        exc = TrainingDivergedError(step=7, snapshot_path="run/diverged")

        self.assertIn("step 7", str(exc))
        self.assertIn("run/diverged", str(exc))
