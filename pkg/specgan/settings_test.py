"""Test-specific settings."""

import os
import tempfile
from pathlib import Path

# Quiet, throwaway logging for test runs
_test_root = Path(tempfile.mkdtemp(prefix="specgan-test-"))
os.environ["LOG_FILE_PATH"] = str(_test_root / "logs" / "specgan-test.log")
os.environ.setdefault("LOG_LEVEL", "CRITICAL")

from .settings import *

# Disable debug for tests
DEBUG = False

ARTIFACT_DIR = _test_root / "artifacts"

# Single worker keeps test runs deterministic and light
NUM_WORKERS = 1
PREFETCH_BATCHES = 2
CHECKPOINT_EVERY_STEPS = 5

# Test-specific settings
TEST_MODE = True
