"""Runtime settings for the specgan toolkit.

Values come from the process environment, with ``.env.local`` at the
repository root loaded first for local development. The module is selected
through ``SPECGAN_SETTINGS_MODULE`` and read via ``core.config.get_settings()``.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Load environment variables from .env.local (local development)
# In CI the variables come from the job environment instead
env_path = BASE_DIR / ".env.local"
load_dotenv(dotenv_path=env_path, override=False)

# Logging Configuration
# Read by core.logging.configure_logging() once a command's arguments parse
LOG_FILE_PATH = os.getenv("LOG_FILE_PATH", str(BASE_DIR / "logs" / "specgan.log"))
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
SERVICE_NAME = os.getenv("SERVICE_NAME", "specgan")
ENVIRONMENT = os.getenv("ENVIRONMENT", "development")

DEBUG = os.getenv("DEBUG", "false").lower() in {"1", "true", "yes"}

# Where commands put artifacts when --out is not given
ARTIFACT_DIR = Path(os.getenv("ARTIFACT_DIR", str(BASE_DIR / "artifacts")))

# Seed used when --seed is not given
DEFAULT_SEED = int(os.getenv("DEFAULT_SEED", "0"))

# Worker threads for corpus rendering, batch encoding and prefetching
NUM_WORKERS = int(os.getenv("NUM_WORKERS", str(min(4, os.cpu_count() or 1))))

# Depth of the bounded queue between the batch loader and the training loop
PREFETCH_BATCHES = int(os.getenv("PREFETCH_BATCHES", "4"))

# Training checkpoints are written every N steps (plus at stage boundaries)
CHECKPOINT_EVERY_STEPS = int(os.getenv("CHECKPOINT_EVERY_STEPS", "200"))
