"""Base class for ``specgan`` subcommands.

Each subcommand lives in ``core/management/commands/<name>.py`` and defines a
``Command`` subclass of ``BaseCommand``. The module name with underscores
replaced by hyphens is the subcommand name.
"""

import argparse
import sys
import time
import uuid
from pathlib import Path
from typing import Any, TextIO

import structlog

from core.config import get_settings
from core.exceptions import ArtifactNotFoundError, handle_command_exception
from core.logging import clear_run_id, configure_logging, set_run_id
from core.schemas.spectral import RepresentationConfig
from core.services.gan.trainer import latest_checkpoint
from core.services.spectral import load_representation
from core.tensor.checkpoint import container_paths

logger = structlog.get_logger(__name__)

DEFAULT_REPRESENTATION = "desk"


class BaseCommand:
    """A subcommand with the global ``--config``, ``--seed`` and ``--out`` flags.

    Subclasses set ``help``, add their own flags in ``add_arguments`` and do
    their work in ``handle``. ``run`` parses arguments, tags log lines with
    a fresh run id and turns exceptions into exit codes.
    """

    help = ""

    def __init__(self, name: str, stdout: TextIO | None = None):
        self.name = name
        self.stdout = stdout or sys.stdout

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Register subcommand-specific flags."""

    def handle(self, options: argparse.Namespace) -> int | None:
        """Run the subcommand; returning None means exit code 0."""
        raise NotImplementedError("subclasses of BaseCommand must provide handle()")

    def create_parser(self, prog: str) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog=f"{prog} {self.name}",
            description=self.help,
        )
        parser.add_argument(
            "--config",
            default=DEFAULT_REPRESENTATION,
            help="representation preset name or representation JSON file "
            f"(default: {DEFAULT_REPRESENTATION})",
        )
        parser.add_argument(
            "--seed",
            type=int,
            default=get_settings().DEFAULT_SEED,
            help="random seed (default: DEFAULT_SEED setting)",
        )
        parser.add_argument(
            "--out",
            type=Path,
            default=None,
            help="output directory (default: ARTIFACT_DIR/<command>)",
        )
        self.add_arguments(parser)
        return parser

    def write(self, message: str) -> None:
        self.stdout.write(message + "\n")

    def output_dir(self, options: argparse.Namespace) -> Path:
        """``--out`` or the command's folder under ARTIFACT_DIR, created."""
        out = options.out or Path(get_settings().ARTIFACT_DIR) / self.name
        out.mkdir(parents=True, exist_ok=True)
        return out

    def representation(self, options: argparse.Namespace) -> RepresentationConfig:
        return load_representation(options.config)

    def run(self, argv: list[str], prog: str = "specgan") -> int:
        """Parse ``argv`` and execute; returns the process exit code.

        ``--help`` and argument errors exit through argparse (codes 0 and 2)
        before anything is written.
        """
        options = self.create_parser(prog).parse_args(argv)
        configure_logging()
        run_id = str(uuid.uuid4())
        set_run_id(run_id)
        start = time.perf_counter()
        context: dict[str, Any] = {"command": self.name, "options": vars(options)}
        logger.info("command_started", command=self.name)
        try:
            exit_code = self.handle(options) or 0
        except Exception as exc:  # noqa: BLE001
            exit_code = handle_command_exception(exc, context)
        finally:
            logger.info(
                "command_finished",
                command=self.name,
                duration_ms=round((time.perf_counter() - start) * 1000, 2),
            )
            clear_run_id()
        return exit_code


def resolve_checkpoint(path: str | Path) -> Path:
    """Checkpoint stem from a stem, a ``.json``/``.bin`` file or a run directory.

    Raises:
        ArtifactNotFoundError: If no checkpoint manifest exists there.
    """
    path = Path(path)
    stem = latest_checkpoint(path) if path.is_dir() else path
    manifest = container_paths(stem)[1]
    if not manifest.is_file():
        raise ArtifactNotFoundError(str(manifest), kind="checkpoint")
    return stem


def parse_pitches(value: str) -> list[int]:
    """``60,62,64`` or ranges like ``24-84``, or a file holding either.

    Files may also list one pitch per line; ``#`` starts a comment.
    """
    source = Path(value)
    text = source.read_text() if source.is_file() else value
    pitches: list[int] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        for token in line.replace(",", " ").split():
            if "-" in token[1:]:
                low, high = token.split("-", 1)
                pitches.extend(range(int(low), int(high) + 1))
            else:
                pitches.append(int(token))
    if not pitches:
        raise argparse.ArgumentTypeError(f"no pitches in {value!r}")
    return pitches


def parse_int_list(value: str) -> list[int]:
    """Comma-separated positive integers."""
    try:
        values = [int(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {value!r}") from None
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(f"expected positive integers, got {value!r}")
    return values
