"""Command discovery and dispatch for the ``specgan`` command line."""

import importlib
import pkgutil
import sys
from pathlib import Path

from core.management.base import BaseCommand

COMMANDS_PACKAGE = "core.management.commands"


def get_commands() -> dict[str, str]:
    """Subcommand name -> module name, for every module in the commands package."""
    commands_dir = Path(__file__).parent / "commands"
    return {
        module.name.replace("_", "-"): module.name
        for module in pkgutil.iter_modules([str(commands_dir)])
        if not module.name.startswith("_")
    }


def load_command(name: str) -> BaseCommand:
    """Instantiate the ``Command`` class of a subcommand."""
    module_name = get_commands()[name]
    module = importlib.import_module(f"{COMMANDS_PACKAGE}.{module_name}")
    return module.Command(name)


def main_help_text(prog: str) -> str:
    lines = [f"usage: {prog} <subcommand> [options]", "", "Available subcommands:"]
    for name in sorted(get_commands()):
        lines.append(f"    {name}")
    lines.append("")
    lines.append(f"Type '{prog} <subcommand> --help' for help on a subcommand.")
    return "\n".join(lines)


def execute_from_command_line(argv: list[str] | None = None) -> int:
    """Run the subcommand named by ``argv[1]``; returns the exit code."""
    argv = list(sys.argv if argv is None else argv)
    prog = Path(argv[0]).name if argv else "specgan"
    if prog == "manage.py":
        prog = "specgan"
    if len(argv) < 2 or argv[1] in {"-h", "--help", "help"}:
        print(main_help_text(prog))
        return 0
    name = argv[1]
    if name not in get_commands():
        print(f"error: unknown subcommand {name!r}", file=sys.stderr)
        print(main_help_text(prog), file=sys.stderr)
        return 2
    try:
        return load_command(name).run(argv[2:], prog=prog)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for bad flags
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 2
