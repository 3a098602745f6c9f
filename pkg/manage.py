#!/usr/bin/env python
"""Command-line utility for the spectral GAN toolkit."""

import os
import sys


def main():
    """Run a specgan subcommand."""
    os.environ.setdefault("SPECGAN_SETTINGS_MODULE", "specgan.settings")
    from core.management import execute_from_command_line  # noqa: PLC0415

    sys.exit(execute_from_command_line(sys.argv))


if __name__ == "__main__":
    main()
