"""Tests for subcommand discovery, dispatch and argument helpers."""

import argparse
import io
from unittest.mock import patch

import numpy as np
import pytest

from core.exceptions import ArtifactNotFoundError
from core.logging import get_run_id
from core.management import execute_from_command_line, get_commands, main_help_text
from core.management.base import (
    BaseCommand,
    parse_int_list,
    parse_pitches,
    resolve_checkpoint,
)
from core.services.gan.trainer import latest_checkpoint
from core.tensor import save_tensors

EXPECTED_COMMANDS = {
    "bench",
    "decode",
    "encode",
    "evaluate",
    "interpolate",
    "make-dataset",
    "pitch-sequence",
    "rainbowgram",
    "roundtrip",
    "sample",
    "train-classifier",
    "train-gan",
}


class _EchoCommand(BaseCommand):
    help = "Echo for tests"

    def add_arguments(self, parser):
        parser.add_argument("--fail", action="store_true")

    def handle(self, options):
        if options.fail:
            raise ArtifactNotFoundError("nowhere.wav", kind="WAV file")
        self.write(f"seed={options.seed} run={get_run_id() is not None}")


class TestCommandDiscovery:
    """Test cases for ``get_commands`` and the top-level dispatcher."""

    def test_every_subcommand_is_discovered(self):
        assert set(get_commands()) == EXPECTED_COMMANDS

    def test_help_lists_subcommands(self):
        text = main_help_text("specgan")

        assert text.startswith("usage: specgan <subcommand>")
        for name in EXPECTED_COMMANDS:
            assert f"    {name}" in text

    @pytest.mark.parametrize("argv", [["specgan"], ["specgan", "--help"], ["specgan", "help"]])
    def test_help_exits_zero(self, argv, capsys):
        assert execute_from_command_line(argv) == 0
        assert "Available subcommands:" in capsys.readouterr().out

    def test_unknown_subcommand_exits_two(self, capsys):
        assert execute_from_command_line(["specgan", "transmogrify"]) == 2
        assert "unknown subcommand 'transmogrify'" in capsys.readouterr().err

    def test_subcommand_help_exits_zero(self, capsys):
        assert execute_from_command_line(["manage.py", "roundtrip", "--help"]) == 0
        assert "usage: specgan roundtrip" in capsys.readouterr().out

    def test_bad_flag_exits_two(self, capsys):
        assert execute_from_command_line(["specgan", "roundtrip", "--no-such-flag"]) == 2


class TestBaseCommand:
    """Test cases for ``BaseCommand.run``."""

    def test_handle_output_and_global_flags(self):
        out = io.StringIO()

        code = _EchoCommand("echo", stdout=out).run(["--seed", "9"])

        assert code == 0
        assert out.getvalue() == "seed=9 run=True\n"

    def test_run_id_is_cleared_afterwards(self):
        _EchoCommand("echo", stdout=io.StringIO()).run([])

        assert get_run_id() is None

    def test_errors_become_exit_codes(self, capsys):
        code = _EchoCommand("echo", stdout=io.StringIO()).run(["--fail"])

        assert code == 2
        assert capsys.readouterr().err == "error: WAV file not found: nowhere.wav\n"

    def test_rejected_flags_leave_logging_alone(self, capsys):
        with patch("core.management.base.configure_logging") as configure:
            code = execute_from_command_line(["specgan", "sample", "--bogus"])

        assert code == 2
        configure.assert_not_called()

    def test_logging_is_configured_after_parsing(self):
        with patch("core.management.base.configure_logging") as configure:
            _EchoCommand("echo", stdout=io.StringIO()).run([])

        configure.assert_called_once_with()

    def test_output_dir_is_created(self, tmp_path):
        command = _EchoCommand("echo")
        options = command.create_parser("specgan").parse_args(["--out", str(tmp_path / "a" / "b")])

        assert command.output_dir(options).is_dir()

    def test_default_output_dir_is_under_artifacts(self):
        command = _EchoCommand("echo")
        options = command.create_parser("specgan").parse_args([])

        out = command.output_dir(options)

        assert out.name == "echo"
        assert out.parent.name == "artifacts"

    def test_default_representation_is_desk(self):
        command = _EchoCommand("echo")
        options = command.create_parser("specgan").parse_args([])

        assert command.representation(options).frame_size == 256


class TestArgumentHelpers:
    """Test cases for ``parse_pitches``, ``parse_int_list`` and ``resolve_checkpoint``."""

    def test_pitch_list_and_ranges(self):
        assert parse_pitches("60,62") == [60, 62]
        assert parse_pitches("24-27, 60") == [24, 25, 26, 27, 60]

    def test_pitch_file_with_comments(self, tmp_path):
        source = tmp_path / "pitches.txt"
        source.write_text("# melody\n60\n64 # third\n67\n")

        assert parse_pitches(str(source)) == [60, 64, 67]

    def test_empty_pitches_are_rejected(self):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_pitches(" , ")

    def test_int_list(self):
        assert parse_int_list("8,16,32") == [8, 16, 32]

    @pytest.mark.parametrize("value", ["", "a,b", "4,0", "-2"])
    def test_invalid_int_list(self, value):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_int_list(value)

    def test_checkpoint_from_stem_or_file(self, tmp_path):
        save_tensors(tmp_path / "ckpt", {"w": np.ones(2)})

        assert resolve_checkpoint(tmp_path / "ckpt") == tmp_path / "ckpt"
        assert resolve_checkpoint(tmp_path / "ckpt.json") == tmp_path / "ckpt.json"

    def test_checkpoint_from_run_directory(self, tmp_path):
        stem = latest_checkpoint(tmp_path)
        stem.parent.mkdir(parents=True)
        save_tensors(stem, {"w": np.ones(2)})

        assert resolve_checkpoint(tmp_path) == stem

    def test_missing_checkpoint(self, tmp_path):
        with pytest.raises(ArtifactNotFoundError):
            resolve_checkpoint(tmp_path / "absent")
