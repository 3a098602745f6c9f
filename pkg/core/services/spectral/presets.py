"""Resolve ``--config`` values to representation configs."""

from pathlib import Path

from core.constants.representations import REPRESENTATION_PRESETS
from core.enums import RepresentationPreset
from core.exceptions import ConfigurationError
from core.schemas.spectral import RepresentationConfig


def preset_config(preset: RepresentationPreset | str) -> RepresentationConfig:
    """Unfitted config for a named preset."""
    return RepresentationConfig(**REPRESENTATION_PRESETS[RepresentationPreset(preset)])


def load_representation(name_or_path: str | Path) -> RepresentationConfig:
    """Load a preset by name or a config JSON (possibly with fitted stats).

    Args:
        name_or_path: Preset name such as ``if`` or ``desk``, or a path to a
            JSON file written by ``RepresentationConfig.write_json``.

    Returns:
        The representation config.

    Raises:
        ConfigurationError: If the value is neither a preset nor a file.
    """
    value = str(name_or_path)
    if value in {p.value for p in RepresentationPreset}:
        return preset_config(value)
    path = Path(value)
    if path.is_file():
        return RepresentationConfig.read_json(path)
    names = ", ".join(p.value for p in RepresentationPreset)
    raise ConfigurationError(
        f"unknown representation {value!r}; use a config file or one of: {names}",
        component="spectral",
    )
