"""Base pydantic model for centralized configuration of schema definitions."""

from pathlib import Path
from typing import Self

from pydantic import BaseModel, ConfigDict
from pydantic.alias_generators import to_camel

from core.exceptions import ArtifactNotFoundError


class BaseSchemaModel(BaseModel):
    """Base pydantic model for centralized configuration of schema definitions.

    This base model sets common configurations for all schema models
    in the application (configs, manifests, reports), ensuring that every
    JSON file the toolkit writes uses the same camelCase layout and can be
    read back by field name or alias.
    """

    model_config = ConfigDict(
        from_attributes=True,
        alias_generator=to_camel,
        populate_by_name=True,
        use_enum_values=True,
        extra="ignore",
        str_strip_whitespace=True,
    )

    def write_json(self, path: str | Path) -> Path:
        """Serialize the model to a JSON file using camelCase aliases.

        Args:
            path: Destination file; parent directories are created.

        Returns:
            The written path.
        """
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(self.model_dump_json(by_alias=True, indent=2) + "\n")
        return target

    @classmethod
    def read_json(cls, path: str | Path) -> Self:
        """Load and validate a model from a JSON file.

        Args:
            path: File written by ``write_json`` (or hand-written config).

        Returns:
            The validated model.

        Raises:
            ArtifactNotFoundError: If the file does not exist.
        """
        source = Path(path)
        if not source.is_file():
            raise ArtifactNotFoundError(str(source), kind=f"{cls.__name__} file")
        return cls.model_validate_json(source.read_text())
