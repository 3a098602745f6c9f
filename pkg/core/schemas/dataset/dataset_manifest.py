"""Schema for the corpus manifest."""

from typing import Self

from pydantic import Field, model_validator

from core.constants.audio import SAMPLE_RATE
from core.schemas.base_schema_model import BaseSchemaModel
from core.schemas.dataset.note_record import NoteRecord

MANIFEST_SCHEMA_VERSION = 1


class DatasetManifest(BaseSchemaModel):
    """Index of a rendered corpus and its train/test split.

    Paths inside records are relative to the manifest file's directory.

    Attributes:
        schema_version: Manifest layout version.
        sample_rate: Sample rate of every WAV in the corpus.
        num_samples: Length of every note in samples.
        records: All notes of the corpus.
        split_seed: Seed of the shuffle that produced the split.
        train_ids: Record ids in the training split.
        test_ids: Record ids in the held-out split.
    """

    schema_version: int = Field(default=MANIFEST_SCHEMA_VERSION)
    sample_rate: int = Field(default=SAMPLE_RATE, gt=0)
    num_samples: int = Field(..., gt=0)
    records: list[NoteRecord] = Field(..., min_length=1)
    split_seed: int = Field(..., ge=0)
    train_ids: list[str] = Field(default_factory=list)
    test_ids: list[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_partition(self) -> Self:
        """Train and test ids must partition the record ids."""
        ids = [r.id for r in self.records]
        if len(set(ids)) != len(ids):
            raise ValueError("record ids must be unique")
        train, test = set(self.train_ids), set(self.test_ids)
        if train & test:
            raise ValueError("train and test splits overlap")
        if train | test != set(ids):
            raise ValueError("train and test splits must cover every record")
        return self

    def train_records(self) -> list[NoteRecord]:
        """Records in the training split, in manifest order."""
        train = set(self.train_ids)
        return [r for r in self.records if r.id in train]

    def test_records(self) -> list[NoteRecord]:
        """Records in the held-out split, in manifest order."""
        test = set(self.test_ids)
        return [r for r in self.records if r.id in test]

    def pitches(self) -> list[int]:
        """Distinct pitches present in the corpus, ascending."""
        return sorted({r.pitch for r in self.records})
