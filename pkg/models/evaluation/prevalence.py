"""Exact-key redundancy per feature (how often file content repeats in a group)."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from models.errors import EmptyDatasetError
from models.feed.reader import Dataset
from models.fingerprint_keys import KeySelector, redundancy_exact, selector_keys
from utils.rounding import format_percent, percent


class Feature(str, Enum):
    SHA256 = "SHA256"
    TLSH = "TLSH"
    IMPORT_LIST = "ImportList"
    SECTIONS = "Sections"
    RESOURCES = "Resources"


CSV_HEADER = ("feature", "population", "redundancy", "redundancy_pct")


@dataclass(frozen=True)
class PrevalenceRow:
    feature: Feature
    population: int
    redundancy: int
    redundancy_pct: float

    def as_row(self) -> Tuple[str, ...]:
        return (
            self.feature.value,
            str(self.population),
            str(self.redundancy),
            format_percent(self.redundancy_pct),
        )


def _row(feature: Feature, keys: List[str], rounding: str) -> PrevalenceRow:
    redundancy = redundancy_exact(keys)
    return PrevalenceRow(feature, len(keys), redundancy, percent(redundancy, len(keys), rounding))


def prevalence(dataset: Dataset, rounding: str = "half_up") -> List[PrevalenceRow]:
    """One row per feature, in Feature order.

    File-level keys use the files carrying them as population; sections
    and resources are counted over every section or resource record.
    """

    if dataset.is_empty:
        raise EmptyDatasetError(f"group {dataset.group_id} has no reports")

    section_keys = [s.content_hash for r in dataset.reports for s in r.sections]
    resource_keys = [res.content_hash for r in dataset.reports for res in r.resources]
    return [
        _row(Feature.SHA256, selector_keys(dataset, KeySelector.SHA256), rounding),
        _row(Feature.TLSH, selector_keys(dataset, KeySelector.TLSH), rounding),
        _row(Feature.IMPORT_LIST, selector_keys(dataset, KeySelector.IMPHASH), rounding),
        _row(Feature.SECTIONS, section_keys, rounding),
        _row(Feature.RESOURCES, resource_keys, rounding),
    ]
