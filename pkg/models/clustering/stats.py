"""Per-section-key and per-file statistics used by both clustering methods."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from models.evaluation_config import EvaluationConfig
from models.fingerprint_keys import SecKey
from models.report import FileReport, SectionLabel, SectionRecord
from models.section_taxonomy import classify


@dataclass(frozen=True)
class SectionGroupStats:
    """All occurrences of one section content hash.

    The label is the taxonomy class of the key's first occurrence in
    input order.
    """

    sec_key: str
    label: SectionLabel
    occurrence_count: int
    distinct_file_count: int
    entropy_min: float
    entropy_max: float
    chi2_min: float
    chi2_max: float

    @property
    def key(self) -> SecKey:
        return SecKey(self.sec_key)

    @property
    def display_id(self) -> str:
        return self.key.display_id

    @property
    def is_redundant(self) -> bool:
        return self.distinct_file_count >= 2

    def as_dict(self) -> Dict[str, object]:
        return {
            "sec_key": self.sec_key,
            "display_id": self.display_id,
            "label": self.label.value,
            "occurrence_count": self.occurrence_count,
            "distinct_file_count": self.distinct_file_count,
            "entropy_min": self.entropy_min,
            "entropy_max": self.entropy_max,
            "chi2_min": self.chi2_min,
            "chi2_max": self.chi2_max,
        }


@dataclass(frozen=True)
class FileStats:
    file_count: int
    distinct_sha256: int
    size_min: int
    size_max: int
    vendor_flag_histogram: Tuple[Tuple[int, int], ...]

    @property
    def histogram(self) -> Dict[int, int]:
        return dict(self.vendor_flag_histogram)

    def as_dict(self) -> Dict[str, object]:
        return {
            "file_count": self.file_count,
            "distinct_sha256": self.distinct_sha256,
            "size_min": self.size_min,
            "size_max": self.size_max,
            # JSON object keys are strings; sorted numerically by construction
            "vendor_flag_histogram": {str(k): v for k, v in self.vendor_flag_histogram},
        }


def file_stats(reports: Iterable[FileReport]) -> FileStats:
    """fparams of a set of member files."""

    members = list(reports)
    if not members:
        return FileStats(0, 0, 0, 0, ())
    histogram = Counter(report.vendor_malicious_count for report in members)
    sizes = [report.size_bytes for report in members]
    return FileStats(
        file_count=len(members),
        distinct_sha256=len({report.sha256 for report in members}),
        size_min=min(sizes),
        size_max=max(sizes),
        vendor_flag_histogram=tuple(sorted(histogram.items())),
    )


class _SectionAccumulator:
    """Running aggregate for one key; last_file_id dedups consecutive copies."""

    __slots__ = (
        "label",
        "occurrences",
        "file_ids",
        "last_file_id",
        "entropy_min",
        "entropy_max",
        "chi2_min",
        "chi2_max",
    )

    def __init__(self, section: SectionRecord, label: SectionLabel) -> None:
        self.label = label
        self.occurrences = 0
        self.file_ids: List[str] = []
        self.last_file_id = None
        self.entropy_min = self.entropy_max = section.entropy
        self.chi2_min = self.chi2_max = section.chi2

    def add(self, section: SectionRecord, file_id: str) -> None:
        self.occurrences += 1
        if file_id != self.last_file_id:
            self.file_ids.append(file_id)
            self.last_file_id = file_id
        self.entropy_min = min(self.entropy_min, section.entropy)
        self.entropy_max = max(self.entropy_max, section.entropy)
        self.chi2_min = min(self.chi2_min, section.chi2)
        self.chi2_max = max(self.chi2_max, section.chi2)

    def freeze(self, sec_key: str) -> SectionGroupStats:
        return SectionGroupStats(
            sec_key=sec_key,
            label=self.label,
            occurrence_count=self.occurrences,
            distinct_file_count=len(self.file_ids),
            entropy_min=self.entropy_min,
            entropy_max=self.entropy_max,
            chi2_min=self.chi2_min,
            chi2_max=self.chi2_max,
        )


@dataclass(frozen=True)
class SectionGroups:
    """Section groups of a report set plus each key's distinct member files."""

    stats: Dict[str, SectionGroupStats]
    members: Dict[str, Tuple[str, ...]]

    def ranked(self) -> List[SectionGroupStats]:
        """Groups by occurrence count descending, ties by key ascending."""
        return sorted(self.stats.values(), key=lambda s: (-s.occurrence_count, s.sec_key))


def group_sections(reports: Iterable[FileReport], cfg: EvaluationConfig) -> SectionGroups:
    """Group every section of the given reports by content hash.

    Reports are visited one at a time, so all copies of a key inside
    one file are adjacent in the scan and count as a single member.
    """

    groups: Dict[str, _SectionAccumulator] = {}
    for report in reports:
        for section in report.sections:
            accumulator = groups.get(section.content_hash)
            if accumulator is None:
                accumulator = _SectionAccumulator(section, classify(section, cfg))
                groups[section.content_hash] = accumulator
            accumulator.add(section, report.file_id)

    return SectionGroups(
        stats={key: acc.freeze(key) for key, acc in groups.items()},
        members={key: tuple(sorted(acc.file_ids)) for key, acc in groups.items()},
    )
