"""Feed summary for `ingest-check`: type mix, label mix and shape of a group."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from models.evaluation_config import EvaluationConfig
from models.feed.reader import Dataset, IngestStats
from models.report import FileType, SectionLabel
from models.section_taxonomy import label_counts


def bucket_labels(threshold: int) -> Tuple[str, ...]:
    """Label buckets split at the vendor threshold: benign, low-confidence, malicious.

    With a threshold of 1 every flagged file is malicious and the middle
    bucket disappears.
    """
    if threshold < 1:
        raise ValueError(f"vendor threshold must be >= 1, got {threshold}")
    if threshold == 1:
        return ("0", ">=1")
    if threshold == 2:
        return ("0", "1", ">=2")
    return ("0", f"1-{threshold - 1}", f">={threshold}")


def label_bucket(count: int, threshold: int) -> str:
    labels = bucket_labels(threshold)
    if count == 0:
        return labels[0]
    if count < threshold:
        return labels[1]
    return labels[-1]


@dataclass(frozen=True)
class FeedSummary:
    group_id: str
    file_count: int
    file_types: Tuple[Tuple[str, int], ...]
    label_buckets: Tuple[Tuple[str, int], ...]
    section_count: int
    section_labels: Tuple[Tuple[str, int], ...]
    resource_count: int
    ingest_stats: IngestStats

    @property
    def avg_sections(self) -> float:
        return self.section_count / self.file_count if self.file_count else 0.0

    @property
    def avg_resources(self) -> float:
        return self.resource_count / self.file_count if self.file_count else 0.0

    def as_dict(self) -> Dict[str, Any]:
        return {
            "group_id": self.group_id,
            "file_count": self.file_count,
            "file_types": dict(self.file_types),
            "label_buckets": dict(self.label_buckets),
            "section_count": self.section_count,
            "section_labels": dict(self.section_labels),
            "resource_count": self.resource_count,
            "avg_sections": round(self.avg_sections, 2),
            "avg_resources": round(self.avg_resources, 2),
            "ingest_stats": self.ingest_stats.as_dict(),
        }


def feed_summary(dataset: Dataset, cfg: Optional[EvaluationConfig] = None) -> FeedSummary:
    """Summarize one ingested group under the vendor threshold and taxonomy of cfg."""

    cfg = cfg or EvaluationConfig()
    types = Counter(report.file_type.value for report in dataset.reports)
    buckets = Counter(
        label_bucket(report.vendor_malicious_count, cfg.vendor_threshold)
        for report in dataset.reports
    )
    sections = label_counts((s for report in dataset.reports for s in report.sections), cfg)
    return FeedSummary(
        group_id=dataset.group_id,
        file_count=len(dataset),
        file_types=tuple((member.value, types.get(member.value, 0)) for member in FileType),
        label_buckets=tuple(
            (bucket, buckets.get(bucket, 0)) for bucket in bucket_labels(cfg.vendor_threshold)
        ),
        section_count=sum(len(report.sections) for report in dataset.reports),
        section_labels=tuple((label.value, sections[label]) for label in SectionLabel),
        resource_count=sum(len(report.resources) for report in dataset.reports),
        ingest_stats=dataset.ingest_stats,
    )
