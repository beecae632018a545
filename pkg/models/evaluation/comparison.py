"""Resilient fingerprints against exact-hash baselines on one group."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from models.clustering import BEST_QUALIFICATION, Method, build, select
from models.errors import EmptyDatasetError
from models.evaluation.verdicts import EvaluationSummary, summarize
from models.evaluation_config import EvaluationConfig
from models.feed.reader import Dataset
from models.fingerprint_keys import KeySelector, baseline_row
from utils.rounding import format_percent, percent


class Technique(str, Enum):
    SHA256 = "SHA256"
    TLSH = "TLSH"
    TOP_DOWN = "TopDown"
    BOTTOM_UP = "BottomUp"


CSV_HEADER = ("technique", "files", "accuracy_pct")


@dataclass(frozen=True)
class ComparisonRow:
    technique: Technique
    files_identified: int
    accuracy_pct: float

    def as_row(self) -> Tuple[str, ...]:
        return (self.technique.value, str(self.files_identified), format_percent(self.accuracy_pct))


def _summary_row(
    technique: Technique, summary: Optional[EvaluationSummary], total: int, rounding: str
) -> ComparisonRow:
    identified = summary.tp_redundancy if summary is not None else 0
    return ComparisonRow(technique, identified, percent(identified, total, rounding))


def comparison_table(
    dataset: Dataset,
    top_down_summary: Optional[EvaluationSummary],
    bottom_up_summary: Optional[EvaluationSummary],
    rounding: str = "half_up",
) -> List[ComparisonRow]:
    """Rows in SHA256, TLSH, TopDown, BottomUp order over the full group size."""

    if dataset.is_empty:
        raise EmptyDatasetError(f"group {dataset.group_id} has no reports")

    rows = []
    for technique, selector in ((Technique.SHA256, KeySelector.SHA256), (Technique.TLSH, KeySelector.TLSH)):
        baseline = baseline_row(dataset, selector, rounding)
        rows.append(ComparisonRow(technique, baseline.files_identified, baseline.accuracy_pct))
    rows.append(_summary_row(Technique.TOP_DOWN, top_down_summary, len(dataset), rounding))
    rows.append(_summary_row(Technique.BOTTOM_UP, bottom_up_summary, len(dataset), rounding))
    return rows


def best_summary(dataset: Dataset, method: Method, cfg: EvaluationConfig) -> EvaluationSummary:
    """Summary of one method under its strongest qualification."""

    qualification = BEST_QUALIFICATION[method]
    selected = select(build(dataset, method, cfg), qualification)
    return summarize(selected, qualification, cfg.vendor_threshold, cfg.rounding)


def compare(dataset: Dataset, cfg: Optional[EvaluationConfig] = None) -> List[ComparisonRow]:
    cfg = cfg or EvaluationConfig()
    if dataset.is_empty:
        raise EmptyDatasetError(f"group {dataset.group_id} has no reports")
    return comparison_table(
        dataset,
        best_summary(dataset, Method.TOP_DOWN, cfg),
        best_summary(dataset, Method.BOTTOM_UP, cfg),
        cfg.rounding,
    )
