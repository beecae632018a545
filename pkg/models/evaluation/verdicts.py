"""Verdicts and redundancy-weighted accuracy summaries.

A fingerprint whose files are all below the vendor threshold is a false
positive; every other fingerprint counts toward the true positives,
whether fully or partially flagged. Accuracy weights each fingerprint
by its redundancy (member file count).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Tuple

from models.clustering import Qualification, ResilientFingerprint
from utils.rounding import format_percent, percent


class Verdict(str, Enum):
    FULLY_MALICIOUS = "FullyMalicious"
    PARTIAL = "Partial"
    FALSE_POSITIVE = "FalsePositive"


def flag_histogram(fp: ResilientFingerprint) -> Dict[int, int]:
    """Vendor flag count -> number of member files."""
    return fp.file_stats.histogram


def verdict(fp: ResilientFingerprint, threshold: int) -> Verdict:
    flagged = [count >= threshold for count in flag_histogram(fp)]
    if not any(flagged):
        return Verdict.FALSE_POSITIVE
    if all(flagged):
        return Verdict.FULLY_MALICIOUS
    return Verdict.PARTIAL


def accuracies(fp_redundancy: int, tp_redundancy: int, rounding: str = "half_up") -> Tuple[float, float]:
    total = fp_redundancy + tp_redundancy
    return percent(fp_redundancy, total, rounding), percent(tp_redundancy, total, rounding)


CSV_HEADER = (
    "qualification",
    "fingerprints",
    "fp_num",
    "fp_acc",
    "fp_redundancy",
    "partial_num",
    "full_num",
    "tp_acc",
    "tp_redundancy",
)


@dataclass(frozen=True)
class EvaluationSummary:
    qualification: Qualification
    fingerprint_count: int
    fp_count: int
    fp_accuracy_pct: float
    fp_redundancy: int
    partial_count: int
    full_count: int
    tp_accuracy_pct: float
    tp_redundancy: int

    @property
    def empty(self) -> bool:
        return self.fp_redundancy + self.tp_redundancy == 0

    def as_row(self) -> Tuple[str, ...]:
        return (
            self.qualification.value,
            str(self.fingerprint_count),
            str(self.fp_count),
            format_percent(self.fp_accuracy_pct),
            str(self.fp_redundancy),
            str(self.partial_count),
            str(self.full_count),
            format_percent(self.tp_accuracy_pct),
            str(self.tp_redundancy),
        )

    def as_dict(self) -> Dict[str, object]:
        row = dict(zip(CSV_HEADER, self.as_row()))
        row["empty"] = self.empty
        return row


def summarize(
    fingerprints: Iterable[ResilientFingerprint],
    qualification: Qualification,
    threshold: int,
    rounding: str = "half_up",
) -> EvaluationSummary:
    """Tally verdicts over fingerprints already filtered by select()."""

    counts = {member: 0 for member in Verdict}
    fp_redundancy = tp_redundancy = 0
    for fp in fingerprints:
        result = verdict(fp, threshold)
        counts[result] += 1
        if result is Verdict.FALSE_POSITIVE:
            fp_redundancy += fp.redundancy
        else:
            tp_redundancy += fp.redundancy

    fp_acc, tp_acc = accuracies(fp_redundancy, tp_redundancy, rounding)
    return EvaluationSummary(
        qualification=qualification,
        fingerprint_count=sum(counts.values()),
        fp_count=counts[Verdict.FALSE_POSITIVE],
        fp_accuracy_pct=fp_acc,
        fp_redundancy=fp_redundancy,
        partial_count=counts[Verdict.PARTIAL],
        full_count=counts[Verdict.FULLY_MALICIOUS],
        tp_accuracy_pct=tp_acc,
        tp_redundancy=tp_redundancy,
    )
