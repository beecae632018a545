"""
Report builders - turn model results into CsvReport / JsonLinesReport

Each builder honours the run's report format: CSV rows keep a fixed
column order, JSON records carry the same columns as keys.
"""

from typing import Iterable, List, Mapping, Sequence, Tuple

from models.clustering import ResilientFingerprint, VariantProfile
from models.evaluation import ComparisonRow, EvaluationSummary, PersistenceRow, PrevalenceRow
from models.evaluation.comparison import CSV_HEADER as COMPARISON_HEADER
from models.evaluation.persistence import CSV_HEADER as PERSISTENCE_HEADER
from models.evaluation.prevalence import CSV_HEADER as PREVALENCE_HEADER
from models.evaluation.verdicts import CSV_HEADER as EVALUATION_HEADER
from models.feed import FeedSummary
from views.base_report import BaseReport
from views.csv_report import CsvReport
from views.json_report import JsonLinesReport


def _tabular(name: str, header: Sequence[str], rows: List[Tuple[str, ...]], report_format: str) -> BaseReport:
    if report_format == "json":
        return JsonLinesReport(name, [dict(zip(header, row)) for row in rows])
    return CsvReport(name, header, rows)


def prevalence_report(rows: Iterable[PrevalenceRow], report_format: str = "csv") -> BaseReport:
    return _tabular("prevalence", PREVALENCE_HEADER, [r.as_row() for r in rows], report_format)


def evaluation_report(summary: EvaluationSummary, report_format: str = "csv") -> BaseReport:
    return _tabular("evaluate", EVALUATION_HEADER, [summary.as_row()], report_format)


def comparison_report(rows: Iterable[ComparisonRow], report_format: str = "csv") -> BaseReport:
    return _tabular("compare", COMPARISON_HEADER, [r.as_row() for r in rows], report_format)


def persistence_report(rows: Iterable[PersistenceRow], report_format: str = "csv") -> BaseReport:
    return _tabular("track", PERSISTENCE_HEADER, [r.as_row() for r in rows], report_format)


def cluster_report(
    fingerprints: Sequence[ResilientFingerprint],
    variants: Mapping[str, VariantProfile],
) -> BaseReport:
    """Always JSON-lines: one record per fingerprint, with its variant profile."""

    records = []
    for fp in fingerprints:
        record = fp.as_dict()
        if fp.key in variants:
            record["variants"] = variants[fp.key].as_dict()
        records.append(record)
    return JsonLinesReport("cluster", records)


def summary_report(summaries: Iterable[FeedSummary]) -> BaseReport:
    return JsonLinesReport("ingest-check", [summary.as_dict() for summary in summaries])
