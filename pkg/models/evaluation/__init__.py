"""Evaluation - verdicts, accuracy summaries, prevalence and baseline comparison."""

from .comparison import ComparisonRow, Technique, best_summary, compare, comparison_table
from .oracle import coverage, pairwise_scores, report_filter
from .persistence import PersistenceRow, persistence
from .prevalence import Feature, PrevalenceRow, prevalence
from .verdicts import EvaluationSummary, Verdict, accuracies, flag_histogram, summarize, verdict

__all__ = [
    "ComparisonRow",
    "EvaluationSummary",
    "Feature",
    "PersistenceRow",
    "PrevalenceRow",
    "Technique",
    "Verdict",
    "accuracies",
    "best_summary",
    "compare",
    "comparison_table",
    "coverage",
    "flag_histogram",
    "pairwise_scores",
    "persistence",
    "prevalence",
    "report_filter",
    "summarize",
    "verdict",
]
