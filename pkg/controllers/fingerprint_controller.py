"""
Fingerprint Controller - `cluster`, `evaluate`, `compare` and `track`

Builds fingerprints with the chosen method, applies the qualification
filter and hands the results to the report views.
"""

from typing import Optional

from controllers.base_controller import BaseController, ExitCode
from models.clustering import (
    BEST_QUALIFICATION,
    Method,
    Qualification,
    build,
    check_method,
    select,
    variant_profile,
)
from models.errors import UsageError
from models.evaluation import compare, persistence, report_filter, summarize
from utils.logger import logger
from views.reports import cluster_report, comparison_report, evaluation_report, persistence_report


def resolve(method_text: str, qualification_text: Optional[str]):
    """Parse --method/--qualify and check they belong together."""

    try:
        method = Method.from_text(method_text)
    except ValueError as e:
        raise UsageError(str(e)) from e
    if qualification_text is None:
        return method, None
    qualification = Qualification.from_text(qualification_text)
    check_method(method, qualification)
    return method, qualification


class FingerprintController(BaseController):
    """Coordinates clustering and scoring commands."""

    def cluster(self, method_text: str, qualification_text: Optional[str] = None) -> ExitCode:
        def action() -> None:
            method, qualification = resolve(method_text, qualification_text)
            dataset = self.load_single()
            fingerprints = build(dataset, method, self.evaluation)
            if qualification is not None:
                fingerprints = select(fingerprints, qualification)
            kept = report_filter(fingerprints, self.run_config.min_report_size)
            if not kept:
                logger.warning(f"cluster: no {method.value} fingerprints to report")
            variants = {fp.key: variant_profile(fp, dataset) for fp in kept}
            report = cluster_report(kept, variants)
            report.write(self.output_path("cluster", report.extension))

        return self.execute("cluster", action)

    def evaluate(self, method_text: str, qualification_text: Optional[str] = None) -> ExitCode:
        def action() -> None:
            method, qualification = resolve(method_text, qualification_text)
            qualification = qualification or BEST_QUALIFICATION[method]
            dataset = self.load_single()
            selected = select(build(dataset, method, self.evaluation), qualification)
            if not selected:
                logger.warning(f"evaluate: {qualification.value} selected no fingerprints")
            summary = summarize(
                selected, qualification, self.evaluation.vendor_threshold, self.evaluation.rounding
            )
            report = evaluation_report(summary, self.run_config.report_format)
            report.write(self.output_path("evaluate", report.extension))

        return self.execute("evaluate", action)

    def compare(self) -> ExitCode:
        def action() -> None:
            rows = compare(self.load_single(), self.evaluation)
            report = comparison_report(rows, self.run_config.report_format)
            report.write(self.output_path("compare", report.extension))

        return self.execute("compare", action)

    def track(self, method_text: str, qualification_text: Optional[str] = None) -> ExitCode:
        def action() -> None:
            method, qualification = resolve(method_text, qualification_text)
            per_group = []
            for dataset in self.load_groups():
                fingerprints = build(dataset, method, self.evaluation)
                if qualification is not None:
                    fingerprints = select(fingerprints, qualification)
                per_group.append((dataset.group_id, fingerprints))
            report = persistence_report(persistence(per_group), self.run_config.report_format)
            report.write(self.output_path("track", report.extension))

        return self.execute("track", action)
