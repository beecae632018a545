"""
Dataset Controller - `ingest-check` and `prevalence`
"""

from controllers.base_controller import BaseController, ExitCode
from models.evaluation import prevalence
from models.feed import feed_summary
from views.reports import prevalence_report, summary_report


class DatasetController(BaseController):
    """Coordinates feed inspection commands."""

    def ingest_check(self) -> ExitCode:
        def action() -> None:
            summaries = [
                feed_summary(dataset, self.evaluation)
                for dataset in self.load_groups()
            ]
            report = summary_report(summaries)
            report.write(self.output_path("ingest-check", report.extension))

        return self.execute("ingest-check", action)

    def prevalence(self) -> ExitCode:
        def action() -> None:
            dataset = self.load_single()
            rows = prevalence(dataset, self.evaluation.rounding)
            report = prevalence_report(rows, self.run_config.report_format)
            report.write(self.output_path("prevalence", report.extension))

        return self.execute("prevalence", action)
