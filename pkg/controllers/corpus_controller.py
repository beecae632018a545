"""
Corpus Controller - `generate`: synthetic spec -> feed file + ground truth sidecar
"""

from dataclasses import replace
from typing import Optional

from controllers.base_controller import BaseController, ExitCode
from models.errors import UsageError
from models.feed import write_feed
from models.synthetic import generate, load_spec, truth_path, write_truth
from utils.logger import logger


class CorpusController(BaseController):
    """Coordinates synthetic corpus generation."""

    def generate(
        self,
        spec_path: Optional[str],
        seed: Optional[int] = None,
        mutate_imports: Optional[float] = None,
    ) -> ExitCode:
        def action() -> None:
            if not spec_path:
                raise UsageError("generate needs --spec")
            if not self.run_config.out:
                raise UsageError("generate needs --out")

            spec = load_spec(spec_path)
            overrides = {"seed": seed, "mutate_imports_fraction": mutate_imports}
            applied = {key: value for key, value in overrides.items() if value is not None}
            if applied:
                logger.info(f"Spec overrides: {applied}")
                # replace() re-runs validation
                spec = replace(spec, **applied)

            dataset, truth = generate(spec)
            write_feed(dataset.reports, self.run_config.out)
            write_truth(truth, truth_path(self.run_config.out))

        return self.execute("generate", action)
