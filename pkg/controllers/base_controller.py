"""
Base Controller - shared plumbing for command controllers

Responsibilities:
    - Hold the merged RunConfig
    - Load datasets for the configured inputs
    - Map domain errors onto the stable exit codes

Controllers are THIN - they coordinate models and views and contain no
clustering or scoring logic.
"""

from enum import IntEnum
from typing import Callable, List

from models.errors import ConfigError, EmptyDatasetError, SpecError, UsageError
from models.feed import Dataset, ingest, ingest_groups
from models.run_config import RunConfig
from utils.logger import logger
from utils.validators import validate_input_path


class ExitCode(IntEnum):
    OK = 0
    USAGE = 2
    EMPTY_INPUT = 3
    IO_ERROR = 4


class BaseController:
    """Common base for the command controllers."""

    def __init__(self, run_config: RunConfig):
        self.run_config = run_config
        self.evaluation = run_config.evaluation

    def execute(self, command: str, action: Callable[[], None]) -> ExitCode:
        """Run one command and translate its failure into an exit code."""

        logger.info(f"Running {command}")
        try:
            action()
        except SpecError as e:
            logger.error(f"spec error: {e}")
            return ExitCode.USAGE
        except (UsageError, ConfigError) as e:
            logger.error(f"usage error: {e}")
            return ExitCode.USAGE
        except EmptyDatasetError as e:
            logger.error(f"empty input: {e}")
            return ExitCode.EMPTY_INPUT
        except OSError as e:
            logger.error(f"I/O error: {e}")
            return ExitCode.IO_ERROR
        logger.info(f"{command} finished")
        return ExitCode.OK

    def _check_inputs(self) -> None:
        if not self.run_config.inputs:
            raise UsageError("at least one --input is required")
        for path in self.run_config.inputs:
            valid, error = validate_input_path(path)
            if not valid:
                raise OSError(error)

    def load_single(self) -> Dataset:
        """The one input of a single-group command; empty datasets raise."""

        self._check_inputs()
        if len(self.run_config.inputs) != 1:
            raise UsageError("this command takes exactly one --input (use a directory for batches)")
        dataset = ingest(self.run_config.inputs[0], self.run_config.resolved_group_ids()[0])
        if dataset.is_empty:
            raise EmptyDatasetError(f"no usable reports in {self.run_config.inputs[0]}")
        return dataset

    def load_groups(self) -> List[Dataset]:
        self._check_inputs()
        return ingest_groups(self.run_config.inputs, self.run_config.resolved_group_ids())

    def output_path(self, command: str, extension: str):
        return self.run_config.output_path(command, extension)
