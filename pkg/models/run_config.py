"""
Run Config - per-invocation settings merged from a JSON file and CLI flags

Precedence, highest first:
    - CLI flags
    - JSON config file (--config), same key names as RunConfig plus the
      EvaluationConfig fields
    - .env / environment (through config.py)
    - built-in defaults
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, fields
from typing import Any, Dict, Mapping, Optional, Tuple

from config import DEFAULT_ENCODING, DEFAULT_GROUP_ID, MIN_REPORT_SIZE, OUTPUT_DIR, REPORT_FORMAT
from models.errors import ConfigError
from models.evaluation_config import EvaluationConfig
from utils.logger import logger
from utils.validators import validate_output_dir

REPORT_FORMATS = ("csv", "json")
EVALUATION_KEYS = frozenset(f.name for f in fields(EvaluationConfig))


@dataclass(frozen=True)
class RunConfig:
    inputs: Tuple[str, ...] = ()
    group_ids: Tuple[str, ...] = ()
    out: Optional[str] = None
    output_dir: str = OUTPUT_DIR
    report_format: str = REPORT_FORMAT
    min_report_size: int = MIN_REPORT_SIZE
    evaluation: EvaluationConfig = field(default_factory=EvaluationConfig)

    def __post_init__(self) -> None:
        if self.report_format not in REPORT_FORMATS:
            raise ConfigError(f"report format must be one of {REPORT_FORMATS}, got {self.report_format!r}")
        if self.min_report_size < 1:
            raise ConfigError(f"min_report_size must be >= 1, got {self.min_report_size}")
        if self.group_ids and len(self.group_ids) != len(self.inputs):
            raise ConfigError("give one --group per --input")

    def resolved_group_ids(self) -> Tuple[str, ...]:
        """Explicit ids, else G1 for a single input or G1..Gn for several."""
        if self.group_ids:
            return self.group_ids
        if len(self.inputs) == 1:
            return (DEFAULT_GROUP_ID,)
        return tuple(f"G{n}" for n in range(1, len(self.inputs) + 1))

    def output_path(self, command: str, extension: str) -> Optional[str]:
        """Where a report goes: --out, else <output_dir>/<command>.<ext>, else stdout (None)."""
        if self.out:
            return self.out
        if not self.output_dir:
            return None
        valid, error = validate_output_dir(self.output_dir)
        if not valid:
            raise OSError(error)
        return os.path.join(self.output_dir, f"{command}.{extension}")


def load_run_config(path: Optional[str]) -> Dict[str, Any]:
    """Raw values from a JSON config file; {} when no path is given."""

    if not path:
        return {}
    with open(path, "r", encoding=DEFAULT_ENCODING) as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as e:
            raise ConfigError(f"config file {path} is not valid JSON: {e.msg}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")

    known = {f.name for f in fields(RunConfig)} - {"evaluation"} | EVALUATION_KEYS
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    logger.info(f"Loaded {len(data)} settings from {path}")
    return data


def build_run_config(file_values: Mapping[str, Any], cli_values: Mapping[str, Any]) -> RunConfig:
    """Merge file values with CLI values; CLI wins wherever it is not None."""

    merged: Dict[str, Any] = dict(file_values)
    merged.update({key: value for key, value in cli_values.items() if value is not None})

    evaluation = EvaluationConfig().with_overrides(
        {key: merged.pop(key) for key in list(merged) if key in EVALUATION_KEYS}
    )
    for key in ("inputs", "group_ids"):
        if key in merged:
            value = merged[key]
            merged[key] = (value,) if isinstance(value, str) else tuple(value)
    try:
        return RunConfig(evaluation=evaluation, **merged)
    except TypeError as e:
        raise ConfigError(f"invalid run settings: {e}") from e
