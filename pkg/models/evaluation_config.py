"""Evaluation configuration for clustering, taxonomy and scoring.

Defaults come from config.py (and therefore from .env); explicit
overrides are validated here so a bad CLI flag fails before any work
starts.
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Mapping

from config import (
    CAMOUFLAGE_ENTROPY_EPS,
    CAMOUFLAGE_MAX_RAW,
    ENTROPY_MALICIOUS,
    MIN_CLUSTER_SIZE,
    PERCENT_ROUNDING,
    TOP_SECTIONS,
    VENDOR_COUNT_MAX,
    VENDOR_THRESHOLD,
)
from models.errors import ConfigError
from utils.logger import logger
from utils.rounding import ROUNDING_MODES


@dataclass(frozen=True)
class EvaluationConfig:
    """Thresholds shared by the taxonomy, the cluster engine and scoring."""

    vendor_threshold: int = VENDOR_THRESHOLD
    min_cluster_size: int = MIN_CLUSTER_SIZE
    top_sections: int = TOP_SECTIONS
    entropy_malicious: float = ENTROPY_MALICIOUS
    camouflage_max_raw: int = CAMOUFLAGE_MAX_RAW
    camouflage_entropy_eps: float = CAMOUFLAGE_ENTROPY_EPS
    rounding: str = PERCENT_ROUNDING

    def __post_init__(self) -> None:
        self.validate()

    # ------------------------------------------------------------------
    # Validation helpers
    # ------------------------------------------------------------------

    def validate(self) -> None:
        """Raise ConfigError on the first invalid field."""

        if not 1 <= self.vendor_threshold <= VENDOR_COUNT_MAX:
            raise ConfigError(
                f"vendor_threshold must be in [1, {VENDOR_COUNT_MAX}], got {self.vendor_threshold}"
            )
        if self.min_cluster_size < 1:
            raise ConfigError(f"min_cluster_size must be >= 1, got {self.min_cluster_size}")
        if self.top_sections < 1:
            raise ConfigError(f"top_sections must be >= 1, got {self.top_sections}")
        if not 0.0 <= self.entropy_malicious <= 8.0:
            raise ConfigError(f"entropy_malicious must be in [0, 8], got {self.entropy_malicious}")
        if self.camouflage_max_raw < 0:
            raise ConfigError(f"camouflage_max_raw must be >= 0, got {self.camouflage_max_raw}")
        if self.camouflage_entropy_eps < 0:
            raise ConfigError(
                f"camouflage_entropy_eps must be >= 0, got {self.camouflage_entropy_eps}"
            )
        if self.rounding not in ROUNDING_MODES:
            raise ConfigError(
                f"rounding must be one of {sorted(ROUNDING_MODES)}, got {self.rounding!r}"
            )

    # ------------------------------------------------------------------
    # Overrides
    # ------------------------------------------------------------------

    def with_overrides(self, overrides: Mapping[str, Any]) -> "EvaluationConfig":
        """Return a copy with the non-None overrides applied."""

        known = {f.name for f in fields(self)}
        unknown = sorted(set(overrides) - known)
        if unknown:
            raise ConfigError(f"Unknown evaluation settings: {', '.join(unknown)}")

        applied: Dict[str, Any] = {k: v for k, v in overrides.items() if v is not None}
        if applied:
            logger.debug(f"Evaluation overrides: {applied}")
        try:
            return replace(self, **applied)
        except TypeError as exc:
            raise ConfigError(f"Invalid evaluation override: {exc}") from exc
