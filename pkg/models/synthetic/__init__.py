"""Synthetic corpora with planted clusters, used as test oracles and demo data."""

from .generator import (
    GroundTruth,
    PlantedCluster,
    SyntheticGenerator,
    generate,
    load_truth,
    truth_path,
    write_truth,
)
from .spec import SyntheticSpec, load_spec, spec_from_mapping

__all__ = [
    "GroundTruth",
    "PlantedCluster",
    "SyntheticGenerator",
    "SyntheticSpec",
    "generate",
    "load_spec",
    "load_truth",
    "spec_from_mapping",
    "truth_path",
    "write_truth",
]
