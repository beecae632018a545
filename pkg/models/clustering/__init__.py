"""Cluster engine - resilient fingerprints from imphash groups or shared sections.

Submodules:
- stats.py       → SectionGroupStats, FileStats, group_sections()
- fingerprint.py → ResilientFingerprint, Method, QualFlag
- qualify.py     → Qualification, qualify_cluster(), select()
- engine.py      → top_down(), bottom_up(), variant_profile()
"""

from .engine import VariantProfile, bottom_up, build, top_down, variant_profile
from .fingerprint import Method, QualFlag, ResilientFingerprint
from .qualify import BEST_QUALIFICATION, Qualification, check_method, qualify_cluster, select
from .stats import FileStats, SectionGroupStats, file_stats, group_sections

__all__ = [
    "BEST_QUALIFICATION",
    "FileStats",
    "Method",
    "QualFlag",
    "Qualification",
    "ResilientFingerprint",
    "SectionGroupStats",
    "VariantProfile",
    "bottom_up",
    "build",
    "check_method",
    "file_stats",
    "group_sections",
    "qualify_cluster",
    "select",
    "top_down",
    "variant_profile",
]
