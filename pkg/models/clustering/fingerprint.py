"""Resilient fingerprint record shared by the engine, qualifiers and scoring."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Tuple

from models.clustering.stats import FileStats, SectionGroupStats
from models.fingerprint_keys import display_id


class Method(str, Enum):
    TOP_DOWN = "TopDown"
    BOTTOM_UP = "BottomUp"

    @classmethod
    def from_text(cls, text: str) -> "Method":
        """Accept 'top-down', 'TopDown', 'bottom_up' and similar spellings."""
        compact = str(text).replace("-", "").replace("_", "").lower()
        for member in cls:
            if member.value.lower() == compact:
                return member
        raise ValueError(f"unknown method: {text}")


class QualFlag(str, Enum):
    RS = "RS"
    CS = "CS"
    MS = "MS"


@dataclass(frozen=True)
class ResilientFingerprint:
    """A cluster of files sharing an imphash (TopDown) or a section (BottomUp).

    file_ids is kept sorted and duplicate-free.
    """

    method: Method
    key: str
    file_ids: Tuple[str, ...]
    file_stats: FileStats
    section_profiles: Tuple[SectionGroupStats, ...] = ()
    qualifications: FrozenSet[QualFlag] = frozenset()

    @property
    def redundancy(self) -> int:
        return len(self.file_ids)

    @property
    def display_id(self) -> str:
        return display_id(self.key)

    @property
    def qualification_text(self) -> str:
        """Flags in RS, CS, MS order joined with '+'."""
        return "+".join(flag.value for flag in QualFlag if flag in self.qualifications)

    def as_dict(self) -> Dict[str, object]:
        return {
            "method": self.method.value,
            "key": self.key,
            "display_id": self.display_id,
            "qualifications": [flag.value for flag in QualFlag if flag in self.qualifications],
            "redundancy": self.redundancy,
            "file_ids": list(self.file_ids),
            "file_stats": self.file_stats.as_dict(),
            "section_profiles": [profile.as_dict() for profile in self.section_profiles],
        }
