"""Core feed record types shared by every model.

A FileReport is one line of a scanning feed: file-level hashes, the
vendor flag count, the ordered import table, per-section metadata and
resources. All types are frozen so datasets can be shared freely
between pipeline stages.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Optional, Tuple


class FileType(str, Enum):
    """Executable type as reported by the feed."""

    WIN32_EXE = "Win32EXE"
    WIN32_DLL = "Win32DLL"
    WIN64_EXE = "Win64EXE"
    WIN64_DLL = "Win64DLL"
    OTHER = "Other"

    @classmethod
    def from_text(cls, text: str) -> "FileType":
        """Map feed text ("Win32 EXE", "win64dll", "PDF") onto the enum."""
        compact = str(text).replace(" ", "").lower()
        for member in cls:
            if member.value.lower() == compact:
                return member
        return cls.OTHER

    @property
    def is_pe(self) -> bool:
        return self is not FileType.OTHER


class SectionLabel(str, Enum):
    """Invariant-section taxonomy."""

    MALICIOUS = "Malicious"
    STANDARD = "Standard"
    CAMOUFLAGE = "Camouflage"


SECTION_FLAGS = "rwx"


@dataclass(frozen=True, slots=True)
class ImportLibrary:
    library_name: str
    functions: Tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class SectionRecord:
    content_hash: str
    name: str
    entropy: float
    chi2: float
    raw_size: int
    virtual_address: int
    virtual_size: int
    flags: FrozenSet[str] = frozenset()

    @property
    def flags_text(self) -> str:
        """Flags in canonical 'rwx' order."""
        return "".join(flag for flag in SECTION_FLAGS if flag in self.flags)


@dataclass(frozen=True, slots=True)
class ResourceRecord:
    content_hash: str
    resource_type: str
    entropy: float
    chi2: float


@dataclass(frozen=True, slots=True)
class FileReport:
    file_id: str
    first_seen: int
    file_type: FileType
    sha256: str
    md5: str
    tlsh: Optional[str]
    size_bytes: int
    vendor_malicious_count: int
    imports: Tuple[ImportLibrary, ...]
    sections: Tuple[SectionRecord, ...]
    resources: Tuple[ResourceRecord, ...]
    group_id: str

    @property
    def has_imports(self) -> bool:
        return any(library.functions for library in self.imports)

    @property
    def has_tlsh(self) -> bool:
        return bool(self.tlsh)
