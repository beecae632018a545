"""Canonical fingerprint keys and exact-match baselines.

imphash here is the strict, order-preserving variant: every
``library.function`` entry in report order, library names lowercased,
function names kept as-is, joined with ';' and hashed with SHA-256.
Two files share an imphash only when their whole import table matches.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Sequence

from models.errors import EmptyDatasetError, NoImportsError
from models.feed.reader import Dataset
from models.report import FileReport, ImportLibrary
from utils.rounding import percent

IMPORT_ENTRY_SEPARATOR = ";"


def display_id(digest: str) -> str:
    """Short id: first two and last two characters of a digest."""
    return digest[:2] + digest[-2:]


@dataclass(frozen=True)
class ImpHash:
    digest: str


@dataclass(frozen=True)
class SecKey:
    """Section content hash used as a clustering key."""

    digest: str

    @property
    def display_id(self) -> str:
        return display_id(self.digest)


def canonical_imports(imports: Sequence[ImportLibrary]) -> str:
    entries = [
        f"{library.library_name.lower()}.{function}"
        for library in imports
        for function in library.functions
    ]
    if not entries:
        raise NoImportsError("import list has no entries")
    return IMPORT_ENTRY_SEPARATOR.join(entries)


def imphash(imports: Sequence[ImportLibrary]) -> ImpHash:
    """Digest of the full ordered import list. Raises NoImportsError when empty."""
    canonical = canonical_imports(imports)
    return ImpHash(hashlib.sha256(canonical.encode("utf-8")).hexdigest())


def report_imphash(report: FileReport) -> Optional[str]:
    """imphash digest of a report, or None when it has no imports."""
    try:
        return imphash(report.imports).digest
    except NoImportsError:
        return None


def redundancy_exact(keys: Iterable[str]) -> int:
    """N - U: how many keys duplicate an earlier one."""
    total = 0
    distinct = set()
    for key in keys:
        total += 1
        distinct.add(key)
    return total - len(distinct)


class KeySelector(str, Enum):
    SHA256 = "SHA256"
    TLSH = "TLSH"
    IMPHASH = "IMPHASH"


def selector_keys(dataset: Dataset, selector: KeySelector) -> List[str]:
    """Selected key of every report that carries one."""

    if selector is KeySelector.SHA256:
        return [report.sha256 for report in dataset.reports]
    if selector is KeySelector.TLSH:
        return [report.tlsh for report in dataset.reports if report.tlsh]
    keys = (report_imphash(report) for report in dataset.reports)
    return [key for key in keys if key is not None]


@dataclass(frozen=True)
class BaselineRow:
    selector: KeySelector
    files_identified: int
    accuracy_pct: float


def baseline_row(dataset: Dataset, selector: KeySelector, rounding: str = "half_up") -> BaselineRow:
    """Exact-hash baseline: duplicates over the full group size.

    Records missing the selected key are left out of the numerator but
    kept in the denominator.
    """

    if dataset.is_empty:
        raise EmptyDatasetError(f"group {dataset.group_id} has no reports")
    identified = redundancy_exact(selector_keys(dataset, selector))
    return BaselineRow(
        selector=selector,
        files_identified=identified,
        accuracy_pct=percent(identified, len(dataset), rounding),
    )
