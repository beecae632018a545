"""Feed reader - JSON-lines ingestion into chronological-group datasets.

Each accepted line becomes a FileReport tagged with the dataset's group
id. Broken lines never abort a run: they are logged, counted and
skipped, as feed batches in the wild carry noise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from config import DEFAULT_ENCODING, FEED_EXTENSIONS, SHOW_PROGRESS
from models.feed.codec import decode_report
from models.feed.validation import validate
from models.report import FileReport, FileType
from utils.file_scanner import FileScanner
from utils.logger import logger


@dataclass(frozen=True)
class IngestStats:
    """Line accounting: lines_read == accepted + skipped_malformed + skipped_non_pe."""

    lines_read: int = 0
    accepted: int = 0
    skipped_malformed: int = 0
    skipped_non_pe: int = 0
    missing_imports: int = 0
    missing_tlsh: int = 0

    def as_dict(self) -> Dict[str, int]:
        return {
            "lines_read": self.lines_read,
            "accepted": self.accepted,
            "skipped_malformed": self.skipped_malformed,
            "skipped_non_pe": self.skipped_non_pe,
            "missing_imports": self.missing_imports,
            "missing_tlsh": self.missing_tlsh,
        }


@dataclass(frozen=True)
class Dataset:
    """Accepted reports of one chronological group, in line order."""

    reports: Tuple[FileReport, ...]
    group_id: str
    ingest_stats: IngestStats = IngestStats()

    def __len__(self) -> int:
        return len(self.reports)

    @property
    def is_empty(self) -> bool:
        return not self.reports

    @cached_property
    def reports_by_id(self) -> Dict[str, FileReport]:
        return {report.file_id: report for report in self.reports}


class FeedReader:
    """Accumulates reports from one or more feed batch files of a group."""

    def __init__(
        self,
        group_id: str,
        filter_pe: bool = True,
        show_progress: bool = SHOW_PROGRESS,
    ) -> None:
        self.group_id = group_id
        self.filter_pe = filter_pe
        self.show_progress = show_progress
        self.reports: List[FileReport] = []
        self._seen_ids: set = set()
        self._counts: Dict[str, int] = dict(IngestStats().as_dict())

    def read(self, path: str) -> "FeedReader":
        """Read every line of one batch file. Raises OSError if unreadable."""

        file_path = Path(path)
        logger.info(f"Ingesting {file_path} into group {self.group_id}")
        accepted_before = self._counts["accepted"]

        with open(file_path, "rb") as handle:
            lines = tqdm(
                handle,
                desc=f"Ingest {file_path.name}",
                unit="line",
                disable=None if self.show_progress else True,
            )
            for line_number, line in enumerate(lines, 1):
                if not line.strip():
                    continue
                self._read_line(line, file_path, line_number)

        logger.info(
            f"{file_path.name}: accepted {self._counts['accepted'] - accepted_before} reports"
        )
        return self

    def _read_line(self, raw: bytes, file_path: Path, line_number: int) -> None:
        self._counts["lines_read"] += 1

        try:
            line = raw.decode(DEFAULT_ENCODING)
        except UnicodeDecodeError as e:
            self._skip_malformed(file_path, line_number, f"not {DEFAULT_ENCODING}: {e.reason}")
            return

        try:
            obj = json.loads(line)
        except json.JSONDecodeError as e:
            self._skip_malformed(file_path, line_number, f"invalid JSON: {e.msg}")
            return

        if not isinstance(obj, dict):
            self._skip_malformed(file_path, line_number, "line is not a JSON object")
            return

        if self.filter_pe and not FileType.from_text(obj.get("type", "")).is_pe:
            self._counts["skipped_non_pe"] += 1
            return

        try:
            report = decode_report(obj, self.group_id)
        except (KeyError, TypeError, ValueError) as e:
            self._skip_malformed(file_path, line_number, f"bad field: {e!r}")
            return

        violations = validate(report)
        if violations:
            self._skip_malformed(file_path, line_number, "; ".join(violations))
            return

        if report.file_id in self._seen_ids:
            self._skip_malformed(file_path, line_number, f"duplicate id {report.file_id}")
            return

        self._seen_ids.add(report.file_id)
        self.reports.append(report)
        self._counts["accepted"] += 1
        if not report.has_imports:
            self._counts["missing_imports"] += 1
        if not report.has_tlsh:
            self._counts["missing_tlsh"] += 1

    def _skip_malformed(self, file_path: Path, line_number: int, reason: str) -> None:
        self._counts["skipped_malformed"] += 1
        logger.debug(f"{file_path.name}:{line_number} skipped: {reason}")

    def dataset(self) -> Dataset:
        stats = IngestStats(**self._counts)
        if stats.skipped_malformed:
            logger.warning(
                f"Group {self.group_id}: skipped {stats.skipped_malformed} malformed lines"
            )
        if not self.reports:
            logger.warning(f"Group {self.group_id}: no reports accepted (empty dataset)")
        return Dataset(reports=tuple(self.reports), group_id=self.group_id, ingest_stats=stats)


def ingest(
    path: str,
    group_id: str,
    filter_pe: bool = True,
    show_progress: bool = SHOW_PROGRESS,
) -> Dataset:
    """Ingest one feed file; a directory is read as a sorted set of batch files."""

    reader = FeedReader(group_id, filter_pe=filter_pe, show_progress=show_progress)
    for batch in feed_batches(path):
        reader.read(str(batch))
    return reader.dataset()


def feed_batches(path: str) -> List[Path]:
    """A file is its own batch; a directory yields its feed files in name order."""

    candidate = Path(path)
    if candidate.is_dir():
        batches = FileScanner.scan(str(candidate), FEED_EXTENSIONS, recursive=True)
        logger.info(f"Found {len(batches)} feed batches under {candidate}")
        return batches
    return [candidate]


def ingest_groups(
    paths: Sequence[str],
    group_ids: Sequence[str],
    filter_pe: bool = True,
    show_progress: Optional[bool] = None,
) -> List[Dataset]:
    """One dataset per (path, group id) pair, in argument order."""

    if len(paths) != len(group_ids):
        raise ValueError("every input needs exactly one group id")
    progress = SHOW_PROGRESS if show_progress is None else show_progress
    return [
        ingest(path, group_id, filter_pe=filter_pe, show_progress=progress)
        for path, group_id in zip(paths, group_ids)
    ]
