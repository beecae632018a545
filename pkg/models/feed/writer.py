"""Feed writer - emits reports in the canonical JSON-lines schema."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable

from config import DEFAULT_ENCODING
from models.feed.codec import encode_report
from models.report import FileReport
from utils.logger import logger


def dumps_line(report: FileReport) -> str:
    """Byte-stable single-line encoding (sorted keys, compact separators)."""
    return json.dumps(encode_report(report), sort_keys=True, separators=(",", ":"))


def write_feed(reports: Iterable[FileReport], path: str) -> int:
    """Write reports one per line; returns the number of lines written."""

    out_path = Path(path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with open(out_path, "w", encoding=DEFAULT_ENCODING, newline="\n") as handle:
        for report in reports:
            handle.write(dumps_line(report))
            handle.write("\n")
            count += 1
    logger.info(f"Wrote {count} reports to {out_path}")
    return count
