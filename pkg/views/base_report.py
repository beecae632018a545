"""
Base Report - Abstract base class for all report emitters

Convention:
    Every report inherits from BaseReport and implements:
    - render_lines() - yield the report's lines without line endings
    - extension      - file extension used when writing to a directory

Reports are byte-stable: lines are joined with '\\n' and written as
UTF-8, whatever the platform.
"""

import sys
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Iterator, Optional

from config import DEFAULT_ENCODING
from utils.logger import logger


class BaseReport(ABC):
    """Abstract base class for report emitters."""

    extension = "txt"

    def __init__(self, report_name: str):
        self.report_name = report_name

    @abstractmethod
    def render_lines(self) -> Iterator[str]:
        """Yield report lines (no trailing newline)."""

    def render(self) -> str:
        return "".join(f"{line}\n" for line in self.render_lines())

    def write(self, path: Optional[str] = None) -> int:
        """Write to path, or to stdout when path is None. Returns lines written."""

        text = self.render()
        lines = text.count("\n")
        if path is None:
            sys.stdout.write(text)
            sys.stdout.flush()
        else:
            out_path = Path(path)
            out_path.parent.mkdir(parents=True, exist_ok=True)
            with open(out_path, "w", encoding=DEFAULT_ENCODING, newline="\n") as handle:
                handle.write(text)
            logger.info(f"{self.report_name}: wrote {lines} lines to {out_path}")
        return lines
