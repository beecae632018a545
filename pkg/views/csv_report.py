"""CSV report: fixed header, ',' separator, one row per record."""

import csv
import io
from typing import Iterable, Iterator, Sequence

from views.base_report import BaseReport


class CsvReport(BaseReport):
    extension = "csv"

    def __init__(self, report_name: str, header: Sequence[str], rows: Iterable[Sequence[str]]):
        super().__init__(report_name)
        self.header = tuple(header)
        self.rows = [tuple(row) for row in rows]

    def render_lines(self) -> Iterator[str]:
        for row in [self.header, *self.rows]:
            buffer = io.StringIO()
            csv.writer(buffer, lineterminator="\n").writerow(row)
            yield buffer.getvalue().rstrip("\n")
