"""JSON-lines report: one sorted-key object per line."""

import json
from typing import Any, Iterable, Iterator, Mapping

from views.base_report import BaseReport


def dumps_record(record: Mapping[str, Any]) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


class JsonLinesReport(BaseReport):
    extension = "jsonl"

    def __init__(self, report_name: str, records: Iterable[Mapping[str, Any]]):
        super().__init__(report_name)
        self.records = list(records)

    def render_lines(self) -> Iterator[str]:
        for record in self.records:
            yield dumps_record(record)
