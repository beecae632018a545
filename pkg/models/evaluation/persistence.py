"""Fingerprint persistence across chronological groups."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from models.clustering import Method, ResilientFingerprint

CSV_HEADER = ("key", "method", "groups", "redundancy_by_group")

# list fields inside one CSV cell
CELL_SEPARATOR = ";"


@dataclass(frozen=True)
class PersistenceRow:
    key: str
    method: Method
    groups: Tuple[str, ...]
    redundancy_by_group: Tuple[int, ...]

    def as_row(self) -> Tuple[str, ...]:
        return (
            self.key,
            self.method.value,
            CELL_SEPARATOR.join(self.groups),
            CELL_SEPARATOR.join(str(value) for value in self.redundancy_by_group),
        )


def persistence(
    per_group: Sequence[Tuple[str, Sequence[ResilientFingerprint]]],
) -> List[PersistenceRow]:
    """Where each fingerprint key reappears, given (group id, fingerprints) in group order.

    Rows sort by number of groups descending, then key, then method.
    """

    seen: Dict[Tuple[str, Method], List[Tuple[str, int]]] = defaultdict(list)
    for group_id, fingerprints in per_group:
        for fp in fingerprints:
            seen[(fp.key, fp.method)].append((group_id, fp.redundancy))

    rows = [
        PersistenceRow(
            key=key,
            method=method,
            groups=tuple(group for group, _ in hits),
            redundancy_by_group=tuple(redundancy for _, redundancy in hits),
        )
        for (key, method), hits in seen.items()
    ]
    rows.sort(key=lambda row: (-len(row.groups), row.key, row.method.value))
    return rows
