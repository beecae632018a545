"""Synthetic corpus specification and its JSON loader."""

from __future__ import annotations

import json
from dataclasses import dataclass, fields
from typing import Any, Dict, Mapping, Tuple

from config import DEFAULT_ENCODING, DEFAULT_GROUP_ID, VENDOR_COUNT_MAX
from models.errors import SpecError

IntRange = Tuple[int, int]

# Most planted distinct sections a cluster file carries besides camouflage copies.
MAX_PLANTED_DISTINCT = 4

_RANGE_FIELDS = (
    "files_per_cluster",
    "sections_per_file",
    "camouflage_copies",
    "virtual_size_range",
    "virtual_address_range",
    "vendor_flags_malicious",
    "vendor_flags_benign",
)


@dataclass(frozen=True)
class SyntheticSpec:
    seed: int
    cluster_count: int = 20
    files_per_cluster: IntRange = (50, 50)
    noise_files: int = 500
    mutate_imports_fraction: float = 0.0
    sections_per_file: IntRange = (10, 50)
    camouflage_copies: IntRange = (12, 15)
    virtual_size_range: IntRange = (0, 3500)
    virtual_address_range: IntRange = (100_000, 1_600_000)
    vendor_flags_malicious: IntRange = (20, 40)
    vendor_flags_benign: IntRange = (0, 3)
    tlsh_shared_fraction: float = 0.0
    group_id: str = DEFAULT_GROUP_ID

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        if isinstance(self.seed, bool) or not isinstance(self.seed, int):
            raise SpecError(f"seed must be an integer, got {self.seed!r}")
        if self.cluster_count < 0 or self.noise_files < 0:
            raise SpecError("cluster_count and noise_files must be >= 0")

        for name in _RANGE_FIELDS:
            low, high = getattr(self, name)
            if low < 0 or low > high:
                raise SpecError(f"{name} must be a non-empty, non-negative range, got {low}..{high}")

        for name in ("mutate_imports_fraction", "tlsh_shared_fraction"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise SpecError(f"{name} must be in [0, 1], got {value}")

        if self.files_per_cluster[0] < 1:
            raise SpecError("files_per_cluster must start at 1 or more")
        if self.vendor_flags_malicious[1] > VENDOR_COUNT_MAX or self.vendor_flags_benign[1] > VENDOR_COUNT_MAX:
            raise SpecError(f"vendor flag ranges must stay within [0, {VENDOR_COUNT_MAX}]")
        if MAX_PLANTED_DISTINCT + self.camouflage_copies[1] > self.sections_per_file[1]:
            raise SpecError(
                "infeasible ranges: planted sections plus camouflage copies "
                f"({MAX_PLANTED_DISTINCT} + {self.camouflage_copies[1]}) exceed "
                f"sections_per_file max {self.sections_per_file[1]}"
            )
        if not self.group_id:
            raise SpecError("group_id must not be empty")

    def to_dict(self) -> Dict[str, Any]:
        return {
            f.name: list(value) if isinstance(value := getattr(self, f.name), tuple) else value
            for f in fields(self)
        }


def _as_range(name: str, value: Any) -> IntRange:
    if isinstance(value, int) and not isinstance(value, bool):
        return (value, value)
    if isinstance(value, (list, tuple)) and len(value) == 2 and all(
        isinstance(v, int) and not isinstance(v, bool) for v in value
    ):
        return (value[0], value[1])
    raise SpecError(f"{name} must be an integer or a [low, high] pair, got {value!r}")


def spec_from_mapping(data: Mapping[str, Any]) -> SyntheticSpec:
    """Build a spec from parsed JSON; raises SpecError on any problem."""

    if not isinstance(data, Mapping):
        raise SpecError("spec must be a JSON object")
    if "seed" not in data:
        raise SpecError("spec is missing the required 'seed' field")

    known = {f.name for f in fields(SyntheticSpec)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise SpecError(f"unknown spec fields: {', '.join(unknown)}")

    values = dict(data)
    for name in _RANGE_FIELDS:
        if name in values:
            values[name] = _as_range(name, values[name])
    try:
        return SyntheticSpec(**values)
    except TypeError as exc:
        raise SpecError(f"invalid spec: {exc}") from exc


def load_spec(path: str) -> SyntheticSpec:
    """Read a spec JSON file. OSError propagates for unreadable paths."""

    with open(path, "r", encoding=DEFAULT_ENCODING) as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise SpecError(f"spec is not valid JSON: {exc.msg}") from exc
    return spec_from_mapping(data)
