"""Record-level invariant checks.

validate() never raises: it returns every violated invariant as text so
the reader can log them and count the line as malformed.
"""

from __future__ import annotations

import math
from typing import List

from config import VENDOR_COUNT_MAX
from models.report import SECTION_FLAGS, FileReport, SectionRecord
from utils.validators import HEX_PATTERN, validate_hex, validate_range

SHA256_HEX_LEN = 64
MD5_HEX_LEN = 32
ENTROPY_MAX = 8.0
_KNOWN_FLAGS = frozenset(SECTION_FLAGS)


def validate(report: FileReport) -> List[str]:
    """Return the list of violations; an empty list means the report is valid."""

    violations: List[str] = []

    def check(result) -> None:
        valid, message = result
        if not valid:
            violations.append(message)

    if not report.file_id:
        violations.append("file id is empty")
    check(validate_hex(report.sha256, SHA256_HEX_LEN, "sha256"))
    check(validate_hex(report.md5, MD5_HEX_LEN, "md5"))
    check(validate_range(report.first_seen, 0, None, "first_seen"))
    check(validate_range(report.size_bytes, 0, None, "size"))
    if not 0 <= report.vendor_malicious_count <= VENDOR_COUNT_MAX:
        violations.append(
            f"vendor count out of range [0, {VENDOR_COUNT_MAX}]: {report.vendor_malicious_count}"
        )

    for index, library in enumerate(report.imports):
        if not library.library_name:
            violations.append(f"import {index}: library name is empty")

    for index, section in enumerate(report.sections):
        if not _section_ok(section):
            violations.extend(_section_violations(index, section))

    for index, resource in enumerate(report.resources):
        label = f"resource {index}"
        if not HEX_PATTERN.match(resource.content_hash):
            violations.append(f"{label} hash must be lowercase hex")
        check(validate_range(resource.entropy, 0.0, ENTROPY_MAX, f"{label} entropy"))
        check(validate_range(resource.chi2, 0.0, None, f"{label} chi2"))

    return violations


def _section_ok(section: SectionRecord) -> bool:
    """Cheap all-clear for the common case; NaN and infinity fail the comparisons."""
    return (
        len(section.content_hash) == MD5_HEX_LEN
        and HEX_PATTERN.match(section.content_hash) is not None
        and 0.0 <= section.entropy <= ENTROPY_MAX
        and 0.0 <= section.chi2 < math.inf
        and section.raw_size >= 0
        and section.virtual_address >= 0
        and section.virtual_size >= 0
        and section.flags <= _KNOWN_FLAGS
    )


def _section_violations(index: int, section: SectionRecord) -> List[str]:
    label = f"section {index}"
    results = [
        validate_hex(section.content_hash, MD5_HEX_LEN, f"{label} content hash"),
        validate_range(section.entropy, 0.0, ENTROPY_MAX, f"{label} entropy"),
        validate_range(section.chi2, 0.0, None, f"{label} chi2"),
        validate_range(section.raw_size, 0, None, f"{label} raw_size"),
        validate_range(section.virtual_address, 0, None, f"{label} virtual_address"),
        validate_range(section.virtual_size, 0, None, f"{label} virtual_size"),
    ]
    violations = [message for valid, message in results if not valid]
    unknown = sorted(section.flags - _KNOWN_FLAGS)
    if unknown:
        violations.append(f"{label} flags contain unknown characters: {''.join(unknown)}")
    return violations
