"""Qualification predicates over resilient fingerprints.

IL* qualifications apply to Top-Down (import list) fingerprints, the
plain RS/CS/MS family to Bottom-Up (section anchored) fingerprints.
"""

from __future__ import annotations

from enum import Enum
from typing import FrozenSet, Iterable, List, Sequence

from models.clustering.fingerprint import Method, QualFlag, ResilientFingerprint
from models.clustering.stats import SectionGroupStats
from models.errors import UsageError
from models.report import SectionLabel


class Qualification(str, Enum):
    ILRS = "ILRS"
    ILCS = "ILCS"
    ILMS = "ILMS"
    ILCSMS = "ILCSMS"
    IL_CS_OR_MS = "IL_CS_or_MS"
    RS = "RS"
    CS = "CS"
    MS = "MS"
    CS_OR_MS = "CS_or_MS"

    @classmethod
    def from_text(cls, text: str) -> "Qualification":
        """Accept 'IL_CS_or_MS', 'ILCS(or)MS', 'cs-or-ms' and similar spellings."""
        strip = str.maketrans("", "", "_-() ")
        compact = str(text).translate(strip).lower()
        for member in cls:
            if member.value.translate(strip).lower() == compact:
                return member
        raise UsageError(f"unknown qualification: {text}")

    @property
    def method(self) -> Method:
        return Method.TOP_DOWN if self.value.startswith("IL") else Method.BOTTOM_UP


BEST_QUALIFICATION = {
    Method.TOP_DOWN: Qualification.IL_CS_OR_MS,
    Method.BOTTOM_UP: Qualification.CS_OR_MS,
}


def check_method(method: Method, qualification: Qualification) -> None:
    if qualification.method is not method:
        raise UsageError(
            f"qualification {qualification.value} does not apply to {method.value} fingerprints"
        )


def qualify_cluster(section_groups: Iterable[SectionGroupStats]) -> FrozenSet[QualFlag]:
    """RS when some key spans two files; CS/MS when such a key has that label."""

    flags = set()
    for group in section_groups:
        if not group.is_redundant:
            continue
        flags.add(QualFlag.RS)
        if group.label is SectionLabel.CAMOUFLAGE:
            flags.add(QualFlag.CS)
        elif group.label is SectionLabel.MALICIOUS:
            flags.add(QualFlag.MS)
    return frozenset(flags)


def _has(fp: ResilientFingerprint, *flags: QualFlag) -> bool:
    return all(flag in fp.qualifications for flag in flags)


def select(
    fingerprints: Sequence[ResilientFingerprint], qualification: Qualification
) -> List[ResilientFingerprint]:
    """Fingerprints meeting a qualification, input order kept.

    CS_or_MS concatenates the CS-anchored list with the MS-anchored list.
    """

    for fp in fingerprints:
        check_method(fp.method, qualification)

    if qualification in (Qualification.ILRS, Qualification.RS):
        return [fp for fp in fingerprints if _has(fp, QualFlag.RS)]
    if qualification in (Qualification.ILCS, Qualification.CS):
        return [fp for fp in fingerprints if _has(fp, QualFlag.CS)]
    if qualification in (Qualification.ILMS, Qualification.MS):
        return [fp for fp in fingerprints if _has(fp, QualFlag.MS)]
    if qualification is Qualification.ILCSMS:
        return [fp for fp in fingerprints if _has(fp, QualFlag.CS, QualFlag.MS)]
    if qualification is Qualification.IL_CS_OR_MS:
        return [fp for fp in fingerprints if _has(fp, QualFlag.CS) or _has(fp, QualFlag.MS)]
    return [fp for fp in fingerprints if _has(fp, QualFlag.CS)] + [
        fp for fp in fingerprints if _has(fp, QualFlag.MS)
    ]
