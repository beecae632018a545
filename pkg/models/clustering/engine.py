"""Top-Down and Bottom-Up resilient fingerprint construction.

Top-Down groups importing files by imphash and profiles the sections
each group shares. Bottom-Up starts from section content hashes and
collects every file carrying one. Both sort with explicit tie-breaks so
two runs over one dataset give identical ordered output.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from models.clustering.fingerprint import Method, QualFlag, ResilientFingerprint
from models.clustering.qualify import qualify_cluster
from models.clustering.stats import file_stats, group_sections
from models.evaluation_config import EvaluationConfig
from models.feed.reader import Dataset
from models.fingerprint_keys import report_imphash
from models.report import FileReport, SectionLabel
from utils.logger import logger

_LABEL_FLAGS = {
    SectionLabel.CAMOUFLAGE: QualFlag.CS,
    SectionLabel.MALICIOUS: QualFlag.MS,
}


def imphash_groups(dataset: Dataset) -> Dict[str, List[FileReport]]:
    """Importing files partitioned by imphash, in input order within a group."""

    groups: Dict[str, List[FileReport]] = defaultdict(list)
    for report in dataset.reports:
        digest = report_imphash(report)
        if digest is not None:
            groups[digest].append(report)
    return groups


def top_down(dataset: Dataset, cfg: Optional[EvaluationConfig] = None) -> List[ResilientFingerprint]:
    cfg = cfg or EvaluationConfig()
    groups = imphash_groups(dataset)
    if not groups:
        logger.warning(f"Group {dataset.group_id}: no importing files, Top-Down is empty")
        return []

    ordered = sorted(groups.items(), key=lambda item: (-len(item[1]), item[0]))
    fingerprints = []
    for digest, members in ordered:
        if len(members) < cfg.min_cluster_size:
            continue
        sections = group_sections(members, cfg)
        fingerprints.append(
            ResilientFingerprint(
                method=Method.TOP_DOWN,
                key=digest,
                file_ids=tuple(sorted(report.file_id for report in members)),
                file_stats=file_stats(members),
                section_profiles=tuple(sections.ranked()[: cfg.top_sections]),
                qualifications=qualify_cluster(sections.stats.values()),
            )
        )

    logger.info(
        f"Top-Down {dataset.group_id}: {len(groups)} imphash groups, "
        f"{len(fingerprints)} fingerprints"
    )
    return fingerprints


def bottom_up(dataset: Dataset, cfg: Optional[EvaluationConfig] = None) -> List[ResilientFingerprint]:
    cfg = cfg or EvaluationConfig()
    sections = group_sections(dataset.reports, cfg)
    by_id = dataset.reports_by_id

    fingerprints = []
    for anchor in sections.ranked():
        member_ids = sections.members[anchor.sec_key]
        if len(member_ids) < cfg.min_cluster_size:
            continue
        flags = {QualFlag.RS}
        if anchor.label in _LABEL_FLAGS:
            flags.add(_LABEL_FLAGS[anchor.label])
        fingerprints.append(
            ResilientFingerprint(
                method=Method.BOTTOM_UP,
                key=anchor.sec_key,
                file_ids=member_ids,
                file_stats=file_stats(by_id[file_id] for file_id in member_ids),
                section_profiles=(anchor,),
                qualifications=frozenset(flags),
            )
        )

    logger.info(
        f"Bottom-Up {dataset.group_id}: {len(sections.stats)} section keys, "
        f"{len(fingerprints)} fingerprints"
    )
    return fingerprints


def build(dataset: Dataset, method: Method, cfg: Optional[EvaluationConfig] = None) -> List[ResilientFingerprint]:
    if method is Method.TOP_DOWN:
        return top_down(dataset, cfg)
    return bottom_up(dataset, cfg)


@dataclass(frozen=True)
class VariantProfile:
    """How much the members of one fingerprint vary around its invariant sections."""

    section_count_min: int
    section_count_max: int
    virtual_size_range: Tuple[int, int]
    virtual_address_range: Tuple[int, int]
    names_per_key: Tuple[Tuple[str, int], ...]

    def as_dict(self) -> Dict[str, object]:
        return {
            "section_count": [self.section_count_min, self.section_count_max],
            "virtual_size": list(self.virtual_size_range),
            "virtual_address": list(self.virtual_address_range),
            "names_per_key": dict(self.names_per_key),
        }


def variant_profile(fp: ResilientFingerprint, dataset: Dataset) -> VariantProfile:
    members = [dataset.reports_by_id[file_id] for file_id in fp.file_ids]
    profiled = {profile.sec_key for profile in fp.section_profiles}

    counts = [len(report.sections) for report in members] or [0]
    sizes: List[int] = []
    addresses: List[int] = []
    names: Dict[str, set] = {key: set() for key in profiled}
    for report in members:
        for section in report.sections:
            if section.content_hash not in profiled:
                continue
            sizes.append(section.virtual_size)
            addresses.append(section.virtual_address)
            names[section.content_hash].add(section.name)

    return VariantProfile(
        section_count_min=min(counts),
        section_count_max=max(counts),
        virtual_size_range=(min(sizes), max(sizes)) if sizes else (0, 0),
        virtual_address_range=(min(addresses), max(addresses)) if addresses else (0, 0),
        names_per_key=tuple(
            (profile.sec_key, len(names[profile.sec_key])) for profile in fp.section_profiles
        ),
    )
