"""Scoring fingerprints against a known partition, plus emission-time filters."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, List, Mapping, Optional, Sequence, Tuple

from models.clustering import ResilientFingerprint


def _pairs(n: int) -> int:
    return n * (n - 1) // 2


def report_filter(
    fingerprints: Sequence[ResilientFingerprint], min_report_size: int
) -> List[ResilientFingerprint]:
    return [fp for fp in fingerprints if fp.redundancy >= min_report_size]


def pairwise_scores(
    fingerprints: Sequence[ResilientFingerprint],
    file_to_cluster: Mapping[str, Optional[str]],
) -> Tuple[float, float]:
    """Pairwise precision and recall of a partition against planted clusters.

    Files mapped to None (noise) never form a correct pair. A zero
    denominator scores 0.0.
    """

    correct = predicted = 0
    for fp in fingerprints:
        predicted += _pairs(fp.redundancy)
        planted = Counter(file_to_cluster.get(file_id) for file_id in fp.file_ids)
        correct += sum(_pairs(n) for cluster, n in planted.items() if cluster is not None)

    cluster_sizes = Counter(c for c in file_to_cluster.values() if c is not None)
    expected = sum(_pairs(n) for n in cluster_sizes.values())

    precision = correct / predicted if predicted else 0.0
    recall = correct / expected if expected else 0.0
    return precision, recall


def coverage(fingerprints: Iterable[ResilientFingerprint], file_ids: Iterable[str]) -> float:
    """Share of file_ids found in at least one fingerprint."""

    targets = set(file_ids)
    if not targets:
        return 0.0
    covered = set()
    for fp in fingerprints:
        covered.update(fp.file_ids)
    return len(targets & covered) / len(targets)
