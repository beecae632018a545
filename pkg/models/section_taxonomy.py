"""Section taxonomy: Malicious, Standard or Camouflage from entropy and raw size.

- Camouflage: entropy ~ 0 and raw size under camouflage_max_raw (padding).
- Malicious: entropy above entropy_malicious (packed or obfuscated code).
- Standard: everything else.

Section flags are not consulted.
"""

from __future__ import annotations

from collections import Counter
from typing import Dict, Iterable

from models.evaluation_config import EvaluationConfig
from models.report import SectionLabel, SectionRecord


def classify_values(entropy: float, raw_size: int, cfg: EvaluationConfig) -> SectionLabel:
    if entropy <= cfg.camouflage_entropy_eps and raw_size < cfg.camouflage_max_raw:
        return SectionLabel.CAMOUFLAGE
    if entropy > cfg.entropy_malicious:
        return SectionLabel.MALICIOUS
    return SectionLabel.STANDARD


def classify(section: SectionRecord, cfg: EvaluationConfig) -> SectionLabel:
    return classify_values(section.entropy, section.raw_size, cfg)


def label_counts(sections: Iterable[SectionRecord], cfg: EvaluationConfig) -> Dict[SectionLabel, int]:
    counts = Counter(classify(section, cfg) for section in sections)
    return {label: counts.get(label, 0) for label in SectionLabel}
