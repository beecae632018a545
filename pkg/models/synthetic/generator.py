"""Seeded synthetic feeds with planted clusters and evasive per-file mutations.

Every cluster shares one import list and a handful of invariant
sections (Malicious, Standard, Camouflage). Each member file then gets
fresh file hashes, random section names, randomized virtual layout,
duplicated camouflage padding and unique filler sections, so only the
invariant parts tie a cluster together. Noise files share nothing
except the common resource pool.

Hashes are derived from namespaced strings (never from content) and
each cluster draws from its own sub-seed, so output depends only on the
spec.
"""

from __future__ import annotations

import hashlib
import json
import random
import string
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from tqdm import tqdm

from config import DEFAULT_ENCODING, PE_FILE_TYPES, SHOW_PROGRESS
from models.feed.reader import Dataset, IngestStats
from models.fingerprint_keys import imphash
from models.report import FileReport, FileType, ImportLibrary, ResourceRecord, SectionRecord
from models.synthetic.spec import SyntheticSpec
from utils.logger import logger

TRUTH_SUFFIX = ".truth.json"

MALICIOUS_ENTROPY = (5.1, 7.99)
STANDARD_ENTROPY = (2.0, 4.5)
FILLER_ENTROPY = (1.0, 7.5)
CAMOUFLAGE_RAW = (1, 4095)
FIRST_SEEN_BASE = 1_600_000_000
FIRST_SEEN_SPAN = 30 * 86_400
RESOURCE_POOL_SIZE = 40
LIBRARIES = ("kernel32.dll", "user32.dll", "advapi32.dll", "ws2_32.dll", "shell32.dll", "ntdll.dll")


def _hex(*parts: object) -> str:
    return hashlib.sha256("|".join(str(p) for p in parts).encode("utf-8")).hexdigest()


def _md5(*parts: object) -> str:
    return hashlib.md5("|".join(str(p) for p in parts).encode("utf-8")).hexdigest()


def _sub_seed(seed: int, *parts: object) -> int:
    return int(_hex("seed", seed, *parts)[:16], 16)


def cluster_id(index: int) -> str:
    return f"C{index:03d}"


@dataclass(frozen=True)
class PlantedCluster:
    imphash: str
    malicious_keys: Tuple[str, ...]
    standard_keys: Tuple[str, ...]
    camouflage_key: str

    @property
    def section_keys(self) -> Tuple[str, ...]:
        return self.malicious_keys + self.standard_keys + (self.camouflage_key,)

    def as_dict(self) -> Dict[str, object]:
        return {
            "imphash": self.imphash,
            "malicious_keys": list(self.malicious_keys),
            "standard_keys": list(self.standard_keys),
            "camouflage_key": self.camouflage_key,
        }


@dataclass(frozen=True)
class GroundTruth:
    """Planted partition: file id -> cluster id (None for noise)."""

    file_to_cluster: Dict[str, Optional[str]]
    clusters: Dict[str, PlantedCluster]
    mutated: Tuple[str, ...] = ()

    def members(self, cid: str) -> List[str]:
        return sorted(fid for fid, c in self.file_to_cluster.items() if c == cid)

    @property
    def planted_files(self) -> List[str]:
        return sorted(fid for fid, c in self.file_to_cluster.items() if c is not None)

    def to_dict(self) -> Dict[str, object]:
        return {
            "file_to_cluster": dict(sorted(self.file_to_cluster.items())),
            "clusters": {cid: self.clusters[cid].as_dict() for cid in sorted(self.clusters)},
            "mutated": sorted(self.mutated),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "GroundTruth":
        clusters = {
            cid: PlantedCluster(
                imphash=item["imphash"],
                malicious_keys=tuple(item["malicious_keys"]),
                standard_keys=tuple(item["standard_keys"]),
                camouflage_key=item["camouflage_key"],
            )
            for cid, item in data["clusters"].items()
        }
        return cls(dict(data["file_to_cluster"]), clusters, tuple(data.get("mutated", ())))


def truth_path(feed_path: str) -> str:
    return str(feed_path) + TRUTH_SUFFIX


def write_truth(truth: GroundTruth, path: str) -> None:
    out_path = Path(path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with open(out_path, "w", encoding=DEFAULT_ENCODING, newline="\n") as handle:
        json.dump(truth.to_dict(), handle, sort_keys=True, indent=2)
        handle.write("\n")


def load_truth(path: str) -> GroundTruth:
    with open(path, "r", encoding=DEFAULT_ENCODING) as handle:
        return GroundTruth.from_dict(json.load(handle))


@dataclass
class _ClusterPlan:
    cid: str
    file_type: FileType
    imports: Tuple[ImportLibrary, ...]
    malicious: List[SectionRecord]
    standard: List[SectionRecord]
    camouflage: SectionRecord
    tlsh: str
    mutated: List[str] = field(default_factory=list)


class SyntheticGenerator:
    """Builds one corpus per spec; call generate() once."""

    def __init__(self, spec: SyntheticSpec, show_progress: bool = SHOW_PROGRESS) -> None:
        self.spec = spec
        self.show_progress = show_progress
        self.resource_pool = [self._resource(i) for i in range(RESOURCE_POOL_SIZE)]

    # ------------------------------------------------------------------
    # Record builders
    # ------------------------------------------------------------------

    def _resource(self, *namespace: object) -> ResourceRecord:
        rng = random.Random(_sub_seed(self.spec.seed, "resource", *namespace))
        return ResourceRecord(
            content_hash=_md5(self.spec.seed, "resource", *namespace),
            resource_type=rng.choice(("RT_ICON", "RT_VERSION", "RT_MANIFEST", "RT_DIALOG")),
            entropy=round(rng.uniform(1.0, 7.0), 4),
            chi2=round(rng.uniform(100.0, 50_000.0), 2),
        )

    @staticmethod
    def _section_name(rng: random.Random) -> str:
        return "." + "".join(rng.choice(string.ascii_lowercase) for _ in range(rng.randint(3, 6)))

    def _section(
        self,
        rng: random.Random,
        content_hash: str,
        entropy: float,
        raw_size: int,
        flags: str,
        chi2: float,
    ) -> SectionRecord:
        """One occurrence: content fixed by the caller, layout and name random."""
        return SectionRecord(
            content_hash=content_hash,
            name=self._section_name(rng),
            entropy=entropy,
            chi2=chi2,
            raw_size=raw_size,
            virtual_address=rng.randint(*self.spec.virtual_address_range),
            virtual_size=rng.randint(*self.spec.virtual_size_range),
            flags=frozenset(flags),
        )

    def _filler(self, rng: random.Random, *namespace: object) -> SectionRecord:
        return self._section(
            rng,
            _md5(self.spec.seed, "filler", *namespace),
            round(rng.uniform(*FILLER_ENTROPY), 4),
            rng.randrange(4096, 65_536, 512),
            "r",
            round(rng.uniform(100.0, 500_000.0), 2),
        )

    def _import_list(self, rng: random.Random, *namespace: object) -> Tuple[ImportLibrary, ...]:
        libraries = rng.sample(LIBRARIES, rng.randint(2, 4))
        return tuple(
            ImportLibrary(
                library_name=library,
                functions=tuple(
                    f"Fn{_hex(self.spec.seed, 'import', *namespace, library, n)[:10]}"
                    for n in range(rng.randint(2, 6))
                ),
            )
            for library in libraries
        )

    def _file(
        self,
        rng: random.Random,
        namespace: Tuple[object, ...],
        file_type: FileType,
        imports: Tuple[ImportLibrary, ...],
        sections: List[SectionRecord],
        flags_range: Tuple[int, int],
        tlsh: str,
        resources: Optional[Tuple[ResourceRecord, ...]] = None,
    ) -> FileReport:
        """Cluster files draw resources from the shared pool unless given their own."""
        sha256 = _hex(self.spec.seed, "file", *namespace)
        if resources is None:
            resources = tuple(rng.sample(self.resource_pool, rng.randint(0, 3)))
        rng.shuffle(sections)
        return FileReport(
            file_id="vt-" + sha256[:16],
            first_seen=FIRST_SEEN_BASE + rng.randint(0, FIRST_SEEN_SPAN),
            file_type=file_type,
            sha256=sha256,
            md5=_md5(self.spec.seed, "file", *namespace),
            tlsh=tlsh,
            size_bytes=rng.randint(20_000, 5_000_000),
            vendor_malicious_count=rng.randint(*flags_range),
            imports=imports,
            sections=tuple(sections),
            resources=resources,
            group_id=self.spec.group_id,
        )

    @staticmethod
    def _tlsh(*parts: object) -> str:
        return "T1" + (_hex("tlsh", *parts) + _md5("tlsh", *parts))[:70].upper()

    # ------------------------------------------------------------------
    # Clusters and noise
    # ------------------------------------------------------------------

    def _plan(self, index: int, rng: random.Random) -> _ClusterPlan:
        cid = cluster_id(index)
        seed = self.spec.seed

        def planted(role: str, n: int, entropy_range, flags: str) -> SectionRecord:
            return SectionRecord(
                content_hash=_md5(seed, "planted", cid, role, n),
                name="",
                entropy=round(rng.uniform(*entropy_range), 4),
                chi2=round(rng.uniform(100.0, 500_000.0), 2),
                raw_size=rng.randrange(4096, 262_144, 512),
                virtual_address=0,
                virtual_size=0,
                flags=frozenset(flags),
            )

        camouflage = SectionRecord(
            content_hash=_md5(seed, "planted", cid, "camouflage", 0),
            name="",
            entropy=0.0,
            chi2=round(rng.uniform(100.0, 10_000.0), 2),
            raw_size=rng.randint(*CAMOUFLAGE_RAW),
            virtual_address=0,
            virtual_size=0,
            flags=frozenset("r"),
        )
        return _ClusterPlan(
            cid=cid,
            file_type=FileType(rng.choice(PE_FILE_TYPES)),
            imports=self._import_list(rng, cid),
            malicious=[planted("malicious", n, MALICIOUS_ENTROPY, "rx") for n in range(rng.randint(1, 2))],
            standard=[planted("standard", n, STANDARD_ENTROPY, "rw") for n in range(rng.randint(1, 2))],
            camouflage=camouflage,
            tlsh=self._tlsh(seed, cid),
        )

    def _occurrence(self, rng: random.Random, template: SectionRecord) -> SectionRecord:
        return self._section(
            rng, template.content_hash, template.entropy, template.raw_size,
            template.flags_text, template.chi2,
        )

    def _cluster_files(self, index: int) -> Tuple[_ClusterPlan, List[FileReport]]:
        rng = random.Random(_sub_seed(self.spec.seed, "cluster", index))
        plan = self._plan(index, rng)
        spec = self.spec

        reports = []
        for n in range(rng.randint(*spec.files_per_cluster)):
            namespace = (plan.cid, n)
            sections = [self._occurrence(rng, s) for s in plan.malicious + plan.standard]
            sections += [self._occurrence(rng, plan.camouflage) for _ in range(rng.randint(*spec.camouflage_copies))]
            low, high = spec.sections_per_file
            total = rng.randint(max(low, len(sections)), high)
            sections += [self._filler(rng, *namespace, k) for k in range(total - len(sections))]

            imports = plan.imports
            mutate = rng.random() < spec.mutate_imports_fraction
            if mutate:
                last = imports[-1]
                extra = f"Fn{_hex(spec.seed, 'mutation', *namespace)[:12]}"
                imports = imports[:-1] + (ImportLibrary(last.library_name, last.functions + (extra,)),)

            shared_tlsh = rng.random() < spec.tlsh_shared_fraction
            tlsh = plan.tlsh if shared_tlsh else self._tlsh(spec.seed, "file", *namespace)
            report = self._file(
                rng, namespace, plan.file_type, imports, sections, spec.vendor_flags_malicious, tlsh
            )
            if mutate:
                plan.mutated.append(report.file_id)
            reports.append(report)
        return plan, reports

    def _noise_files(self) -> List[FileReport]:
        rng = random.Random(_sub_seed(self.spec.seed, "noise"))
        reports = []
        for n in range(self.spec.noise_files):
            namespace = ("noise", n)
            low, high = self.spec.sections_per_file
            sections = [self._filler(rng, *namespace, k) for k in range(rng.randint(low, high))]
            reports.append(
                self._file(
                    rng,
                    namespace,
                    FileType(rng.choice(PE_FILE_TYPES)),
                    self._import_list(rng, *namespace),
                    sections,
                    self.spec.vendor_flags_benign,
                    self._tlsh(self.spec.seed, "noise", n),
                    tuple(self._resource(*namespace, k) for k in range(rng.randint(0, 3))),
                )
            )
        return reports

    # ------------------------------------------------------------------
    # Entry point
    # ------------------------------------------------------------------

    def generate(self) -> Tuple[Dataset, GroundTruth]:
        spec = self.spec
        file_to_cluster: Dict[str, Optional[str]] = {}
        clusters: Dict[str, PlantedCluster] = {}
        mutated: List[str] = []
        reports: List[FileReport] = []

        indices = tqdm(
            range(spec.cluster_count),
            desc="Generate clusters",
            unit="cluster",
            disable=None if self.show_progress else True,
        )
        for index in indices:
            plan, members = self._cluster_files(index)
            clusters[plan.cid] = PlantedCluster(
                imphash=imphash(plan.imports).digest,
                malicious_keys=tuple(s.content_hash for s in plan.malicious),
                standard_keys=tuple(s.content_hash for s in plan.standard),
                camouflage_key=plan.camouflage.content_hash,
            )
            for report in members:
                file_to_cluster[report.file_id] = plan.cid
            mutated.extend(plan.mutated)
            reports.extend(members)

        noise = self._noise_files()
        for report in noise:
            file_to_cluster[report.file_id] = None
        reports.extend(noise)

        reports.sort(key=lambda r: (r.first_seen, r.file_id))
        logger.info(
            f"Generated {len(reports)} reports: {spec.cluster_count} clusters, "
            f"{len(noise)} noise files, {len(mutated)} with mutated imports"
        )
        stats = IngestStats(lines_read=len(reports), accepted=len(reports))
        dataset = Dataset(reports=tuple(reports), group_id=spec.group_id, ingest_stats=stats)
        return dataset, GroundTruth(file_to_cluster, clusters, tuple(sorted(mutated)))


def generate(spec: SyntheticSpec, show_progress: bool = SHOW_PROGRESS) -> Tuple[Dataset, GroundTruth]:
    return SyntheticGenerator(spec, show_progress=show_progress).generate()
