"""
Shared builders for test fixtures: small hand-made reports and datasets
"""
import hashlib

from models.clustering import FileStats, Method, QualFlag, ResilientFingerprint
from models.feed import Dataset
from models.report import FileReport, FileType, ImportLibrary, ResourceRecord, SectionRecord


def md5_of(text):
    return hashlib.md5(text.encode("utf-8")).hexdigest()


def sha256_of(text):
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def section(key, entropy=3.0, raw_size=8192, name=".text", virtual_address=4096, virtual_size=1024, chi2=1000.0):
    return SectionRecord(
        content_hash=md5_of(key),
        name=name,
        entropy=entropy,
        chi2=chi2,
        raw_size=raw_size,
        virtual_address=virtual_address,
        virtual_size=virtual_size,
        flags=frozenset("rx"),
    )


def imports(*functions, library="KERNEL32.dll"):
    return (ImportLibrary(library, tuple(functions)),) if functions else ()


def report(file_id, flags=0, imports_=None, sections=(), resources=(), tlsh=None, size=1000, first_seen=0, group_id="G1", sha=None, file_type=FileType.WIN32_EXE):
    return FileReport(
        file_id=file_id,
        first_seen=first_seen,
        file_type=file_type,
        sha256=sha or sha256_of(file_id),
        md5=md5_of(file_id),
        tlsh=tlsh,
        size_bytes=size,
        vendor_malicious_count=flags,
        imports=imports("CreateFileA") if imports_ is None else imports_,
        sections=tuple(sections),
        resources=tuple(resources),
        group_id=group_id,
    )


def resource(key, entropy=4.0):
    return ResourceRecord(content_hash=md5_of(key), resource_type="RT_ICON", entropy=entropy, chi2=10.0)


def dataset(reports, group_id="G1"):
    return Dataset(reports=tuple(reports), group_id=group_id)


def fingerprint(size, flags, quals=(), method=Method.TOP_DOWN, key=None, prefix="f"):
    """Fingerprint with `size` members; flags is one count or a list cycled over members."""
    counts = flags if isinstance(flags, (list, tuple)) else [flags]
    ids = tuple(f"{prefix}{n:07d}" for n in range(size))
    histogram = {}
    for n in range(size):
        value = counts[n % len(counts)]
        histogram[value] = histogram.get(value, 0) + 1
    return ResilientFingerprint(
        method=method,
        key=key or sha256_of(prefix),
        file_ids=ids,
        file_stats=FileStats(size, size, 1000, 1000, tuple(sorted(histogram.items()))),
        qualifications=frozenset(QualFlag(q) for q in quals),
    )
