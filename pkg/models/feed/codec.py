"""JSON codec for feed lines.

Canonical line schema (one object per line)::

    id, first_seen, type, md5, sha256, tlsh, size, vendor_malicious_count,
    imports[{library, functions[]}],
    sections[{md5, name, entropy, chi2, raw_size, virtual_address,
              virtual_size, flags}],
    resources[{hash, type, entropy, chi2}]

Raw scanning-service feeds use different key names and need an adapter
in front of this codec. Decoding raises KeyError/TypeError/ValueError on
structurally broken objects; the reader counts those as malformed.
"""

from __future__ import annotations

from typing import Any, Dict, Mapping

from models.report import (
    FileReport,
    FileType,
    ImportLibrary,
    ResourceRecord,
    SectionRecord,
)


def _as_int(value: Any) -> int:
    if isinstance(value, bool):
        raise TypeError("boolean where an integer is expected")
    if isinstance(value, float):
        if not value.is_integer():
            raise ValueError(f"non-integral value {value}")
        return int(value)
    return int(value)


def _as_float(value: Any) -> float:
    if isinstance(value, bool):
        raise TypeError("boolean where a number is expected")
    return float(value)


def _as_hex(value: Any) -> str:
    if not isinstance(value, str):
        raise TypeError("hash field must be text")
    return value.strip().lower()


def _as_list(value: Any) -> list:
    if value is None:
        return []
    if not isinstance(value, list):
        raise TypeError("expected a JSON array")
    return value


def _as_mapping(value: Any, what: str) -> Mapping[str, Any]:
    if not isinstance(value, Mapping):
        raise TypeError(f"{what} entry is not a JSON object")
    return value


def decode_import(obj: Mapping[str, Any]) -> ImportLibrary:
    obj = _as_mapping(obj, "import")
    functions = tuple(str(name) for name in _as_list(obj.get("functions")))
    return ImportLibrary(library_name=str(obj["library"]), functions=functions)


def decode_section(obj: Mapping[str, Any]) -> SectionRecord:
    obj = _as_mapping(obj, "section")
    return SectionRecord(
        content_hash=_as_hex(obj["md5"]),
        name=str(obj.get("name", "")),
        entropy=_as_float(obj["entropy"]),
        chi2=_as_float(obj.get("chi2", 0.0)),
        raw_size=_as_int(obj["raw_size"]),
        virtual_address=_as_int(obj.get("virtual_address", 0)),
        virtual_size=_as_int(obj.get("virtual_size", 0)),
        flags=frozenset(str(obj.get("flags", ""))),
    )


def decode_resource(obj: Mapping[str, Any]) -> ResourceRecord:
    obj = _as_mapping(obj, "resource")
    return ResourceRecord(
        content_hash=_as_hex(obj["hash"]),
        resource_type=str(obj.get("type", "")),
        entropy=_as_float(obj.get("entropy", 0.0)),
        chi2=_as_float(obj.get("chi2", 0.0)),
    )


def decode_report(obj: Mapping[str, Any], group_id: str) -> FileReport:
    """Build a FileReport from one parsed feed object."""

    if not isinstance(obj, Mapping):
        raise TypeError("feed line is not a JSON object")

    tlsh = obj.get("tlsh")
    if tlsh is not None and not isinstance(tlsh, str):
        raise TypeError("tlsh must be text")

    return FileReport(
        file_id=str(obj["id"]),
        first_seen=_as_int(obj["first_seen"]),
        file_type=FileType.from_text(obj["type"]),
        sha256=_as_hex(obj["sha256"]),
        md5=_as_hex(obj["md5"]),
        tlsh=tlsh.strip() if tlsh and tlsh.strip() else None,
        size_bytes=_as_int(obj["size"]),
        vendor_malicious_count=_as_int(obj["vendor_malicious_count"]),
        imports=tuple(decode_import(item) for item in _as_list(obj.get("imports"))),
        sections=tuple(decode_section(item) for item in _as_list(obj.get("sections"))),
        resources=tuple(decode_resource(item) for item in _as_list(obj.get("resources"))),
        group_id=group_id,
    )


def encode_report(report: FileReport) -> Dict[str, Any]:
    """Inverse of decode_report (group_id is carried by the dataset, not the line)."""

    encoded: Dict[str, Any] = {
        "id": report.file_id,
        "first_seen": report.first_seen,
        "type": report.file_type.value,
        "md5": report.md5,
        "sha256": report.sha256,
        "size": report.size_bytes,
        "vendor_malicious_count": report.vendor_malicious_count,
        "imports": [
            {"library": library.library_name, "functions": list(library.functions)}
            for library in report.imports
        ],
        "sections": [
            {
                "md5": section.content_hash,
                "name": section.name,
                "entropy": section.entropy,
                "chi2": section.chi2,
                "raw_size": section.raw_size,
                "virtual_address": section.virtual_address,
                "virtual_size": section.virtual_size,
                "flags": section.flags_text,
            }
            for section in report.sections
        ],
        "resources": [
            {
                "hash": resource.content_hash,
                "type": resource.resource_type,
                "entropy": resource.entropy,
                "chi2": resource.chi2,
            }
            for resource in report.resources
        ],
    }
    if report.tlsh is not None:
        encoded["tlsh"] = report.tlsh
    return encoded
