"""Feed I/O package - JSON-lines feed ingestion, validation and writing.

Submodules:
- codec.py      → line schema <-> FileReport
- validation.py → record invariant checks (violations as values)
- reader.py     → FeedReader, Dataset, IngestStats, ingest()
- writer.py     → write_feed()
- summary.py    → FeedSummary for ingest checks
"""

from .codec import decode_report, encode_report
from .reader import Dataset, FeedReader, IngestStats, ingest, ingest_groups
from .summary import FeedSummary, feed_summary
from .validation import validate
from .writer import write_feed

__all__ = [
    "Dataset",
    "FeedReader",
    "FeedSummary",
    "IngestStats",
    "decode_report",
    "encode_report",
    "feed_summary",
    "ingest",
    "ingest_groups",
    "validate",
    "write_feed",
]
