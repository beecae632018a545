"""
File Scanner Utility - feed batch discovery

A chronological group is often delivered as a folder of batch files;
the scanner finds them with extension filters and returns them in a
stable order so ingestion is deterministic.
"""

from pathlib import Path
from typing import List


class FileScanner:
    """
    Unified file scanning with extension filters.

    Provides:
    - Recursive and non-recursive scanning
    - Multiple extension support
    - Sorted, de-duplicated path lists
    """

    @staticmethod
    def scan(folder: str, extensions: List[str], recursive: bool = False) -> List[Path]:
        """
        Scan for files matching extensions.

        Args:
            folder: Folder path to scan
            extensions: List of extensions to match
            recursive: Whether to scan subfolders

        Returns:
            Sorted list of Path objects for matching files
        """
        folder_path = Path(folder)
        files = set()

        glob_method = folder_path.rglob if recursive else folder_path.glob

        for ext in extensions:
            pattern = f"*.{ext}"
            files.update(path for path in glob_method(pattern) if path.is_file())

        return sorted(files)
