"""
Configuration module for the resilient fingerprint triage toolkit
"""

import os
from dotenv import load_dotenv

load_dotenv()

# Vendor labelling
VENDOR_COUNT_MAX = 71  # external scanning vendors behind the feed
VENDOR_THRESHOLD = int(
    os.getenv("VENDOR_THRESHOLD", "4")
)  # flags needed before a file counts as malicious

# Clustering
MIN_CLUSTER_SIZE = int(os.getenv("MIN_CLUSTER_SIZE", "2"))
TOP_SECTIONS = int(
    os.getenv("TOP_SECTIONS", "10")
)  # section profiles kept per fingerprint

# Section taxonomy
ENTROPY_MALICIOUS = float(os.getenv("ENTROPY_MALICIOUS", "5.0"))
CAMOUFLAGE_MAX_RAW = int(os.getenv("CAMOUFLAGE_MAX_RAW", "4096"))
CAMOUFLAGE_ENTROPY_EPS = float(os.getenv("CAMOUFLAGE_ENTROPY_EPS", "1e-9"))

# Reports
PERCENT_ROUNDING = os.getenv("PERCENT_ROUNDING", "half_up")  # 'half_up' or 'down'
MIN_REPORT_SIZE = int(os.getenv("MIN_REPORT_SIZE", "1"))
REPORT_FORMAT = os.getenv("REPORT_FORMAT", "csv")  # 'csv' or 'json'
OUTPUT_DIR = os.getenv("OUTPUT_DIR", "")  # empty: reports go to stdout unless --out is given

# Feed ingest
DEFAULT_ENCODING = "utf-8"
DEFAULT_GROUP_ID = "G1"
PE_FILE_TYPES = ["Win32EXE", "Win32DLL", "Win64EXE", "Win64DLL"]
FEED_EXTENSIONS = ["jsonl", "json"]
SHOW_PROGRESS = os.getenv("SHOW_PROGRESS", "true").lower() == "true"

# Logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_FILE = os.getenv(
    "LOG_FILE", os.path.join(os.path.dirname(__file__), "logs", "triage.log")
)
