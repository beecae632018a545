"""
Validators utility module

Every check returns (valid, message); message is None when valid.
"""
import math
import os
import re

HEX_PATTERN = re.compile(r"^[0-9a-f]+$")


def validate_file_exists(file_path):
    """Check if file exists"""
    if not os.path.exists(file_path):
        return False, f"File not found: {file_path}"
    return True, None


def validate_file_readable(file_path):
    """Check if file is readable"""
    if not os.access(file_path, os.R_OK):
        return False, f"File is not readable: {file_path}"
    return True, None


def validate_input_path(file_path):
    """Validate an input feed path: exists and is readable"""
    valid, msg = validate_file_exists(file_path)
    if not valid:
        return valid, msg
    return validate_file_readable(file_path)


def validate_output_dir(dir_path):
    """Check that an output directory exists (or can be created) and is writable"""
    try:
        os.makedirs(dir_path, exist_ok=True)
    except OSError as e:
        return False, f"Cannot create output directory {dir_path}: {e}"
    if not os.access(dir_path, os.W_OK):
        return False, f"Output directory is not writable: {dir_path}"
    return True, None


def validate_hex(value, length, label):
    """Check that value is lowercase hex of the given length"""
    if not isinstance(value, str) or len(value) != length or not HEX_PATTERN.match(value):
        return False, f"{label} must be {length} lowercase hex chars"
    return True, None


def validate_range(value, low, high, label):
    """Check low <= value <= high (high may be None for open ranges)"""
    if isinstance(value, float) and not math.isfinite(value):
        return False, f"{label} is not a finite number: {value}"
    if value < low or (high is not None and value > high):
        bound = f"[{low}, {high}]" if high is not None else f">= {low}"
        return False, f"{label} out of range {bound}: {value}"
    return True, None
