"""Domain exceptions.

Per-record problems (bad feed lines, invariant violations) are reported
as values; these exceptions cover conditions a caller must act on.
"""


class FingerprintError(Exception):
    """Base class for toolkit errors."""


class NoImportsError(FingerprintError):
    """A report has no import entries, so it has no imphash."""


class SpecError(FingerprintError):
    """A synthetic corpus spec is missing fields or infeasible."""


class UsageError(FingerprintError):
    """A method/qualification combination that cannot be evaluated."""


class ConfigError(FingerprintError):
    """An invalid configuration override."""


class EmptyDatasetError(FingerprintError):
    """An operation that needs at least one report got none."""
