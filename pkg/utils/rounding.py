"""
Percentage helpers shared by baselines, summaries and reports.

Percentages are computed from exact integer ratios with Decimal and
quantized to one decimal, so reports do not depend on float noise.
"""

from decimal import Decimal, ROUND_DOWN, ROUND_HALF_UP

ROUNDING_MODES = {
    "half_up": ROUND_HALF_UP,
    "down": ROUND_DOWN,
}

_ONE_DECIMAL = Decimal("0.1")


def percent(part: int, whole: int, mode: str = "half_up") -> float:
    """Return 100 * part / whole at one decimal; 0.0 when whole is 0."""
    if whole == 0:
        return 0.0
    exact = Decimal(100 * part) / Decimal(whole)
    return float(exact.quantize(_ONE_DECIMAL, rounding=ROUNDING_MODES[mode]))


def format_percent(value: float) -> str:
    """One-decimal text form used by every emitter."""
    return f"{value:.1f}"
