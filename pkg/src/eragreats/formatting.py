"""Shared display helpers.

All report rendering is positional (never scientific notation) so that
small tail probabilities read like "0.0000057" and proportions like
"0.187".
"""

from __future__ import annotations

import math

from .errors import DomainError


def format_probability(value: float, significant: int = 3) -> str:
    """Positional rendering with a fixed number of significant figures."""
    if significant < 1:
        raise DomainError(f"significant figures must be >= 1, got {significant}")
    if math.isnan(value) or math.isinf(value):
        raise DomainError(f"value must be finite, got {value!r}")
    if value == 0:
        return "0"
    exponent = math.floor(math.log10(abs(value)))
    decimals = significant - 1 - exponent
    rounded = round(value, decimals)
    # rounding can carry into the next power of ten (0.0999.. -> 0.100)
    if rounded != 0 and math.floor(math.log10(abs(rounded))) != exponent:
        decimals -= 1
        rounded = round(value, decimals)
    return f"{rounded:.{max(0, decimals)}f}"


def format_proportion(value: float) -> str:
    """Population shares display with three decimal places."""
    if math.isnan(value) or math.isinf(value):
        raise DomainError(f"value must be finite, got {value!r}")
    return f"{value:.3f}"
