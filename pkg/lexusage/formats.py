"""Contains information about output formats and number formatting."""

from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from typing import Sequence


class OutputFormat(Enum):
    """Represents a serialization format for command output."""

    TSV = 'tsv'
    """Tab-separated values (human-friendly, scores rounded)"""

    STRUCTURED = 'structured'
    """A single JSON document (machine-friendly, lossless)"""

    @classmethod
    def choices(cls) -> list[str]:
        """List the accepted names.

        Returns:
            the values accepted on the command line and in settings files
        """
        return [f.value for f in cls]


def format_decimal(value: float, places: int) -> str:
    """Print a real number with a fixed number of decimals.

    Rounds half away from zero on the shortest decimal representation of
    ``value`` and always uses a dot as the decimal separator.

    Args:
        value: the number to format
        places: number of decimal places

    Returns:
        the formatted number
    """
    quantum = Decimal(1).scaleb(-places)
    d = Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_UP)
    if d.is_zero():
        d = abs(d)
    return f'{d:.{places}f}'


__all__: Sequence[str] = [c.__name__ for c in [
    OutputFormat,
    format_decimal,
]]
