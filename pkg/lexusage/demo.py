"""Juilland and Carroll's illustrative data: nine words over five categories.

Words 1 to 7 are the seven ways of spreading five occurrences over five
categories; words 8 and 9 show where Juilland's U misjudges importance.
"""

from __future__ import annotations

from typing import Any, NamedTuple, Sequence

from .corpus.table import CorpusTable
from .formats import format_decimal
from .measures import (FrequencyDistribution, carroll_um, juilland_u,
                       ur_score)

DEMO_CATEGORIES = ('A', 'B', 'C', 'D', 'E')
"""Category names"""

DEMO_COUNTS: tuple[tuple[int, ...], ...] = (
    (1, 1, 1, 1, 1),
    (2, 1, 1, 1, 0),
    (2, 2, 1, 0, 0),
    (3, 1, 1, 0, 0),
    (3, 2, 0, 0, 0),
    (4, 1, 0, 0, 0),
    (5, 0, 0, 0, 0),
    (0, 0, 3, 3, 4),
    (1, 1, 1, 1, 6),
)
"""Frequencies of words 1 to 9 in each category"""


class DemoRow(NamedTuple):
    """One word of the demo table with its three usage measures."""

    word: str
    """Word number"""

    counts: tuple[int, ...]
    """Frequencies by category"""

    total: int
    """Total frequency"""

    u: float
    """Juilland's U"""

    u_m: float
    """Carroll's U_m (equal categories)"""

    u_r: float
    """U_R"""


def demo_distributions() -> list[FrequencyDistribution]:
    """Return the distributions of the nine demo words.

    Returns:
        the distributions, words named ``'1'`` to ``'9'``
    """
    return [
        FrequencyDistribution(str(i), counts)
        for i, counts in enumerate(DEMO_COUNTS, 1)
    ]


def demo_table() -> CorpusTable:
    """Return the demo data as a corpus table.

    Returns:
        a table with five categories and nine words
    """
    return CorpusTable.from_counts(
        DEMO_CATEGORIES, {d.word: d.counts
                          for d in demo_distributions()})


def demo_rows() -> list[DemoRow]:
    """Compute U, U_m and U_R for the nine demo words.

    Returns:
        one row per word
    """
    return [
        DemoRow(d.word, d.counts, d.total, juilland_u(d), carroll_um(d),
                ur_score(d)) for d in demo_distributions()
    ]


def format_demo_rows(rows: Sequence[DemoRow]) -> str:
    """Lay out the demo rows as a text table with two-decimal values.

    Args:
        rows: the rows

    Returns:
        the text table
    """
    header = ['Word', *DEMO_CATEGORIES, 'Total', 'U', 'U_m', 'U_R']
    lines: list[list[str]] = [header]
    for r in rows:
        lines.append([
            r.word, *map(str, r.counts),
            str(r.total), *(format_decimal(v, 2) for v in (r.u, r.u_m, r.u_r))
        ])
    widths = [max(len(line[i]) for line in lines) for i in range(len(header))]
    return ''.join(
        '  '.join(c.rjust(w) for c, w in zip(line, widths)).rstrip() + '\n'
        for line in lines)


def demo_rows_as_dicts(rows: Sequence[DemoRow]) -> list[dict[str, Any]]:
    """Prepare the demo rows to be serialized.

    Args:
        rows: the rows

    Returns:
        a list of dictionaries
    """
    return [{**r._asdict(), 'counts': list(r.counts)} for r in rows]


__all__: Sequence[str] = ['DEMO_CATEGORIES', 'DEMO_COUNTS'] + [
    c.__name__ for c in [
        DemoRow,
        demo_distributions,
        demo_rows,
        demo_rows_as_dicts,
        demo_table,
        format_demo_rows,
    ]
]
