"""Compares the top zones of two ranked dictionaries."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from ..errors import ComparisonError
from .dictionary import RankedDictionary


@dataclass(frozen=True)
class ComparisonReport:
    """Overlap between the first ``n`` words of two dictionaries."""

    n: int
    """Number of words taken from each dictionary"""

    common: int
    """Number of words in both top zones"""

    only_a: tuple[str, ...]
    """Words only in the first top zone, in rank order"""

    only_b: tuple[str, ...]
    """Words only in the second top zone, in rank order"""

    @property
    def jaccard(self) -> float:
        """Jaccard index of the two top zones.

        Returns:
            ``common / (2n - common)``
        """
        return self.common / (2 * self.n - self.common)

    def as_dict(self) -> dict[str, Any]:
        """Prepare the report to be serialized.

        Returns:
            a dictionary with the report data
        """
        return {
            'n': self.n,
            'common': self.common,
            'jaccard': self.jaccard,
            'only_a': list(self.only_a),
            'only_b': list(self.only_b),
        }


def compare(a: RankedDictionary, b: RankedDictionary,
            n: int) -> ComparisonReport:
    """Compare the first ``n`` words of two dictionaries.

    Args:
        a: first dictionary
        b: second dictionary
        n: size of the top zones (positive)

    Raises:
        ComparisonError: if ``n`` is not positive or a dictionary is
            shorter than ``n``

    Returns:
        the comparison report
    """
    if n < 1:
        raise ComparisonError(f'n must be positive; got {n}')
    if len(a) < n or len(b) < n:
        raise ComparisonError(f'cannot compare the top {n} words: the '
                              f'dictionaries have {len(a)} and {len(b)} words')
    top_a, top_b = a.words[:n], b.words[:n]
    set_a, set_b = set(top_a), set(top_b)
    return ComparisonReport(n, len(set_a & set_b),
                            tuple(w for w in top_a if w not in set_b),
                            tuple(w for w in top_b if w not in set_a))


__all__: Sequence[str] = [c.__name__ for c in [
    ComparisonReport,
    compare,
]]
