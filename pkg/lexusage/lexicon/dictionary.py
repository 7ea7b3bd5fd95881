"""Contains ranked dictionaries and the operations producing them."""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from structlog import getLogger

from ..corpus.table import CorpusTable
from ..errors import MeasureKindError, PoolingError
from .kinds import FrequencyMeasure, Measure, URMeasure

_logger = getLogger(__name__)


class DictionaryEntry(NamedTuple):
    """Represents a word of a ranked dictionary."""

    rank: int
    """Position in the dictionary (1-based)"""

    word: str
    """The word"""

    score: float
    """Value of the measure"""

    freq: int
    """Total corpus frequency"""


@dataclass(frozen=True)
class RankedDictionary:
    """Words sorted by decreasing score.

    Ties are broken by decreasing total frequency, then by word (code point
    order).
    """

    measure: Measure
    """Measure the words are ranked by"""

    entries: tuple[DictionaryEntry, ...]
    """Entries, sorted by rank"""

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        for i, e in enumerate(entries):
            if e.rank != i + 1:
                raise ValueError(f'expected rank {i + 1}, got {e.rank}')
            if i and e.score > entries[i - 1].score:
                raise ValueError(f'scores must not increase (rank {e.rank})')
        if len({e.word for e in entries}) != len(entries):
            raise ValueError('words must not repeat')
        object.__setattr__(self, 'entries', entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def words(self) -> list[str]:
        """Words, in rank order.

        Returns:
            the words
        """
        return [e.word for e in self.entries]

    def get(self, word: str) -> DictionaryEntry | None:
        """Find the entry of a word.

        Args:
            word: the word

        Returns:
            the entry, or ``None`` if the word is absent
        """
        return next((e for e in self.entries if e.word == word), None)


def _sorted_dictionary(
    measure: Measure, scored: Iterable[tuple[str, float, int, int | float]]
) -> RankedDictionary:
    # (word, score, freq, order key); equal keys print equal scores
    ordered = sorted(scored, key=lambda x: (-x[3], -x[2], x[0]))
    entries: list[DictionaryEntry] = []
    for i, (w, s, f, k) in enumerate(ordered, 1):
        if entries:
            prev = entries[-1].score
            s = prev if k == ordered[i - 2][3] else min(s, prev)
        entries.append(DictionaryEntry(i, w, s, f))
    return RankedDictionary(measure, tuple(entries))


def rank(table: CorpusTable, measure: Measure) -> RankedDictionary:
    """Rank all the words of a table.

    Words are sorted on :meth:`Measure.order_key`, so words with the same
    exact generalized measure are ordered by frequency even when their
    floating-point scores differ in the last digit.

    Args:
        table: the frequency table
        measure: the measure to rank by

    Returns:
        the ranked dictionary
    """
    measure.check(table)
    d = _sorted_dictionary(
        measure,
        ((dist.word, measure.score(dist, table), dist.total,
          measure.order_key(dist, table)) for dist in table.entries.values()))
    _logger.debug('words ranked', measure=measure.label, words=len(d))
    return d


def select_top(dictionary: RankedDictionary, n: int) -> RankedDictionary:
    """Keep the first words of a dictionary.

    Args:
        dictionary: the dictionary
        n: maximum number of words (positive)

    Raises:
        ValueError: if ``n`` is not positive

    Returns:
        the first ``n`` words (or all of them), ranks unchanged
    """
    if n < 1:
        raise ValueError(f'n must be positive; got {n}')
    return RankedDictionary(dictionary.measure, dictionary.entries[:n])


def select_by_threshold(dictionary: RankedDictionary,
                        min_freq: int) -> RankedDictionary:
    """Keep the reliable zone of a frequency dictionary.

    Args:
        dictionary: a dictionary ranked by frequency
        min_freq: minimum total frequency (positive)

    Raises:
        MeasureKindError: if the dictionary is not ranked by frequency
        ValueError: if ``min_freq`` is not positive

    Returns:
        the words whose frequency is at least ``min_freq``, ranks unchanged
    """
    if not isinstance(dictionary.measure, FrequencyMeasure):
        raise MeasureKindError('a frequency threshold needs a dictionary '
                               'ranked by frequency, not '
                               f'{dictionary.measure.label}')
    if min_freq < 1:
        raise ValueError(f'minimum frequency must be positive; got {min_freq}')
    return RankedDictionary(
        dictionary.measure,
        tuple(e for e in dictionary.entries if e.freq >= min_freq))


def pool_ur(dictionaries: Sequence[RankedDictionary]) -> RankedDictionary:
    """Pool dictionaries ranked by U_R by adding up the scores of each word.

    Args:
        dictionaries: dictionaries ranked by U_R

    Raises:
        PoolingError: if the list is empty or a dictionary is ranked by
            another measure

    Returns:
        a dictionary with every word of the inputs, re-ranked
    """
    if not dictionaries:
        raise PoolingError('no dictionaries to pool')
    if (other := {
            d.measure.label
            for d in dictionaries if not isinstance(d.measure, URMeasure)
    }):
        raise PoolingError('only dictionaries ranked by ur can be pooled; '
                           f'got {", ".join(sorted(other))}')
    scores: dict[str, list[float]] = defaultdict(list)
    freqs: dict[str, int] = defaultdict(int)
    for d in dictionaries:
        for e in d.entries:
            scores[e.word].append(e.score)
            freqs[e.word] += e.freq
    totals = {w: math.fsum(s) for w, s in scores.items()}
    pooled = _sorted_dictionary(
        URMeasure(), ((w, u, freqs[w], u) for w, u in totals.items()))
    _logger.debug('dictionaries pooled',
                  dictionaries=len(dictionaries),
                  words=len(pooled))
    return pooled


__all__: Sequence[str] = [
    c.__name__ for c in [
        DictionaryEntry,
        RankedDictionary,
        pool_ur,
        rank,
        select_by_threshold,
        select_top,
    ]
]
