"""Contains the measures words can be ranked by."""

from __future__ import annotations

import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Sequence

from overrides import overrides

from ..corpus.table import CorpusTable
from ..errors import MeasureDomainError
from ..measures import (FrequencyDistribution, GeneralizedParams,
                        carroll_um, generalized_key, generalized_m, juilland_u,
                        ur_score)


@dataclass(frozen=True)
class Measure(ABC):
    """Represents a word usage measure."""

    @property
    @abstractmethod
    def label(self) -> str:
        """Name used in files and on the command line.

        Returns:
            the label
        """

    def check(self, table: CorpusTable) -> None:
        """Check that the measure is defined for a table.

        Args:
            table: the table
        """

    @abstractmethod
    def score(self, dist: FrequencyDistribution, table: CorpusTable) -> float:
        """Compute the score of a word.

        Args:
            dist: distribution of the word
            table: table containing the word

        Returns:
            the score
        """

    def order_key(self, dist: FrequencyDistribution,
                  table: CorpusTable) -> int | float:
        """Compute the value words are sorted on (by default the score).

        Args:
            dist: distribution of the word
            table: table containing the word

        Returns:
            a value ordering words like their scores
        """
        return self.score(dist, table)

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class FrequencyMeasure(Measure):
    """Total corpus frequency F (frequency dictionaries)."""

    @property
    @overrides
    def label(self) -> str:
        return 'frequency'

    @overrides
    def score(self, dist: FrequencyDistribution, table: CorpusTable) -> float:
        return float(dist.total)


@dataclass(frozen=True)
class RangeMeasure(Measure):
    """Range t (distributive dictionaries)."""

    @property
    @overrides
    def label(self) -> str:
        return 'range'

    @overrides
    def score(self, dist: FrequencyDistribution, table: CorpusTable) -> float:
        return float(dist.range)


@dataclass(frozen=True)
class GeneralizedMeasure(Measure):
    """Generalized measure ``F^(1-a) * t^a``."""

    params: GeneralizedParams
    """The parameter ``a``"""

    @property
    @overrides
    def label(self) -> str:
        return f'generalized(a={self.params.a!r})'

    @overrides
    def score(self, dist: FrequencyDistribution, table: CorpusTable) -> float:
        return generalized_m(dist.total, dist.range, self.params)

    @overrides
    def order_key(self, dist: FrequencyDistribution,
                  table: CorpusTable) -> int | float:
        return generalized_key(dist.total, dist.range, self.params)


@dataclass(frozen=True)
class _DispersionMeasure(Measure):

    @overrides
    def check(self, table: CorpusTable) -> None:
        if table.n_categories < 2:
            raise MeasureDomainError(
                f'measure {self.label} needs at least two categories '
                f'(n >= 2); the table has {table.n_categories}')


@dataclass(frozen=True)
class JuillandMeasure(_DispersionMeasure):
    """Juilland's usage coefficient U."""

    @property
    @overrides
    def label(self) -> str:
        return 'juilland'

    @overrides
    def score(self, dist: FrequencyDistribution, table: CorpusTable) -> float:
        return juilland_u(dist)


@dataclass(frozen=True)
class CarrollMeasure(_DispersionMeasure):
    """Carroll's usage coefficient U_m (with proportional frequencies)."""

    @property
    @overrides
    def label(self) -> str:
        return 'carroll'

    @overrides
    def check(self, table: CorpusTable) -> None:
        super().check(table)
        if (empty := [c.name for c in table.categories if not c.size_tokens]):
            raise MeasureDomainError(
                f'measure {self.label} needs non-empty categories; empty: '
                f'{", ".join(empty)}')

    @overrides
    def score(self, dist: FrequencyDistribution, table: CorpusTable) -> float:
        return carroll_um(dist, table.category_sizes)


@dataclass(frozen=True)
class URMeasure(Measure):
    """Sum of the reactions over all texts, U_R."""

    @property
    @overrides
    def label(self) -> str:
        return 'ur'

    @overrides
    def score(self, dist: FrequencyDistribution, table: CorpusTable) -> float:
        return ur_score(dist)


MEASURE_NAMES = ('frequency', 'range', 'generalized', 'juilland', 'carroll',
                 'ur')
"""Names accepted by :func:`measure_from_name`"""


def measure_from_name(name: str, a: float | None = None) -> Measure:
    """Create a measure from its name.

    Args:
        name: one of :data:`MEASURE_NAMES`
        a: parameter of the generalized measure (required for it, rejected
            for the others)

    Raises:
        MeasureDomainError: if the name is unknown or ``a`` is misused

    Returns:
        the measure
    """
    if (name == 'generalized') != (a is not None):
        raise MeasureDomainError(
            'parameter a is required by, and only accepted for, '
            'the generalized measure')
    if name == 'generalized':
        assert a is not None
        return GeneralizedMeasure(GeneralizedParams(a))
    simple: dict[str, type[Measure]] = {
        'frequency': FrequencyMeasure,
        'range': RangeMeasure,
        'juilland': JuillandMeasure,
        'carroll': CarrollMeasure,
        'ur': URMeasure,
    }
    try:
        return simple[name]()
    except KeyError:
        raise MeasureDomainError(f'unknown measure "{name}"') from None


def measure_from_label(label: str) -> Measure:
    """Parse a label produced by :attr:`Measure.label`.

    Args:
        label: the label

    Raises:
        MeasureDomainError: if the label is invalid

    Returns:
        the measure
    """
    if (m := re.fullmatch(r'generalized\(a=([^)]+)\)', label.strip())):
        try:
            a = float(m.group(1))
        except ValueError:
            raise MeasureDomainError(f'invalid label "{label}"') from None
        return measure_from_name('generalized', a)
    return measure_from_name(label.strip())


__all__: Sequence[str] = ['MEASURE_NAMES'] + [
    c.__name__ for c in [
        CarrollMeasure,
        FrequencyMeasure,
        GeneralizedMeasure,
        JuillandMeasure,
        Measure,
        RangeMeasure,
        URMeasure,
        measure_from_label,
        measure_from_name,
    ]
]
