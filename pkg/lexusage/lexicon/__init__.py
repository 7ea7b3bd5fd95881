"""Ranks, selects, pools and compares the words of frequency tables."""

from .compare import ComparisonReport, compare
from .dictionary import (DictionaryEntry, RankedDictionary, pool_ur, rank,
                         select_by_threshold, select_top)
from .kinds import (CarrollMeasure, FrequencyMeasure, GeneralizedMeasure,
                    JuillandMeasure, Measure, RangeMeasure, URMeasure,
                    measure_from_label, measure_from_name)

__all__ = [
    'CarrollMeasure',
    'ComparisonReport',
    'DictionaryEntry',
    'FrequencyMeasure',
    'GeneralizedMeasure',
    'JuillandMeasure',
    'Measure',
    'RangeMeasure',
    'RankedDictionary',
    'URMeasure',
    'compare',
    'measure_from_label',
    'measure_from_name',
    'pool_ur',
    'rank',
    'select_by_threshold',
    'select_top',
]
