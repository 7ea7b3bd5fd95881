"""Reads and writes ranked dictionaries and comparison reports.

TSV dictionaries start with a ``# measure: <label>`` line followed by the
header ``rank<TAB>word<TAB>score<TAB>freq``; scores are rounded to four
decimals. The structured format is a JSON document with the same fields
and full-precision scores.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Sequence

from structlog import getLogger

from ..errors import LexUsageError, TableFormatError
from ..formats import OutputFormat, format_decimal
from .compare import ComparisonReport
from .dictionary import DictionaryEntry, RankedDictionary
from .kinds import measure_from_label

_logger = getLogger(__name__)

SCORE_DECIMALS = 4
"""Number of decimals of the scores in TSV files"""

DICTIONARY_HEADER = 'rank\tword\tscore\tfreq'
"""Header line of TSV dictionaries"""

MEASURE_PREFIX = '# measure:'
"""Prefix of the first line of TSV dictionaries"""


def to_json(obj: Any) -> str:
    """Serialize an object as a deterministic JSON document.

    Args:
        obj: the object

    Returns:
        the JSON text, ending with a line break
    """
    return json.dumps(obj, ensure_ascii=False, indent=2) + '\n'


def dictionary_as_dict(dictionary: RankedDictionary) -> dict[str, Any]:
    """Prepare a dictionary to be serialized.

    Args:
        dictionary: the ranked dictionary

    Returns:
        a dictionary with the measure label and the entries
    """
    return {
        'measure': dictionary.measure.label,
        'entries': [e._asdict() for e in dictionary.entries],
    }


def format_dictionary(dictionary: RankedDictionary,
                      fmt: OutputFormat) -> str:
    """Serialize a ranked dictionary.

    Args:
        dictionary: the ranked dictionary
        fmt: output format

    Returns:
        the serialized dictionary
    """
    if fmt is OutputFormat.STRUCTURED:
        return to_json(dictionary_as_dict(dictionary))
    lines = [f'{MEASURE_PREFIX} {dictionary.measure.label}', DICTIONARY_HEADER]
    lines += [
        f'{e.rank}\t{e.word}\t{format_decimal(e.score, SCORE_DECIMALS)}'
        f'\t{e.freq}' for e in dictionary.entries
    ]
    return '\n'.join(lines) + '\n'


def format_report(report: ComparisonReport, fmt: OutputFormat) -> str:
    """Serialize a comparison report.

    Args:
        report: the report
        fmt: output format

    Returns:
        the serialized report
    """
    if fmt is OutputFormat.STRUCTURED:
        return to_json(report.as_dict())
    lines = [
        f'n\t{report.n}',
        f'common\t{report.common}',
        f'jaccard\t{format_decimal(report.jaccard, SCORE_DECIMALS)}',
        '\t'.join(['only_a', *report.only_a]),
        '\t'.join(['only_b', *report.only_b]),
    ]
    return '\n'.join(lines) + '\n'


def _parse_json(path: Path, text: str) -> RankedDictionary:
    try:
        doc = json.loads(text)
        measure = measure_from_label(doc['measure'])
        entries = tuple(
            DictionaryEntry(int(e['rank']), str(e['word']), float(
                e['score']), int(e['freq'])) for e in doc['entries'])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError,
            LexUsageError) as e:
        raise TableFormatError(path, f'invalid dictionary: {e}') from e
    try:
        return RankedDictionary(measure, entries)
    except ValueError as e:
        raise TableFormatError(path, str(e)) from e


def _parse_tsv(path: Path, text: str) -> RankedDictionary:
    lines = [line.rstrip('\r') for line in text.split('\n')]
    if not lines[0].startswith(MEASURE_PREFIX):
        raise TableFormatError(path, f'expected "{MEASURE_PREFIX} <label>"',
                               1)
    try:
        measure = measure_from_label(lines[0][len(MEASURE_PREFIX):])
    except LexUsageError as e:
        raise TableFormatError(path, str(e), 1) from e
    if len(lines) < 2 or lines[1] != DICTIONARY_HEADER:
        raise TableFormatError(path, f'expected header "{DICTIONARY_HEADER}"',
                               2)
    entries = []
    for i, line in enumerate(lines[2:], 3):
        if not line:
            continue
        fields = line.split('\t')
        if len(fields) != 4:
            raise TableFormatError(path,
                                   f'expected 4 fields, got {len(fields)}', i)
        try:
            entries.append(
                DictionaryEntry(int(fields[0]), fields[1], float(fields[2]),
                                int(fields[3])))
        except ValueError as e:
            raise TableFormatError(path, f'invalid number: {e}', i) from e
    try:
        return RankedDictionary(measure, tuple(entries))
    except ValueError as e:
        raise TableFormatError(path, str(e)) from e


def read_dictionary(path: str | Path) -> RankedDictionary:
    """Read a dictionary written by :func:`format_dictionary`.

    The format (TSV or JSON) is detected from the contents.

    Args:
        path: file name

    Raises:
        TableFormatError: if the file cannot be read or parsed

    Returns:
        the ranked dictionary
    """
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except (OSError, UnicodeDecodeError) as e:
        raise TableFormatError(path, f'cannot read dictionary: {e}') from e
    d = (_parse_json(path, text)
         if text.lstrip().startswith('{') else _parse_tsv(path, text))
    _logger.debug('dictionary read',
                  path=str(path),
                  measure=d.measure.label,
                  words=len(d))
    return d


__all__: Sequence[str] = [
    'DICTIONARY_HEADER', 'MEASURE_PREFIX', 'SCORE_DECIMALS'
] + [
    c.__name__ for c in [
        dictionary_as_dict,
        format_dictionary,
        format_report,
        read_dictionary,
        to_json,
    ]
]
