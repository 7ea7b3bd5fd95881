"""Implements the commands of the command-line interface.

Each command returns 0 if no errors occurred and 1 otherwise. Data goes to
the output file (or standard output); diagnostics go to the log.
"""

from __future__ import annotations

import sys
from functools import reduce, wraps
from pathlib import Path
from typing import Any, Callable, Sequence, TypeVar, cast

from structlog import getLogger

from .config import TokenizerConfig
from .corpus.io import read_documents, read_table, table_to_tsv, write_table
from .corpus.table import CorpusTable, build_table, merge_tables
from .demo import demo_rows, demo_rows_as_dicts, demo_table, format_demo_rows
from .errors import LexUsageError, PoolingError, TableFormatError
from .formats import OutputFormat, format_decimal
from .lexicon.compare import compare
from .lexicon.dictionary import (pool_ur, rank, select_by_threshold,
                                 select_top)
from .lexicon.io import (MEASURE_PREFIX, format_dictionary, format_report,
                         read_dictionary, to_json)
from .lexicon.kinds import Measure
from .measures import law_curves

_logger = getLogger(__name__)

FunT = TypeVar('FunT', bound=Callable[..., int])


def _command(func: FunT) -> FunT:

    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> int:
        log = _logger.bind(command=func.__name__.removeprefix('cmd_'))
        try:
            return func(*args, **kwargs)
        except LexUsageError as e:
            log.error(str(e))
        except OSError as e:
            log.error('I/O error', path=e.filename, error=e.strerror)
        return 1

    return cast(FunT, wrapper)


def _emit(text: str, output: str | Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(output, 'w', encoding='utf-8', newline='\n') as f:
        f.write(text)
    _logger.debug('output written', path=str(output))


def _emit_table(table: CorpusTable, output: str | Path | None) -> None:
    if output is None:
        _emit(table_to_tsv(table), None)
    else:
        write_table(table, output)


@_command
def cmd_analyze(corpus_path: str | Path,
                tokenizer: TokenizerConfig = TokenizerConfig(),
                workers: int = 1,
                output: str | Path | None = None) -> int:
    """Count the words of a corpus and write the frequency table.

    Args:
        corpus_path: directory of documents or manifest file
        tokenizer: tokenization rules
        workers: number of processes counting documents in parallel
        output: name of the table file (standard output if omitted; the
            sidecar file is only written to a file)

    Returns:
        0 if no errors occurred, 1 otherwise
    """
    documents = read_documents(corpus_path)
    table = build_table(documents, tokenizer, workers)
    _emit_table(table, output)
    _logger.info('corpus analyzed',
                 path=str(corpus_path),
                 **table.summary())
    return 0


@_command
def cmd_rank(table_path: str | Path,
             measure: Measure,
             top: int | None = None,
             min_freq: int | None = None,
             output: str | Path | None = None,
             fmt: OutputFormat = OutputFormat.TSV) -> int:
    """Rank the words of a table.

    Args:
        table_path: name of the table file
        measure: measure to rank by
        top: keep only this number of words (optional)
        min_freq: keep only words with at least this frequency (optional,
            frequency measure only)
        output: output file name (standard output if omitted)
        fmt: output format

    Returns:
        0 if no errors occurred, 1 otherwise
    """
    d = rank(read_table(table_path), measure)
    if min_freq is not None:
        d = select_by_threshold(d, min_freq)
    if top is not None:
        d = select_top(d, top)
    _emit(format_dictionary(d, fmt), output)
    _logger.info('words ranked', measure=measure.label, words=len(d))
    return 0


@_command
def cmd_table_demo(output: str | Path | None = None,
                   fmt: OutputFormat = OutputFormat.TSV,
                   counts: bool = False) -> int:
    """Print U, U_m and U_R for Juilland and Carroll's nine words.

    Args:
        output: output file name (standard output if omitted)
        fmt: output format
        counts: emit the demo frequencies as a table file instead

    Returns:
        0 if no errors occurred, 1 otherwise
    """
    if counts:
        _emit_table(demo_table(), output)
    elif fmt is OutputFormat.STRUCTURED:
        _emit(to_json(demo_rows_as_dicts(demo_rows())), output)
    else:
        _emit(format_demo_rows(demo_rows()), output)
    return 0


@_command
def cmd_compare(path_a: str | Path,
                path_b: str | Path,
                n: int,
                output: str | Path | None = None,
                fmt: OutputFormat = OutputFormat.TSV) -> int:
    """Compare the top zones of two ranked dictionaries.

    Args:
        path_a: first dictionary file
        path_b: second dictionary file
        n: size of the top zones
        output: output file name (standard output if omitted)
        fmt: output format

    Returns:
        0 if no errors occurred, 1 otherwise
    """
    report = compare(read_dictionary(path_a), read_dictionary(path_b), n)
    _emit(format_report(report, fmt), output)
    _logger.info('dictionaries compared', n=n, common=report.common)
    return 0


def _input_kind(path: Path) -> str:
    try:
        with open(path, encoding='utf-8') as f:
            first = f.readline()
    except UnicodeDecodeError as e:
        raise TableFormatError(path, 'invalid UTF-8', 1) from e
    if first.startswith('word\t') or first.rstrip('\r\n') == 'word':
        return 'table'
    if first.lstrip().startswith('{'):
        return 'dictionary'
    if first.startswith(MEASURE_PREFIX):
        return 'rounded dictionary'
    raise TableFormatError(path, 'neither a table nor a dictionary', 1)


@_command
def cmd_merge(paths: Sequence[str | Path],
              output: str | Path | None = None,
              fmt: OutputFormat = OutputFormat.TSV) -> int:
    """Pool tables (appending categories) or U_R dictionaries.

    Every input takes part, including one given more than once. Dictionaries
    must be structured (JSON) files: the rounded scores of TSV dictionaries
    would not add up to the scores of the pooled corpus.

    Args:
        paths: input files, all tables or all structured dictionaries
        output: output file name (standard output if omitted)
        fmt: output format of pooled dictionaries

    Raises:
        PoolingError: if tables and dictionaries are mixed or a dictionary
            is a TSV file

    Returns:
        0 if no errors occurred, 1 otherwise
    """
    inputs = [(Path(p), _input_kind(Path(p))) for p in paths]
    kinds = {'table' if k == 'table' else 'dictionary' for _, k in inputs}
    if len(kinds) != 1:
        raise PoolingError('cannot pool tables and dictionaries together')
    if kinds == {'table'}:
        table = reduce(merge_tables, (read_table(p) for p, _ in inputs))
        _emit_table(table, output)
        _logger.info('tables merged', inputs=len(inputs), **table.summary())
        return 0
    if (rounded := [str(p) for p, k in inputs if k == 'rounded dictionary']):
        raise PoolingError(
            'TSV dictionaries hold rounded scores and cannot be pooled; '
            'rank with --format structured instead: ' + ', '.join(rounded))
    d = pool_ur([read_dictionary(p) for p, _ in inputs])
    _emit(format_dictionary(d, fmt), output)
    _logger.info('dictionaries pooled', inputs=len(inputs), words=len(d))
    return 0


@_command
def cmd_curves(max_f: int,
               output: str | Path | None = None,
               fmt: OutputFormat = OutputFormat.TSV) -> int:
    """Tabulate Stevens', harmonic and Weber-Fechner reactions.

    Args:
        max_f: largest frequency
        output: output file name (standard output if omitted)
        fmt: output format

    Returns:
        0 if no errors occurred, 1 otherwise
    """
    points = law_curves(max_f)
    if fmt is OutputFormat.STRUCTURED:
        _emit(to_json([p._asdict() for p in points]), output)
        return 0
    lines = ['F\tstevens\tharmonic\tweber_fechner']
    lines += [
        '\t'.join([str(p.f)] + [
            format_decimal(v, 4)
            for v in (p.stevens, p.harmonic, p.weber_fechner)
        ]) for p in points
    ]
    _emit('\n'.join(lines) + '\n', output)
    return 0


__all__: Sequence[str] = [
    c.__name__ for c in [
        cmd_analyze,
        cmd_compare,
        cmd_curves,
        cmd_merge,
        cmd_rank,
        cmd_table_demo,
    ]
]
