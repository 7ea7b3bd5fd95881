"""Reads documents and reads/writes frequency tables.

A table is stored as a TSV file (header ``word<TAB>cat1...<TAB>catN``, one
row per word sorted by word, LF line endings) and a sidecar INI file
(same name plus ``.meta``) with the category names and sizes and the
tokenizer settings.
"""

from __future__ import annotations

from configparser import ConfigParser
from configparser import Error as ConfigParserError
from io import StringIO
from pathlib import Path
from typing import Sequence

from packaging.version import InvalidVersion
from packaging.version import parse as parse_version
from structlog import getLogger

from ..config import TokenizerConfig
from ..errors import CorpusError, IngestionError, TableFormatError
from .table import CorpusTable

_logger = getLogger(__name__)

TABLE_FORMAT_VERSION = '1.0.0'
"""Version of the sidecar format written by this module"""

SIDECAR_SUFFIX = '.meta'
"""Appended to a table file name to obtain its sidecar file name"""


def _read_text(path: Path) -> str:
    try:
        data = path.read_bytes()
    except OSError as e:
        raise IngestionError(path, e.strerror or 'cannot read file') from e
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as e:
        raise IngestionError(path, 'invalid UTF-8', e.start) from e


def _read_manifest(path: Path) -> list[tuple[str, Path]]:
    items = []
    for i, line in enumerate(_read_text(path).splitlines(), 1):
        if not line.strip() or line.lstrip().startswith('#'):
            continue
        name, sep, doc = line.partition('\t')
        if not sep or not name or not doc.strip():
            raise TableFormatError(path, 'expected "name<TAB>path"', i)
        doc_path = Path(doc.strip())
        if not doc_path.is_absolute():
            doc_path = path.parent / doc_path
        items.append((name, doc_path))
    return items


def read_documents(path: str | Path) -> list[tuple[str, str]]:
    """Read the documents of a corpus.

    ``path`` is either a directory, where each non-hidden regular file
    (sorted by name) is a document named after its stem, or a manifest
    file with lines ``name<TAB>path`` (relative paths are resolved against
    the manifest directory; blank lines and lines starting with ``#`` are
    ignored).

    Args:
        path: directory or manifest file

    Raises:
        IngestionError: if the path or a document cannot be read
        CorpusError: if there are no documents

    Returns:
        pairs (name, text), in corpus order
    """
    path = Path(path)
    log = _logger.bind(path=str(path))
    if path.is_dir():
        items = [(f.stem, f) for f in sorted(path.iterdir())
                 if f.is_file() and not f.name.startswith('.')]
    elif path.is_file():
        items = _read_manifest(path)
    else:
        raise IngestionError(path, 'no such file or directory')
    if not items:
        raise CorpusError(f'empty corpus: no documents in {path}')
    documents = [(name, _read_text(p)) for name, p in items]
    log.info('documents read', documents=len(documents))
    return documents


def sidecar_path(path: str | Path) -> Path:
    """Return the name of the sidecar file of a table.

    Args:
        path: table file name

    Returns:
        the sidecar file name
    """
    path = Path(path)
    return path.with_name(path.name + SIDECAR_SUFFIX)


def table_to_tsv(table: CorpusTable) -> str:
    """Serialize the counts of a table.

    Args:
        table: the table

    Raises:
        CorpusError: if a category name contains a tab or a line break

    Returns:
        the TSV text
    """
    for name in table.category_names:
        if any(c in name for c in '\t\r\n'):
            raise CorpusError(f'category name cannot be stored: {name!r}')
    lines = ['\t'.join(['word'] + table.category_names)]
    for word in sorted(table.entries):
        counts = table.entries[word].counts
        lines.append('\t'.join([word] + [str(c) for c in counts]))
    return '\n'.join(lines) + '\n'


def table_metadata(table: CorpusTable) -> str:
    """Serialize the metadata of a table.

    Args:
        table: the table

    Returns:
        the sidecar INI text
    """
    cp = ConfigParser(interpolation=None)
    cp.optionxform = str  # type: ignore # do not convert to lower-case
    cp['Table'] = {
        'FormatVersion': TABLE_FORMAT_VERSION,
        'TotalTokens': str(table.total_tokens),
        'Categories': str(table.n_categories),
    }
    cp['CategoryNames'] = {str(c.id): c.name for c in table.categories}
    cp['CategorySizes'] = {
        str(c.id): str(c.size_tokens)
        for c in table.categories
    }
    if (tok := table.tokenizer) is not None:
        cp['Tokenizer'] = {
            'HyphenIsLetter': 'yes' if tok.hyphen_is_letter else 'no',
            'CaseFold': 'yes' if tok.case_fold else 'no',
            'ExtraLetterChars': ''.join(sorted(tok.extra_letter_chars)),
        }
    out = StringIO()
    cp.write(out)
    return out.getvalue()


def write_table(table: CorpusTable, path: str | Path) -> None:
    """Write a table and its sidecar file.

    Args:
        table: the table
        path: name of the TSV file
    """
    path = Path(path)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(table_to_tsv(table))
    with open(sidecar_path(path), 'w', encoding='utf-8', newline='\n') as f:
        f.write(table_metadata(table))
    _logger.info('table written', path=str(path), **table.summary())


def _parse_tsv(path: Path,
               text: str) -> tuple[list[str], dict[str, list[int]]]:
    lines = [line.rstrip('\r') for line in text.split('\n')]
    if not lines or not lines[0].startswith('word'):
        raise TableFormatError(path, 'missing header "word<TAB>..."', 1)
    header = lines[0].split('\t')
    if header[0] != 'word':
        raise TableFormatError(path, 'missing header "word<TAB>..."', 1)
    names = header[1:]
    rows: dict[str, list[int]] = {}
    for i, line in enumerate(lines[1:], 2):
        if not line:
            continue
        word, *values = line.split('\t')
        if len(values) != len(names):
            raise TableFormatError(
                path, f'expected {len(names)} counts, got {len(values)}', i)
        if word in rows:
            raise TableFormatError(path, f'duplicate word "{word}"', i)
        try:
            counts = [int(v) for v in values]
        except ValueError as e:
            raise TableFormatError(path, 'counts must be integers', i) from e
        if any(c < 0 for c in counts) or not any(counts):
            raise TableFormatError(
                path, 'counts must be non-negative and not all zero', i)
        rows[word] = counts
    return names, rows


def _check_metadata(path: Path, table: CorpusTable) -> TokenizerConfig | None:
    meta_path = sidecar_path(path)
    if not meta_path.exists():
        _logger.debug('no sidecar file', path=str(meta_path))
        return None
    cp = ConfigParser(interpolation=None)
    cp.optionxform = str  # type: ignore # do not convert to lower-case
    try:
        cp.read_string(_read_text(meta_path), str(meta_path))
        info = cp['Table']
        version = parse_version(info['FormatVersion'])
        n = table.n_categories
        names = [cp['CategoryNames'][str(i)] for i in range(n)]
        sizes = [int(cp['CategorySizes'][str(i)]) for i in range(n)]
        total = int(info['TotalTokens'])
        n_meta = int(info['Categories'])
    except (ConfigParserError, KeyError, ValueError, InvalidVersion) as e:
        raise TableFormatError(meta_path, f'invalid sidecar file: {e}') from e
    if version > parse_version(TABLE_FORMAT_VERSION):
        raise TableFormatError(
            meta_path, f'unsupported format version {version} '
            f'(newest known: {TABLE_FORMAT_VERSION})')
    if (n_meta != n or names != table.category_names
            or sizes != table.category_sizes
            or total != table.total_tokens):
        raise TableFormatError(meta_path,
                               'sidecar file does not match the table')
    if not cp.has_section('Tokenizer'):
        return None
    try:
        return TokenizerConfig.from_mapping(cp['Tokenizer'])
    except TypeError as e:
        raise TableFormatError(meta_path, str(e)) from e


def read_table(path: str | Path) -> CorpusTable:
    """Read a table written by :func:`write_table`.

    The sidecar file is optional; if present, it must agree with the TSV
    file.

    Args:
        path: name of the TSV file

    Raises:
        TableFormatError: if the files cannot be parsed or disagree

    Returns:
        the table
    """
    path = Path(path)
    try:
        text = _read_text(path)
    except IngestionError as e:
        raise TableFormatError(path, str(e)) from e
    names, rows = _parse_tsv(path, text)
    try:
        table = CorpusTable.from_counts(names, rows)
    except CorpusError as e:
        raise TableFormatError(path, str(e)) from e
    if (tokenizer := _check_metadata(path, table)) is not None:
        table = CorpusTable(table.categories, table.entries, tokenizer)
    _logger.debug('table read', path=str(path), **table.summary())
    return table


__all__: Sequence[str] = ['SIDECAR_SUFFIX', 'TABLE_FORMAT_VERSION'] + [
    c.__name__ for c in [
        read_documents,
        read_table,
        sidecar_path,
        table_metadata,
        table_to_tsv,
        write_table,
    ]
]
