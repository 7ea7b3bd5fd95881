"""Exceptions raised by the library."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence


class LexUsageError(Exception):
    """Base class of all errors raised by this package."""


class MeasureDomainError(LexUsageError, ValueError):
    """A measure was applied outside of the domain where it is defined."""


class MeasureKindError(LexUsageError, ValueError):
    """An operation received a dictionary ranked by an unexpected measure."""


class CorpusError(LexUsageError, ValueError):
    """A corpus cannot be built (no documents, duplicate names...)."""


class PoolingError(LexUsageError, ValueError):
    """Tables or dictionaries cannot be pooled together."""


class ComparisonError(LexUsageError, ValueError):
    """Two dictionaries cannot be compared."""


class IngestionError(LexUsageError):
    """A document could not be read or decoded."""

    def __init__(self,
                 path: str | Path,
                 message: str,
                 offset: int | None = None):
        """
        Args:
            path: the document path
            message: description of the problem
            offset: byte offset of an invalid sequence, if applicable
        """  # noqa:D205,D400
        self.path = str(path)
        """Path of the document"""

        self.offset = offset
        """Byte offset of the problem, or ``None``"""

        where = f' (byte offset {offset})' if offset is not None else ''
        super().__init__(f'{self.path}: {message}{where}')


class TableFormatError(LexUsageError):
    """A serialized table or dictionary could not be parsed."""

    def __init__(self,
                 path: str | Path,
                 message: str,
                 line: int | None = None):
        """
        Args:
            path: the file path
            message: description of the problem
            line: 1-based line number, if applicable
        """  # noqa:D205,D400
        self.path = str(path)
        """Path of the file"""

        self.line = line
        """1-based line number, or ``None``"""

        where = f':{line}' if line is not None else ''
        super().__init__(f'{self.path}{where}: {message}')


__all__: Sequence[str] = [
    c.__name__ for c in [
        ComparisonError,
        CorpusError,
        IngestionError,
        LexUsageError,
        MeasureDomainError,
        MeasureKindError,
        PoolingError,
        TableFormatError,
    ]
]
