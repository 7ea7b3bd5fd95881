"""Contains classes representing configurations."""

from collections.abc import Mapping
from configparser import ConfigParser
from dataclasses import dataclass, field, fields
from re import sub as re_sub
from types import GenericAlias, UnionType
from typing import Any, Sequence, TypeVar

from .formats import OutputFormat

T = TypeVar('T', bound='AutoConvertFromStringDataClass')

_TRUE = frozenset(['1', 'yes', 'true', 'on'])
_FALSE = frozenset(['0', 'no', 'false', 'off'])


def _to_bool(value: Any) -> bool:
    if isinstance(value, str):
        v = value.strip().lower()
        if v in _TRUE:
            return True
        if v in _FALSE:
            return False
        raise ValueError(value)
    return bool(value)


@dataclass(frozen=True)
class AutoConvertFromStringDataClass:
    """Performs basic type conversion automatically.

    It is possible to pass strings to the constructor, and
    they will be converted into ``int``, ``float``, ``bool``, etc.

    If special types are required, sub-classes can
    override ``__post_init__``.
    """

    def __post_init__(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            t = f.type
            if isinstance(t, UnionType):
                if value is None:
                    continue
                t = next(a for a in t.__args__ if a is not type(None))
            if isinstance(t, GenericAlias):
                t = t.__origin__
            if isinstance(value, t) and not (t is int
                                             and isinstance(value, bool)):
                continue
            try:
                converted = _to_bool(value) if t is bool else t(value)
            except (ValueError, TypeError) as e:
                raise TypeError(f'Field {f.name} must be {t.__name__}; '
                                f'"{value}" is invalid') from e
            object.__setattr__(self, f.name, converted)

    @staticmethod
    def __to_snake_case(s: str) -> str:
        # AbcDefGhi -> abc_def_ghi
        return re_sub('[A-Z]', lambda c: '_' + c.group().lower(), s).strip('_')

    @classmethod
    def from_mapping(cls: type[T], m: Mapping[str, Any]) -> T:
        """Create an instance using attributes from a mapping.

        Keys are converted to snake case. Empty values are ignored, so
        the corresponding fields keep their defaults.

        Args:
            m: mapping to get the attributes from

        Returns:
            AutoConvertFromStringDataClass: an instance \
                with its attributes filled
        """  # noqa: DAR203
        # noinspection PyArgumentList
        return cls(**{
            cls.__to_snake_case(k): v
            for k, v in m.items() if v is not None and v != ''
        })


@dataclass(frozen=True)
class TokenizerConfig(AutoConvertFromStringDataClass):
    """Represents the rules used to split texts into word tokens."""

    hyphen_is_letter: bool = True
    """Whether hyphens (U+002D and U+2010) are part of words

    Leading and trailing hyphens are always removed from tokens.
    """

    case_fold: bool = True
    """Whether tokens are case-folded (full Unicode case folding)"""

    extra_letter_chars: frozenset[str] = field(default_factory=frozenset)
    """Additional characters treated as letters (e.g. an apostrophe)"""

    def __post_init__(self) -> None:
        super().__post_init__()
        for c in self.extra_letter_chars:
            if len(c) != 1 or c.isspace():
                raise TypeError('Field extra_letter_chars must contain '
                                f'single non-space characters; "{c}" is '
                                'invalid')


@dataclass(frozen=True)
class CorpusConfig(AutoConvertFromStringDataClass):
    """Represents configuration related to corpus ingestion."""

    workers: int = 1
    """Number of worker processes used to count tokens per document"""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.workers < 1:
            raise TypeError('Field workers must be a positive integer; '
                            f'"{self.workers}" is invalid')


@dataclass(frozen=True)
class OutputConfig(AutoConvertFromStringDataClass):
    """Represents configuration related to command output."""

    format: OutputFormat = OutputFormat.TSV
    """Default output format"""


@dataclass(frozen=True)
class Config:
    """Represents a complete configuration."""

    tokenizer: TokenizerConfig = field(default_factory=TokenizerConfig)
    """Tokenizer settings"""

    corpus: CorpusConfig = field(default_factory=CorpusConfig)
    """Corpus ingestion settings"""

    output: OutputConfig = field(default_factory=OutputConfig)
    """Output settings"""

    @classmethod
    def read_settings(cls, fn: str) -> 'Config':
        """Read settings from a configuration file.

        A missing file or a missing section leaves the corresponding
        settings at their defaults.

        Args:
            fn: name of the configuration file

        Returns:
            parsed configuration
        """
        cp = ConfigParser(interpolation=None)
        cp.optionxform = str  # type: ignore # do not convert to lower-case
        cp.read(fn, encoding='utf-8')

        def section(name: str) -> Mapping[str, str]:
            return cp[name] if cp.has_section(name) else {}

        return cls(
            TokenizerConfig.from_mapping(section('Tokenizer')),
            CorpusConfig.from_mapping(section('Corpus')),
            OutputConfig.from_mapping(section('Output')),
        )


__all__: Sequence[str] = [
    c.__name__ for c in [
        Config,
        CorpusConfig,
        OutputConfig,
        TokenizerConfig,
    ]
]
