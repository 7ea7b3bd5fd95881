"""Contains the frequency table of a corpus and the operations building it."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from types import MappingProxyType
from typing import Any, Mapping, Sequence

from structlog import getLogger

from ..config import TokenizerConfig
from ..errors import CorpusError, PoolingError
from ..measures import FrequencyDistribution
from .tokenizer import count_tokens

_logger = getLogger(__name__)


@dataclass(frozen=True)
class Category:
    """Represents one completed text of a corpus."""

    id: int
    """Position of the category in the corpus (0-based)"""

    name: str
    """Category name (file stem or manifest label)"""

    size_tokens: int
    """Number of word tokens in the category"""


@dataclass(frozen=True)
class CorpusTable:
    """Per-category frequencies of every word of a corpus.

    Instances are immutable; use :func:`build_table`,
    :func:`merge_tables` or :meth:`from_counts` to create them.
    """

    categories: tuple[Category, ...]
    """Categories, in corpus order"""

    entries: Mapping[str, FrequencyDistribution]
    """Word distributions, sorted by word"""

    tokenizer: TokenizerConfig | None = field(default=None, compare=False)
    """Rules used to tokenize the texts, if known"""

    def __post_init__(self) -> None:
        names = [c.name for c in self.categories]
        if len(set(names)) != len(names):
            raise CorpusError('category names must be unique')
        if [c.id for c in self.categories] != list(range(len(names))):
            raise CorpusError('category ids must be 0, 1, 2...')
        n = len(self.categories)
        sizes = [0] * n
        for word, dist in self.entries.items():
            if dist.word != word or dist.n != n:
                raise CorpusError(f'inconsistent distribution for "{word}"')
            if dist.total == 0:
                raise CorpusError(f'"{word}" does not occur in the corpus')
            for i, c in enumerate(dist.counts):
                sizes[i] += c
        if sizes != [c.size_tokens for c in self.categories]:
            raise CorpusError('category sizes do not match word counts')
        entries = {w: self.entries[w] for w in sorted(self.entries)}
        object.__setattr__(self, 'entries', MappingProxyType(entries))

    @classmethod
    def from_counts(
            cls,
            names: Sequence[str],
            rows: Mapping[str, Sequence[int]],
            tokenizer: TokenizerConfig | None = None) -> CorpusTable:
        """Create a table from per-category counts.

        Category sizes are the column sums.

        Args:
            names: category names
            rows: counts of each word, one per category
            tokenizer: rules used to tokenize the texts, if known

        Returns:
            the table
        """
        n = len(names)
        sizes = [0] * n
        entries = {}
        for word, counts in rows.items():
            if len(counts) != n:
                raise CorpusError(f'"{word}" has {len(counts)} counts for '
                                  f'{n} categories')
            dist = FrequencyDistribution(word, tuple(counts))
            for i, c in enumerate(dist.counts):
                sizes[i] += c
            entries[word] = dist
        categories = tuple(
            Category(i, name, size)
            for i, (name, size) in enumerate(zip(names, sizes)))
        return cls(categories, entries, tokenizer)

    @property
    def n_categories(self) -> int:
        """Number of categories.

        Returns:
            the number of categories
        """
        return len(self.categories)

    @property
    def category_names(self) -> list[str]:
        """Category names, in corpus order.

        Returns:
            the names
        """
        return [c.name for c in self.categories]

    @property
    def category_sizes(self) -> list[int]:
        """Category sizes in tokens, in corpus order.

        Returns:
            the sizes
        """
        return [c.size_tokens for c in self.categories]

    @property
    def total_tokens(self) -> int:
        """Number of word tokens in the corpus.

        Returns:
            the sum of the category sizes
        """
        return sum(self.category_sizes)

    @property
    def vocabulary_size(self) -> int:
        """Number of distinct words.

        Returns:
            the number of entries
        """
        return len(self.entries)

    def distribution(self, word: str) -> FrequencyDistribution | None:
        """Return the distribution of a word.

        Args:
            word: the (normalized) word

        Returns:
            its distribution, or ``None`` if it does not occur
        """
        return self.entries.get(word)

    def hapax_legomena(self) -> list[str]:
        """List the words occurring exactly once in the corpus.

        Returns:
            the words, sorted
        """
        return [w for w, d in self.entries.items() if d.total == 1]

    def split(self) -> list[CorpusTable]:
        """Split the corpus into single-category tables.

        Returns:
            one table per category, in corpus order
        """
        tables = []
        for cat in self.categories:
            rows = {
                w: (d.counts[cat.id], )
                for w, d in self.entries.items() if d.counts[cat.id]
            }
            tables.append(
                CorpusTable.from_counts([cat.name], rows, self.tokenizer))
        return tables

    def summary(self) -> dict[str, Any]:
        """Summarize the table.

        Returns:
            number of categories, tokens, distinct words and hapax legomena
        """
        return {
            'categories': self.n_categories,
            'tokens': self.total_tokens,
            'vocabulary': self.vocabulary_size,
            'hapax': len(self.hapax_legomena()),
        }


def build_table(documents: Sequence[tuple[str, str]],
                config: TokenizerConfig = TokenizerConfig(),
                workers: int = 1) -> CorpusTable:
    """Count the words of a corpus, one category per document.

    Args:
        documents: pairs (name, text), in corpus order
        config: tokenization rules
        workers: number of processes counting documents in parallel

    Raises:
        CorpusError: if there are no documents or names are repeated

    Returns:
        the frequency table
    """
    if not documents:
        raise CorpusError('a corpus needs at least one document')
    names = [name for name, _ in documents]
    if (dup := [n for n, k in Counter(names).items() if k > 1]):
        raise CorpusError(f'duplicate document names: {", ".join(dup)}')
    texts = [text for _, text in documents]
    count = partial(count_tokens, config=config)
    if workers > 1 and len(texts) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            counters = list(executor.map(count, texts))
    else:
        counters = list(map(count, texts))
    for name, counter in zip(names, counters):
        _logger.debug('document counted',
                      category=name,
                      tokens=sum(counter.values()),
                      vocabulary=len(counter))
    vocabulary: set[str] = set().union(*counters)
    rows = {w: [c.get(w, 0) for c in counters] for w in vocabulary}
    return CorpusTable.from_counts(names, rows, config)


def merge_tables(a: CorpusTable, b: CorpusTable) -> CorpusTable:
    """Pool two corpora: the categories of ``b`` are appended to ``a``.

    Args:
        a: first table
        b: second table

    Raises:
        PoolingError: if both tables have categories with the same name

    Returns:
        the merged table
    """
    if (common := set(a.category_names) & set(b.category_names)):
        raise PoolingError('ambiguous pooling: category names in both '
                           f'tables: {", ".join(sorted(common))}')
    zeros_a = (0, ) * a.n_categories
    zeros_b = (0, ) * b.n_categories
    rows = {
        w: (da.counts if (da := a.distribution(w)) else zeros_a) +
        (db.counts if (db := b.distribution(w)) else zeros_b)
        for w in a.entries.keys() | b.entries.keys()
    }
    tokenizer = a.tokenizer if a.tokenizer == b.tokenizer else None
    if tokenizer is None and (a.tokenizer or b.tokenizer):
        _logger.warning('merging tables built with different tokenizers')
    return CorpusTable.from_counts(a.category_names + b.category_names, rows,
                                   tokenizer)


__all__: Sequence[str] = [
    c.__name__ for c in [
        Category,
        CorpusTable,
        build_table,
        merge_tables,
    ]
]
