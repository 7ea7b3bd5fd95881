"""Splits texts into word tokens."""

from __future__ import annotations

import unicodedata
from collections import Counter
from functools import lru_cache
from typing import Sequence

from ..config import TokenizerConfig

HYPHENS = '-\u2010'
"""Characters treated as hyphens (hyphen-minus and hyphen)

Dashes (en dash, em dash...) are separators.
"""


@lru_cache(maxsize=4096)
def _is_letter(c: str) -> bool:
    return unicodedata.category(c).startswith('L')


@lru_cache(maxsize=4096)
def _is_mark(c: str) -> bool:
    return unicodedata.category(c).startswith('M')


def tokenize(text: str,
             config: TokenizerConfig = TokenizerConfig()) -> list[str]:
    """Split a text into word tokens.

    A token is a maximal run of letters (Unicode category L), hyphens
    (if ``config.hyphen_is_letter``) and ``config.extra_letter_chars``.
    Combining marks (category M) belong to the word when they follow a
    letter, an extra letter character or another such mark, so decomposed
    accents and the marks produced by case folding (``İ`` folds to ``i``
    and a combining dot) do not split words. Leading and trailing hyphens
    are removed and runs made only of hyphens are dropped. Case folding,
    when enabled, is applied to the whole text before it is split, so
    tokenizing the space-joined tokens again yields the same list.

    Args:
        text: the text
        config: tokenization rules

    Returns:
        the tokens, in text order
    """
    if config.case_fold:
        text = text.casefold()
    extra = config.extra_letter_chars
    hyphen = config.hyphen_is_letter

    def is_word_char(c: str) -> bool:
        return _is_letter(c) or c in extra or (hyphen and c in HYPHENS)

    tokens = []
    chars: list[str] = []
    for c in text:
        if is_word_char(c) or (_is_mark(c) and chars
                               and chars[-1] not in HYPHENS):
            chars.append(c)
            continue
        if (token := ''.join(chars).strip(HYPHENS)):
            tokens.append(token)
        chars = []
    if (token := ''.join(chars).strip(HYPHENS)):
        tokens.append(token)
    return tokens


def count_tokens(text: str,
                 config: TokenizerConfig = TokenizerConfig()) -> Counter[str]:
    """Count the occurrences of each token in a text.

    Args:
        text: the text
        config: tokenization rules

    Returns:
        the frequency of each token
    """
    return Counter(tokenize(text, config))


__all__: Sequence[str] = ['HYPHENS'] + [
    c.__name__ for c in [
        count_tokens,
        tokenize,
    ]
]
