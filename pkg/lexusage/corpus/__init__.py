"""Turns plain-text documents into per-category word frequency tables."""

from .table import Category, CorpusTable, build_table, merge_tables
from .tokenizer import count_tokens, tokenize

__all__ = [
    'Category',
    'CorpusTable',
    'build_table',
    'count_tokens',
    'merge_tables',
    'tokenize',
]
