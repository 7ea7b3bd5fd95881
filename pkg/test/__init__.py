import logging
import re
import unittest
from collections import Counter
from functools import wraps
from pathlib import Path
from typing import Any, Callable, TypeVar, cast

from faker import Faker
from pyfakefs.fake_filesystem_unittest import Patcher

from lexusage.cli import setup_logger

FIXTURES = Path(__file__).parent / 'fixtures'
"""Directory with the test corpora"""

FABLES = FIXTURES / 'fables'
"""Ten short public-domain fables, one per file"""

# (word, U, U_m, U_R) as printed in Juilland and Carroll's table
DEMO_PRINTED = [
    ('1', 5.00, 5.00, 5.00),
    ('2', 3.42, 4.31, 4.50),
    ('3', 2.76, 3.62, 4.00),
    ('4', 2.26, 3.36, 3.83),
    ('5', 1.84, 2.67, 3.33),
    ('6', 1.13, 2.24, 3.08),
    ('7', 0.00, 1.00, 2.28),
    ('8', 5.82, 7.41, 5.75),
    ('9', 5.00, 8.10, 6.45),
]

fake = Faker()

_ORACLE_TOKEN = re.compile(r'[A-Za-z]+(?:-+[A-Za-z]+)*')


def oracle_counts(text: str) -> Counter[str]:
    """Count the words of an ASCII text without the tokenizer."""
    return Counter(m.group().lower() for m in _ORACLE_TOKEN.finditer(text))


def random_corpus(seed: int, documents: int) -> list[tuple[str, str]]:
    """Generate a corpus of lorem ipsum texts of different lengths."""
    fake.seed_instance(seed)
    return [(f'text{i:02}',
             fake.paragraph(nb_sentences=fake.random_int(1, 30)))
            for i in range(documents)]


FunT = TypeVar('FunT', bound=Callable[..., Any])


def fakefs(func: FunT) -> FunT:

    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        with Patcher() as p:
            p.fs.add_real_directory(str(FIXTURES))
            func(*args, **kwargs)

    return cast(FunT, wrapper)


class BaseTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls) -> None:
        setup_logger(logging.CRITICAL)
