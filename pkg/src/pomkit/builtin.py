"""Registry of the bundled worked examples.

The finite examples live as ``.pom`` files under ``pomkit/data``.  ``ex4_4``
is the integer example; it is infinite, so the registry only marks it and the
``demo zz`` command runs its windowed check.
"""
from functools import lru_cache
from importlib import resources

from .fileformat import Document, parse

FILES = ("ex2_2.pom", "ex2_3.pom", "ex2_4.pom", "ex_comm3.pom")
EXAMPLES = ("ex2_2", "ex2_3", "ex2_4", "ex_comm3", "ex4_4")
DEMOS = {"ex4_4": "Z acting trivially on Z with a non-trivial xi; run `pomkit demo zz`"}

# Table for the five-element left-normal example exactly as published.  It is
# not associative, so the registry ships a corrected column 3 instead (see
# data/ex2_3.pom).
EX2_3_PRINTED_TABLE = (
    (0, 1, 2, 3, 4),
    (1, 1, 2, 2, 4),
    (2, 1, 2, 1, 4),
    (3, 1, 2, 1, 4),
    (4, 4, 4, 4, 4),
)


def example_text(filename):
    return resources.files("pomkit").joinpath("data", filename).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def _load():
    doc = Document()
    for fn in FILES:
        for block in parse(example_text(fn)).blocks.values():
            doc.add(block)
    return doc


def builtin_examples():
    """A fresh Document holding every bundled block, plus demo markers."""
    src = _load()
    return Document(dict(src.blocks), dict(DEMOS))


def is_builtin(name):
    return name in EXAMPLES
