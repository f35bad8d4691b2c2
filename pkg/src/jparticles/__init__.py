"""Typed particle hierarchy and head-final chart parsing for romanized Japanese."""
from .chart import ParseResult, parse, parse_corpus, read_corpus
from .data import bundled_lattice, bundled_lexicon
from .lattice import BOTTOM, TypeLattice, load_hierarchy
from .lexicon import Lexicon, load_lexicon

__version__ = "0.1.0"

__all__ = [
    "BOTTOM",
    "Lexicon",
    "ParseResult",
    "TypeLattice",
    "bundled_lattice",
    "bundled_lexicon",
    "load_hierarchy",
    "load_lexicon",
    "parse",
    "parse_corpus",
    "read_corpus",
]
