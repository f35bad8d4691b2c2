"""Head features, valence slots and semantic sorts.

The feature set is fixed and flat; nothing here needs general DAG
unification.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

POS = ("noun", "verb", "adjective", "adverb", "adnominal", "particle", "utterance")
CASES = ("ga", "wo", "ni", "to")
SORTS = ("temporal", "human", "situation", "place", "object", "event", "any")
ROLES = ("subj", "obj", "iobj", "compl")

# categories a SubcatSpec may name besides particle types
PHRASE_CATEGORIES = ("noun", "verb", "adjective", "utterance", "question-clause")

OPTIONAL = "optional"
ADJACENT = "adjacent"
SATURATED = "saturated"

# mod target "verb" covers every predicate: adjectives predicate like verbs
PREDICATIVE = ("verb", "adjective")


def sort_satisfies(constraint: str | frozenset[str], value: str) -> bool:
    """``any`` as a constraint accepts everything; otherwise exact match."""
    if isinstance(constraint, str):
        return constraint == "any" or constraint == value
    return "any" in constraint or value in constraint


@dataclass(frozen=True)
class ModTarget:
    target_pos: str
    nonaux_only: bool = False
    target_sort: str = "any"

    def __post_init__(self):
        if self.target_pos not in ("noun", "verb"):
            raise ValueError(f"bad MOD target: {self.target_pos!r}")


@dataclass(frozen=True)
class Head:
    pos: str
    ptype: str | None = None
    case: str | None = None
    mod: ModTarget | None = None
    spec: None = None
    aux: bool = False
    question: bool = False

    def with_mod(self, mod: ModTarget | None) -> "Head":
        return replace(self, mod=mod)


@dataclass(frozen=True)
class ValenceSlot:
    role: str
    case: str
    sort: str = "any"
    status: str = OPTIONAL
    filler: tuple[int, int] | None = None

    def __post_init__(self):
        if (self.status == SATURATED) != (self.filler is not None):
            raise ValueError("a slot is saturated iff it has a filler")

    @property
    def open(self) -> bool:
        return self.status != SATURATED

    def saturate(self, span: tuple[int, int]) -> "ValenceSlot":
        return replace(self, status=SATURATED, filler=span)


@dataclass(frozen=True)
class SubcatSpec:
    takes: frozenset[str]
    adjacent: bool = True
    sort: frozenset[str] = frozenset({"any"})

    def __post_init__(self):
        if not self.takes:
            raise ValueError("subcat must name at least one category")
