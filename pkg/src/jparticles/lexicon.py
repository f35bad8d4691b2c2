"""Lexical entries and the tab-separated lexicon format.

One entry per line::

    surface<TAB>pos<TAB>type-or-dash<TAB>key=value key=value ...

Keys: ``case``, ``mod`` (noun|verb), ``nonaux``, ``subcat`` (comma list),
``adjacent``, ``sort`` (``|`` separates alternatives in a particle's
complement restriction), ``valence`` (``role:case:sort:status`` separated by
``;``), ``aux``, ``question``, ``id``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .features import (
    ADJACENT,
    CASES,
    OPTIONAL,
    PHRASE_CATEGORIES,
    POS,
    PREDICATIVE,
    ROLES,
    SORTS,
    Head,
    ModTarget,
    SubcatSpec,
    ValenceSlot,
)
from .lattice import TypeLattice
from .rules import CASE_PARTICLE, EMPTY_PAS, PredArgStructure, Sign

KEYS = {"case", "mod", "nonaux", "subcat", "adjacent", "sort", "valence", "aux", "question", "id"}
LEXICAL_SORT = {"verb": "situation", "adjective": "situation", "utterance": "situation"}


class LexiconError(ValueError):
    pass


@dataclass(frozen=True)
class LexEntry:
    surface: str
    head: Head
    entry_id: str
    subcat: SubcatSpec | None = None
    valence: tuple[ValenceSlot, ...] = ()
    sort: str = "any"


class Lexicon:
    def __init__(self, entries, lattice: TypeLattice):
        self.lattice = lattice
        self.entries: tuple[LexEntry, ...] = tuple(entries)
        self._by_surface: dict[str, list[LexEntry]] = defaultdict(list)
        for e in self.entries:
            self._by_surface[e.surface].append(e)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, surface: str) -> bool:
        return surface in self._by_surface

    def get(self, surface: str, pos: str | None = None) -> list[LexEntry]:
        found = self._by_surface.get(surface, [])
        return [e for e in found if pos is None or e.head.pos == pos]

    def particles(self) -> list[LexEntry]:
        return [e for e in self.entries if e.head.pos == "particle"]

    def lookup(self, token: str, position: int = 0) -> list[Sign]:
        """One lexical sign per entry for ``token``; unknown tokens give ``[]``."""
        return [
            Sign(
                head=e.head,
                span=(position, position + 1),
                entry_id=e.entry_id,
                sort=e.sort,
                valence=e.valence,
                subcat=e.subcat,
                pas=_lexical_pas(e),
                surface=e.surface,
            )
            for e in self._by_surface.get(token, [])
        ]


def _lexical_pas(entry: LexEntry) -> PredArgStructure:
    if entry.valence or entry.head.pos in PREDICATIVE:
        return PredArgStructure(predicate=entry.entry_id)
    return EMPTY_PAS


def _flag(value: str, lineno: int) -> bool:
    if value not in ("yes", "no"):
        raise LexiconError(f"line {lineno}: expected yes/no, got {value!r}")
    return value == "yes"


def _sort(value: str, lineno: int) -> str:
    if value not in SORTS:
        raise LexiconError(f"line {lineno}: unknown sort {value!r}")
    return value


def _valence(value: str, lineno: int) -> tuple[ValenceSlot, ...]:
    slots = []
    for item in filter(None, value.split(";")):
        parts = item.split(":")
        if len(parts) != 4:
            raise LexiconError(f"line {lineno}: malformed valence slot {item!r}")
        role, case, sort, status = parts
        if role not in ROLES:
            raise LexiconError(f"line {lineno}: unknown role {role!r}")
        if case not in CASES:
            raise LexiconError(f"line {lineno}: illegal case {case!r}")
        if status not in (OPTIONAL, ADJACENT):
            raise LexiconError(f"line {lineno}: bad slot status {status!r}")
        slots.append(ValenceSlot(role, case, _sort(sort, lineno), status))
    roles = [s.role for s in slots]
    if len(set(roles)) != len(roles):
        raise LexiconError(f"line {lineno}: a role appears twice in one valence")
    if sum(s.case == "wo" for s in slots) > 1:
        raise LexiconError(f"line {lineno}: more than one wo-marked slot")
    return tuple(slots)


def _parse_line(fields: list[str], lineno: int, lattice: TypeLattice) -> LexEntry:
    surface, pos, ptype = (f.strip() for f in fields[:3])
    if not surface or len(surface.split()) != 1:
        raise LexiconError(f"line {lineno}: bad surface form {surface!r}")
    if pos not in POS:
        raise LexiconError(f"line {lineno}: unknown part of speech {pos!r}")
    attrs: dict[str, str] = {}
    for pair in (fields[3].split() if len(fields) > 3 else []):
        key, sep, value = pair.partition("=")
        if not sep or key not in KEYS:
            raise LexiconError(f"line {lineno}: malformed attribute {pair!r}")
        if key in attrs:
            raise LexiconError(f"line {lineno}: attribute {key!r} given twice")
        attrs[key] = value

    if ptype == "-":
        ptype = None
        if pos == "particle":
            raise LexiconError(f"line {lineno}: particle without a type")
    else:
        if pos != "particle":
            raise LexiconError(f"line {lineno}: only particles carry a type")
        if ptype not in lattice:
            raise LexiconError(f"line {lineno}: unknown type name {ptype!r}")
    is_case_particle = ptype is not None and lattice.subsumes(CASE_PARTICLE, ptype)

    case = attrs.get("case")
    if case is not None:
        if case not in CASES:
            raise LexiconError(f"line {lineno}: illegal case {case!r}")
        if not is_case_particle:
            raise LexiconError(f"line {lineno}: case on a non-case-particle")

    mod = None
    if "mod" in attrs:
        if is_case_particle:
            raise LexiconError(f"line {lineno}: case particles have MOD none")
        if attrs["mod"] not in ("noun", "verb"):
            raise LexiconError(f"line {lineno}: bad mod target {attrs['mod']!r}")
        mod = ModTarget(attrs["mod"], _flag(attrs.get("nonaux", "no"), lineno))
    elif "nonaux" in attrs:
        raise LexiconError(f"line {lineno}: nonaux without mod")
    if ptype is not None and not is_case_particle and mod is None:
        raise LexiconError(f"line {lineno}: modifying particle without MOD")

    aux = _flag(attrs.get("aux", "no"), lineno)
    if aux and pos != "verb":
        raise LexiconError(f"line {lineno}: aux only applies to verbs")
    head = Head(
        pos=pos,
        ptype=ptype,
        case=case,
        mod=mod,
        aux=aux,
        question=_flag(attrs.get("question", "no"), lineno),
    )

    subcat = None
    sort = LEXICAL_SORT.get(pos, "any")
    if "subcat" in attrs:
        takes = frozenset(filter(None, attrs["subcat"].split(",")))
        for c in takes:
            if c not in PHRASE_CATEGORIES and c not in lattice:
                raise LexiconError(f"line {lineno}: unknown subcat category {c!r}")
        restriction = frozenset({"any"})
        if "sort" in attrs:
            restriction = frozenset(_sort(s, lineno) for s in attrs["sort"].split("|"))
        try:
            subcat = SubcatSpec(takes, _flag(attrs.get("adjacent", "yes"), lineno), restriction)
        except ValueError as exc:
            raise LexiconError(f"line {lineno}: {exc}") from None
    elif "sort" in attrs:
        sort = _sort(attrs["sort"], lineno)
    if pos == "particle" and subcat is None:
        raise LexiconError(f"line {lineno}: particle without subcat")

    valence = _valence(attrs["valence"], lineno) if "valence" in attrs else ()
    if valence and pos not in ("verb", "adjective"):
        raise LexiconError(f"line {lineno}: valence on a non-predicate")

    return LexEntry(
        surface=surface,
        head=head,
        entry_id=attrs.get("id", surface),
        subcat=subcat,
        valence=valence,
        sort=sort,
    )


def load_lexicon(text: str, lattice: TypeLattice) -> Lexicon:
    entries = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        fields = raw.rstrip("\n").split("\t")
        if len(fields) not in (3, 4):
            raise LexiconError(f"line {lineno}: expected 3 or 4 tab-separated fields")
        entry = _parse_line(fields, lineno, lattice)
        if entry.entry_id in seen:
            raise LexiconError(
                f"line {lineno}: duplicate entry id {entry.entry_id!r} "
                f"(first on line {seen[entry.entry_id]})"
            )
        seen[entry.entry_id] = lineno
        entries.append(entry)
    return Lexicon(entries, lattice)
