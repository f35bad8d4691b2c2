"""Type lattice over lexical types.

The lattice is closed at load time: descendants and the full meet table are
precomputed, so :meth:`TypeLattice.meet` is a dictionary lookup.  Unification
failure is the ordinary value :data:`BOTTOM`, never an exception.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Mapping

BOTTOM = "*bottom*"


class HierarchyError(ValueError):
    """Raised for hierarchies that cannot be closed into a lattice."""


class UnknownTypeError(KeyError):
    pass


@dataclass(frozen=True)
class LexType:
    name: str
    parents: frozenset[str] = frozenset()


class TypeLattice:
    def __init__(self, types: Mapping[str, LexType], descendants, meets):
        self._types = dict(types)
        self._descendants = descendants
        self._meets = meets

    @property
    def types(self) -> tuple[str, ...]:
        return tuple(self._types)

    @property
    def tops(self) -> tuple[str, ...]:
        return tuple(n for n, t in self._types.items() if not t.parents)

    def __contains__(self, name: str) -> bool:
        return name in self._types or name == BOTTOM

    def __len__(self) -> int:
        # declared types plus bottom
        return len(self._types) + 1

    def __getitem__(self, name: str) -> LexType:
        self._check(name)
        return self._types[name]

    def _check(self, name: str) -> None:
        if name not in self._types and name != BOTTOM:
            raise UnknownTypeError(name)

    def subsumes(self, general: str, specific: str) -> bool:
        """True iff ``specific`` is ``general`` or lies below it."""
        self._check(general)
        self._check(specific)
        if specific == BOTTOM:
            return True
        if general == BOTTOM:
            return False
        return specific in self._descendants[general]

    def meet(self, t1: str, t2: str) -> str:
        self._check(t1)
        self._check(t2)
        if t1 == BOTTOM or t2 == BOTTOM:
            return BOTTOM
        return self._meets[t1, t2]

    def descendants(self, name: str) -> frozenset[str]:
        self._check(name)
        return self._descendants[name]

    def meet_table(self) -> dict[tuple[str, str], str]:
        return dict(self._meets)


def _descendant_sets(types: Mapping[str, LexType]) -> dict[str, frozenset[str]]:
    children: dict[str, set[str]] = {n: set() for n in types}
    for t in types.values():
        for p in t.parents:
            children[p].add(t.name)

    # Kahn's algorithm doubles as cycle detection.
    indegree = {n: len(t.parents) for n, t in types.items()}
    order = [n for n, d in indegree.items() if d == 0]
    i = 0
    while i < len(order):
        for c in sorted(children[order[i]]):
            indegree[c] -= 1
            if indegree[c] == 0:
                order.append(c)
        i += 1
    if len(order) != len(types):
        stuck = sorted(n for n, d in indegree.items() if d > 0)
        raise HierarchyError(f"cycle detected among types: {', '.join(stuck)}")

    desc: dict[str, frozenset[str]] = {}
    for name in reversed(order):
        below = {name}
        for c in children[name]:
            below |= desc[c]
        desc[name] = frozenset(below)
    return desc


def load_hierarchy(declarations: Iterable[tuple[str, Iterable[str]]]) -> TypeLattice:
    """Build and validate a lattice from ``(name, parent_names)`` pairs.

    Raises :class:`HierarchyError` on empty input, duplicate names, unknown
    parents, cycles, or a pair of types with more than one maximal common
    descendant.
    """
    types: dict[str, LexType] = {}
    for name, parents in declarations:
        if name in types:
            raise HierarchyError(f"duplicate type name: {name}")
        if name == BOTTOM:
            raise HierarchyError(f"reserved type name: {name}")
        types[name] = LexType(name, frozenset(parents))
    if not types:
        raise HierarchyError("empty hierarchy")
    for t in types.values():
        for p in t.parents:
            if p not in types:
                raise HierarchyError(f"unknown parent {p!r} of type {t.name!r}")

    desc = _descendant_sets(types)
    meets: dict[tuple[str, str], str] = {}
    for a, b in combinations_with_replacement(types, 2):
        common = desc[a] & desc[b]
        maximal = [c for c in common if not any(c != d and c in desc[d] for d in common)]
        if len(maximal) > 1:
            raise HierarchyError(
                f"types {a!r} and {b!r} have no unique greatest lower bound: "
                f"{', '.join(sorted(maximal))}"
            )
        glb = maximal[0] if maximal else BOTTOM
        meets[a, b] = meets[b, a] = glb
    return TypeLattice(types, desc, meets)


def parse_hierarchy(text: str) -> list[tuple[str, list[str]]]:
    """Read the ``name: parent1 parent2`` declaration format."""
    decls = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, rest = line.partition(":")
        name = name.strip()
        if not sep or not name or len(name.split()) != 1:
            raise HierarchyError(f"line {lineno}: malformed declaration {raw!r}")
        decls.append((name, rest.split()))
    return decls


def load_hierarchy_text(text: str) -> TypeLattice:
    return load_hierarchy(parse_hierarchy(text))
