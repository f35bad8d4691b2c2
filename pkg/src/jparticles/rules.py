"""Immediate-dominance schemata over signs.

Every binary rule is head-final (daughter before head).  The head of a
derived sign is the very same :class:`Head` object as its head daughter's,
so the Head-Feature Principle can be checked by identity.

A rule that cannot apply returns a :class:`Failure` carrying a reason
(``case-clash``, ``sort-clash``, ``already-saturated``,
``adjacency-violation``, ``mod-none``, ``target-pos-clash``, ``aux-clash``,
``category-clash``, ``unsaturated``, ``adjunct-only``,
``incomplete-clause``); on success it returns a non-empty list of signs.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from typing import Union

from .features import (
    ADJACENT,
    PHRASE_CATEGORIES,
    PREDICATIVE,
    Head,
    ModTarget,
    SubcatSpec,
    ValenceSlot,
    sort_satisfies,
)
from .lattice import TypeLattice

CASE_PARTICLE = "case-particle"
NOUN_MODIFYING = "noun-modifying-particle"
TOPIC = "topic-particle"
ADVERBIAL = "adverbial-particle"
POSTPOSITION = "postposition"

FLAVORS = (
    "postposition",
    "adverbial",
    "topic-unbound",
    "ga-adjunct",
    "bare-np",
    "no-attributive",
    "adverb",
    "attributive",
    "relative",
)

Span = tuple[int, int]


@dataclass(frozen=True)
class Binding:
    span: Span
    sort: str
    case: str
    embedded: "PredArgStructure | None" = None


@dataclass(frozen=True)
class Adjunct:
    span: Span
    flavor: str


@dataclass(frozen=True)
class PredArgStructure:
    predicate: str | None = None
    bound: tuple[tuple[str, Binding], ...] = ()
    adjuncts: tuple[Adjunct, ...] = ()
    auxiliaries: tuple[str, ...] = ()

    @property
    def roles(self) -> dict[str, Binding]:
        return dict(self.bound)

    def bind(self, role: str, binding: Binding) -> "PredArgStructure":
        if role in self.roles:
            raise ValueError(f"role {role!r} bound twice")
        return replace(self, bound=tuple(sorted(self.bound + ((role, binding),))))

    def add_adjunct(self, adjunct: Adjunct) -> "PredArgStructure":
        return replace(self, adjuncts=self.adjuncts + (adjunct,))

    def add_auxiliary(self, entry_id: str) -> "PredArgStructure":
        return replace(self, auxiliaries=self.auxiliaries + (entry_id,))


EMPTY_PAS = PredArgStructure()


@dataclass(frozen=True, eq=False)
class Sign:
    head: Head
    span: Span
    entry_id: str
    sort: str = "any"
    valence: tuple[ValenceSlot, ...] = ()
    subcat: SubcatSpec | None = None
    pas: PredArgStructure = EMPTY_PAS
    daughters: tuple["Sign", ...] = ()
    head_daughter: int | None = None
    rule: str = "lex"
    surface: str | None = None

    @property
    def is_lexical(self) -> bool:
        return self.rule == "lex"

    @property
    def is_sap(self) -> bool:
        return self.is_lexical and self.head.pos == "utterance"

    @property
    def adjunct_only(self) -> bool:
        return self.rule == "bare-np"

    @property
    def saturated(self) -> bool:
        return self.subcat is None

    @property
    def complete(self) -> bool:
        """No open subcat and no open adjacent slot."""
        return self.subcat is None and not any(
            s.open and s.status == ADJACENT for s in self.valence
        )

    @cached_property
    def key(self) -> tuple:
        """Derivation identity: two signs with equal keys are the same analysis."""
        if self.is_lexical:
            return ("lex", self.span, self.entry_id)
        return (
            self.rule,
            self.span,
            self.entry_id,
            tuple((s.role, s.status, s.filler) for s in self.valence),
            tuple(d.key for d in self.daughters),
        )

    def walk(self):
        """Yield this sign and every sign below it, pre-order."""
        yield self
        for d in self.daughters:
            yield from d.walk()

    def bracketed(self, tokens=None) -> str:
        if self.is_lexical:
            word = self.surface if tokens is None else tokens[self.span[0]]
            return f"{word}/{self.entry_id}" if word != self.entry_id else word
        inner = " ".join(d.bracketed(tokens) for d in self.daughters)
        return f"[{self.rule} {inner}]"


@dataclass(frozen=True)
class Failure:
    reason: str

    def __bool__(self) -> bool:
        return False


Result = Union[list[Sign], Failure]


def satisfies(sign: Sign, category: str, lattice: TypeLattice) -> bool:
    """Does a complete phrase fill a subcat category?"""
    if sign.adjunct_only or not sign.complete:
        return False
    head = sign.head
    if category == "question-clause":
        return head.pos == "utterance" and head.question
    if category in PHRASE_CATEGORIES:
        return head.pos == category
    if head.pos != "particle" or head.ptype is None or category not in lattice:
        return False
    return lattice.subsumes(category, head.ptype)


def _is_a(lattice: TypeLattice, general: str, ptype: str | None) -> bool:
    return ptype is not None and general in lattice and lattice.subsumes(general, ptype)


def adjunct_flavor(adjunct: Sign, lattice: TypeLattice) -> str:
    if adjunct.rule == "bare-np":
        return "bare-np"
    head = adjunct.head
    if head.pos == "particle":
        if _is_a(lattice, NOUN_MODIFYING, head.ptype):
            return "no-attributive"
        if _is_a(lattice, TOPIC, head.ptype):
            return "topic-unbound"
        if _is_a(lattice, ADVERBIAL, head.ptype):
            return "adverbial"
        if _is_a(lattice, POSTPOSITION, head.ptype):
            return "postposition"
        return "ga-adjunct"
    if head.pos == "adverb":
        return "adverb"
    if head.pos in PREDICATIVE:
        return "relative"
    return "attributive"


def _check_order(left: Sign, right: Sign) -> None:
    if left.span[1] != right.span[0]:
        raise ValueError(f"daughters not adjacent: {left.span} then {right.span}")


def _marked_span(phrase: Sign) -> Span:
    # the part a particle marks: its complement daughter
    if phrase.rule == "comp-head" and phrase.head.pos == "particle":
        return phrase.daughters[0].span
    return phrase.span


def complement_head(complement: Sign, head: Sign, lattice: TypeLattice) -> Result:
    """Saturate the head's subcat, or one of its valence slots, with ``complement``."""
    _check_order(complement, head)
    if complement.adjunct_only:
        return Failure("adjunct-only")
    if not complement.complete:
        return Failure("unsaturated")
    span = (complement.span[0], head.span[1])

    if head.subcat is not None:
        sc = head.subcat
        if not any(satisfies(complement, c, lattice) for c in sc.takes):
            return Failure("category-clash")
        if not sort_satisfies(sc.sort, complement.sort):
            return Failure("sort-clash")
        if head.head.pos == "particle":
            sort, pas = complement.sort, complement.pas
        elif complement.head.pos in PREDICATIVE:
            sort, pas = "situation", complement.pas.add_auxiliary(head.entry_id)
        else:
            sort, pas = "situation", PredArgStructure(predicate=head.entry_id)
        return [
            Sign(
                head=head.head,
                span=span,
                entry_id=head.entry_id,
                sort=sort,
                valence=head.valence,
                pas=pas,
                daughters=(complement, head),
                head_daughter=1,
                rule="comp-head",
            )
        ]

    if head.head.pos not in PREDICATIVE:
        return Failure("category-clash")
    case = complement.head.case
    if complement.head.pos != "particle" or case is None:
        return Failure("case-clash")
    same_case = [i for i, s in enumerate(head.valence) if s.case == case]
    if not same_case:
        return Failure("case-clash")
    candidates = [i for i in same_case if head.valence[i].open]
    if not candidates:
        return Failure("already-saturated")

    results: list[Sign] = []
    reason = None
    for i in candidates:
        slot = head.valence[i]
        if not sort_satisfies(slot.sort, complement.sort):
            reason = reason or "sort-clash"
            continue
        if any(s.open and s.status == ADJACENT for j, s in enumerate(head.valence) if j != i):
            reason = "adjacency-violation"
            continue
        marked = _marked_span(complement)
        embedded = complement.pas if complement.pas.predicate else None
        valence = head.valence[:i] + (slot.saturate(marked),) + head.valence[i + 1:]
        results.append(
            Sign(
                head=head.head,
                span=span,
                entry_id=head.entry_id,
                sort=head.sort,
                valence=valence,
                pas=head.pas.bind(slot.role, Binding(marked, complement.sort, case, embedded)),
                daughters=(complement, head),
                head_daughter=1,
                rule="comp-head",
            )
        )
    return results or Failure(reason)


def adjunct_head(adjunct: Sign, head: Sign, lattice: TypeLattice) -> Result:
    """Attach a modifier whose MOD selects the head."""
    _check_order(adjunct, head)
    mod = adjunct.head.mod
    if mod is None:
        return Failure("mod-none")
    if not adjunct.complete:
        return Failure("unsaturated")
    if head.adjunct_only:
        return Failure("adjunct-only")
    if mod.target_pos == "verb":
        matches = head.head.pos in PREDICATIVE
    else:
        matches = head.head.pos == mod.target_pos
    if not matches:
        return Failure("target-pos-clash")
    if mod.nonaux_only and head.head.aux:
        return Failure("aux-clash")
    if not sort_satisfies(mod.target_sort, head.sort):
        return Failure("sort-clash")
    if not head.complete:
        return Failure("adjacency-violation")

    flavor = adjunct_flavor(adjunct, lattice)
    sort = head.sort
    if flavor == "no-attributive" and head.sort == "any":
        # light nouns (hou) take over the sort of their attribute
        sort = adjunct.sort
    return [
        Sign(
            head=head.head,
            span=(adjunct.span[0], head.span[1]),
            entry_id=head.entry_id,
            sort=sort,
            valence=head.valence,
            pas=head.pas.add_adjunct(Adjunct(adjunct.span, flavor)),
            daughters=(adjunct, head),
            head_daughter=1,
            rule="adj-head",
        )
    ]


BARE_NP_MOD = ModTarget("verb", nonaux_only=True)


def bare_np_adjunct(np: Sign) -> Sign:
    """Promote a particle-less NP to a modifier of nonauxiliary verbs.

    The promoted sign can only ever be an adjunct daughter; the original NP
    stays in the chart for complement readings.
    """
    if np.head.pos != "noun" or np.adjunct_only:
        raise ValueError("bare_np_adjunct needs a noun phrase without a particle")
    return Sign(
        head=np.head.with_mod(BARE_NP_MOD),
        span=np.span,
        entry_id=np.entry_id,
        sort=np.sort,
        pas=np.pas,
        daughters=(np,),
        rule="bare-np",
    )


def sap_attach(clause: Sign, sap: Sign) -> Result:
    """Wrap a complete clause (or utterance) with a sentence-final particle."""
    _check_order(clause, sap)
    if not sap.is_sap:
        return Failure("category-clash")
    if clause.head.pos not in PREDICATIVE + ("utterance",) or not clause.complete:
        return Failure("incomplete-clause")
    return [
        Sign(
            head=sap.head,
            span=(clause.span[0], sap.span[1]),
            entry_id=sap.entry_id,
            sort="situation",
            pas=clause.pas,
            daughters=(clause, sap),
            head_daughter=1,
            rule="sap",
        )
    ]

