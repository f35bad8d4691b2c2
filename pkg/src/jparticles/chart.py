"""Bottom-up CKY chart parser for head-final particle grammar."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .features import PREDICATIVE
from .lexicon import Lexicon
from .rules import Sign, adjunct_head, bare_np_adjunct, complement_head, sap_attach


class ParseError(ValueError):
    pass


class EmptyInputError(ParseError):
    pass


class UnknownTokenError(ParseError):
    def __init__(self, token: str, position: int):
        super().__init__(f"unknown token {token!r} at position {position}")
        self.token = token
        self.position = position


class Chart:
    def __init__(self, tokens):
        self.tokens = tuple(tokens)
        self._cells: dict[tuple[int, int], list[Sign]] = defaultdict(list)
        self._keys: set = set()
        self.failures: set[tuple[tuple[int, int], str]] = set()

    def add(self, sign: Sign) -> bool:
        if sign.key in self._keys:
            return False
        self._keys.add(sign.key)
        self._cells[sign.span].append(sign)
        return True

    def cell(self, start: int, end: int) -> list[Sign]:
        return self._cells.get((start, end), [])

    def edges(self):
        for cell in self._cells.values():
            yield from cell

    def __len__(self) -> int:
        return len(self._keys)


def is_analysis(sign: Sign) -> bool:
    """A complete utterance, or a complete clause when no SAP closes it."""
    if not sign.complete:
        return False
    return sign.head.pos == "utterance" or sign.head.pos in PREDICATIVE


@dataclass
class ParseResult:
    tokens: tuple[str, ...]
    analyses: list[Sign]
    diagnostics: list[tuple[tuple[int, int], str]] = field(default_factory=list)
    chart: Chart | None = None

    def __bool__(self) -> bool:
        return bool(self.analyses)


def _combine(left: Sign, right: Sign, lexicon: Lexicon):
    if right.is_sap:
        yield sap_attach(left, right)
        return
    yield complement_head(left, right, lexicon.lattice)
    yield adjunct_head(left, right, lexicon.lattice)


def _add_with_unary(chart: Chart, sign: Sign) -> None:
    if chart.add(sign) and sign.head.pos == "noun" and not sign.adjunct_only:
        chart.add(bare_np_adjunct(sign))


def build_chart(lexicon: Lexicon, tokens) -> Chart:
    tokens = list(tokens)
    if not tokens:
        raise EmptyInputError("empty input")
    chart = Chart(tokens)
    for i, tok in enumerate(tokens):
        signs = lexicon.lookup(tok, i)
        if not signs:
            raise UnknownTokenError(tok, i)
        for s in signs:
            _add_with_unary(chart, s)

    n = len(tokens)
    for width in range(2, n + 1):
        for start in range(n - width + 1):
            end = start + width
            for mid in range(start + 1, end):
                for left in chart.cell(start, mid):
                    for right in chart.cell(mid, end):
                        for result in _combine(left, right, lexicon):
                            if result:
                                for sign in result:
                                    _add_with_unary(chart, sign)
                            else:
                                chart.failures.add(((start, end), result.reason))
    return chart


def parse(lexicon: Lexicon, tokens) -> ParseResult:
    """All complete analyses spanning ``tokens``.

    Raises :class:`EmptyInputError` or :class:`UnknownTokenError`.
    """
    chart = build_chart(lexicon, tokens)
    n = len(chart.tokens)
    analyses = [s for s in chart.cell(0, n) if is_analysis(s)]
    diagnostics = [] if analyses else sorted(chart.failures)
    return ParseResult(chart.tokens, analyses, diagnostics, chart)


@dataclass(frozen=True)
class CorpusItem:
    lineno: int
    grammatical: bool
    tokens: tuple[str, ...]


@dataclass
class CorpusLine:
    item: CorpusItem
    analyses: int | None = None
    error: str | None = None

    @property
    def passed(self) -> bool | None:
        if self.error is not None:
            return None
        return (self.analyses > 0) == self.item.grammatical


@dataclass
class CorpusReport:
    lines: list[CorpusLine]

    @property
    def checked(self) -> list[CorpusLine]:
        return [ln for ln in self.lines if ln.error is None]

    @property
    def passed(self) -> int:
        return sum(1 for ln in self.checked if ln.passed)

    @property
    def total(self) -> int:
        return len(self.checked)

    @property
    def errors(self) -> list[CorpusLine]:
        return [ln for ln in self.lines if ln.error is not None]

    @property
    def all_passed(self) -> bool:
        return self.passed == self.total


def read_corpus(text: str) -> list[CorpusItem]:
    items = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        grammatical = not line.startswith("*")
        tokens = tuple(line.lstrip("*").split())
        items.append(CorpusItem(lineno, grammatical, tokens))
    return items


def parse_corpus(lexicon: Lexicon, corpus) -> CorpusReport:
    """Parse every item; token errors are recorded per line, never raised."""
    lines = []
    for item in corpus:
        try:
            result = parse(lexicon, item.tokens)
        except ParseError as exc:
            lines.append(CorpusLine(item, error=str(exc)))
        else:
            lines.append(CorpusLine(item, analyses=len(result.analyses)))
    return CorpusReport(lines)
