"""Particle cooccurrence: lexical licensing vs. corpus counts.

``derive_licensing`` answers, for every (left, right) particle pair, whether
the right particle can take a phrase headed by the left one as its
complement.  ``reconcile`` sets that against the dialogue counts.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .lexicon import Lexicon

ROWS = (
    "ga", "wo", "ni", "de", "e", "kara", "made", "no", "wa", "mo", "naNka", "to",
    "toshite", "toshimashite",
)
COLUMNS = ("ga", "wo", "ni", "de", "e", "kara", "made", "no", "wa", "mo", "naNka", "to")
DEFAULT_THRESHOLD = 10


class TableError(ValueError):
    pass


@dataclass(frozen=True)
class CoocMatrix:
    rows: tuple[str, ...]
    columns: tuple[str, ...]
    cells: np.ndarray

    def __post_init__(self):
        if self.cells.shape != (len(self.rows), len(self.columns)):
            raise TableError(
                f"cells have shape {self.cells.shape}, labels need "
                f"{(len(self.rows), len(self.columns))}"
            )

    def __getitem__(self, pair: tuple[str, str]):
        left, right = pair
        value = self.cells[self.rows.index(left), self.columns.index(right)]
        return value.item()

    def pairs(self):
        for i, left in enumerate(self.rows):
            for j, right in enumerate(self.columns):
                yield left, right, self.cells[i, j].item()

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["left", *self.columns])
        for i, left in enumerate(self.rows):
            writer.writerow([left, *(int(v) for v in self.cells[i])])
        return out.getvalue()


def load_table1(text: str) -> CoocMatrix:
    """Read the empirical count table; labels must be exactly the bundled ones."""
    reader = list(csv.reader(io.StringIO(text)))
    reader = [row for row in reader if row and any(c.strip() for c in row)]
    if not reader:
        raise TableError("empty table")
    header = [c.strip() for c in reader[0]]
    if len(header) != len(COLUMNS) + 1:
        raise TableError(f"dimension mismatch: {len(header) - 1} columns, expected {len(COLUMNS)}")
    if tuple(header[1:]) != COLUMNS:
        raise TableError(f"column labels {header[1:]} do not match {list(COLUMNS)}")
    body = reader[1:]
    if len(body) != len(ROWS):
        raise TableError(f"dimension mismatch: {len(body)} rows, expected {len(ROWS)}")
    cells = np.zeros((len(ROWS), len(COLUMNS)), dtype=np.int64)
    for i, row in enumerate(body):
        if len(row) != len(header):
            raise TableError(f"dimension mismatch in row {i + 1}: {len(row) - 1} cells")
        if row[0].strip() != ROWS[i]:
            raise TableError(f"row {i + 1} labelled {row[0]!r}, expected {ROWS[i]!r}")
        for j, cell in enumerate(row[1:]):
            try:
                cells[i, j] = int(cell.strip())
            except ValueError:
                raise TableError(f"non-integer cell {cell!r} at ({ROWS[i]}, {COLUMNS[j]})") from None
            if cells[i, j] < 0:
                raise TableError(f"negative count at ({ROWS[i]}, {COLUMNS[j]})")
    return CoocMatrix(ROWS, COLUMNS, cells)


def derive_licensing(lexicon: Lexicon, rows=ROWS, columns=COLUMNS) -> CoocMatrix:
    """Boolean matrix: can some entry of R take a phrase headed by some entry of L?"""
    lattice = lexicon.lattice
    particles = {}
    for label in set(rows) | set(columns):
        entries = lexicon.get(label, pos="particle")
        if not entries:
            raise KeyError(f"unknown particle label: {label!r}")
        particles[label] = entries

    cells = np.zeros((len(rows), len(columns)), dtype=bool)
    for i, left in enumerate(rows):
        left_types = {e.head.ptype for e in particles[left]}
        for j, right in enumerate(columns):
            cells[i, j] = any(
                category in lattice and lattice.subsumes(category, ptype)
                for entry in particles[right]
                for category in entry.subcat.takes
                for ptype in left_types
            )
    return CoocMatrix(tuple(rows), tuple(columns), cells)


@dataclass(frozen=True)
class ReconciliationReport:
    threshold: int
    licensed_and_attested: frozenset[tuple[str, str]]
    attested_unlicensed: frozenset[tuple[str, str, int]]
    licensed_unattested: frozenset[tuple[str, str]]

    def attested_unlicensed_pairs(self) -> frozenset[tuple[str, str]]:
        return frozenset((left, right) for left, right, _ in self.attested_unlicensed)


def reconcile(derived: CoocMatrix, empirical: CoocMatrix,
              threshold: int = DEFAULT_THRESHOLD) -> ReconciliationReport:
    if derived.rows != empirical.rows or derived.columns != empirical.columns:
        raise TableError("derived and empirical matrices have different labels")
    both, unlicensed, unattested = set(), set(), set()
    for (left, right, licensed), (_, _, count) in zip(derived.pairs(), empirical.pairs()):
        attested = count >= threshold
        if licensed and attested:
            both.add((left, right))
        elif attested:
            unlicensed.add((left, right, int(count)))
        elif licensed:
            unattested.add((left, right))
    return ReconciliationReport(threshold, frozenset(both), frozenset(unlicensed), frozenset(unattested))
