"""Locations of the bundled grammar files."""
from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

from .lattice import TypeLattice, load_hierarchy_text
from .lexicon import Lexicon, load_lexicon

ENV_VAR = "PARTICLE_DATA_DIR"
HIERARCHY = "hierarchy.txt"
LEXICON = "lexicon.tsv"
TABLE1 = "table1.csv"
CORPUS = "example_sentences.txt"


def data_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(str(resources.files("jparticles") / "data"))


def data_path(name: str) -> Path:
    return data_dir() / name


def read_text(path) -> str:
    return Path(path).read_text(encoding="utf-8")


def bundled_lattice() -> TypeLattice:
    return load_hierarchy_text(read_text(data_path(HIERARCHY)))


def bundled_lexicon(lattice: TypeLattice | None = None) -> Lexicon:
    return load_lexicon(read_text(data_path(LEXICON)), lattice or bundled_lattice())
