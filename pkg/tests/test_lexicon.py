import pytest

from jparticles.lexicon import LexiconError, load_lexicon

POSTPOSITIONS = {
    "e", "naNka", "sonota", "tomo", "kara", "made", "soshite", "nado", "bakari",
    "igai", "yori", "toshite", "toshimashite", "nitsuite", "nikaNshite", "nikakete",
}


def test_ga_case_line(lattice):
    lex = load_lexicon(
        "ga\tparticle\tcase-particle\tcase=ga subcat=noun,postposition,adverbial-particle adjacent=yes",
        lattice,
    )
    (entry,) = lex.get("ga")
    assert entry.head.ptype == "case-particle"
    assert entry.head.case == "ga"
    assert entry.head.mod is None
    assert entry.subcat.takes == {"noun", "postposition", "adverbial-particle"}
    assert entry.subcat.adjacent


def test_empty_file(lattice):
    assert len(load_lexicon("", lattice)) == 0
    assert len(load_lexicon("# only a comment\n\n", lattice)) == 0


@pytest.mark.parametrize("surface, count", [("ga", 2), ("ni", 2), ("to", 3), ("wo", 1)])
def test_particle_entry_counts(lexicon, surface, count):
    assert len(lexicon.get(surface, pos="particle")) == count


def test_ga_entries(lexicon):
    by_id = {e.entry_id: e for e in lexicon.get("ga", pos="particle")}
    assert by_id["ga/case"].head.case == "ga"
    adj = by_id["ga/adjunct"]
    assert adj.head.case is None
    assert adj.head.mod.target_pos == "verb" and adj.head.mod.nonaux_only
    assert adj.subcat.sort == {"temporal", "human"}


def test_lookup_ni(lexicon):
    signs = lexicon.lookup("ni", 3)
    assert len(signs) == 2
    assert all(s.span == (3, 4) for s in signs)
    kinds = {(s.head.ptype, s.head.case, s.head.mod is not None) for s in signs}
    assert kinds == {("case-particle", "ni", False), ("adverbial-particle", None, True)}
    adverbial = next(s for s in signs if s.head.mod)
    assert adverbial.head.mod.target_pos == "verb"


def test_lookup_unknown(lexicon):
    assert lexicon.lookup("zzz") == []


def test_lookup_mo(lexicon):
    (mo,) = lexicon.lookup("mo")
    assert mo.head.ptype == "topic-adverbial-particle"
    assert {"noun", "topic-particle", "adjective", "question-clause"} <= mo.subcat.takes


def test_postpositions(lexicon, lattice):
    found = {e.surface for e in lexicon.particles() if e.head.ptype == "postposition"}
    assert found == POSTPOSITIONS
    for surface in POSTPOSITIONS:
        (entry,) = lexicon.get(surface, pos="particle")
        assert entry.head.mod.target_pos == "verb" and entry.head.mod.nonaux_only


def test_case_and_mod_invariants(lexicon, lattice):
    for entry in lexicon.particles():
        if lattice.subsumes("case-particle", entry.head.ptype):
            assert entry.head.mod is None and entry.head.spec is None
            assert entry.head.case is not None
        else:
            assert lattice.subsumes("modifying-particle", entry.head.ptype)
            assert entry.head.case is None and entry.head.mod is not None


def test_topic_and_adverbial_modify_nonaux_verbs(lexicon, lattice):
    for entry in lexicon.particles():
        if lattice.subsumes("verb-modifying-particle", entry.head.ptype):
            assert entry.head.mod.target_pos == "verb" and entry.head.mod.nonaux_only
    (no,) = lexicon.get("no")
    assert no.head.mod.target_pos == "noun"


def test_valence_invariants(lexicon):
    for entry in lexicon.entries:
        roles = [s.role for s in entry.valence]
        assert len(set(roles)) == len(roles)
        assert sum(s.case == "wo" for s in entry.valence) <= 1
        assert all(s.open and s.filler is None for s in entry.valence)


def test_entry_ids_unique(lexicon):
    ids = [e.entry_id for e in lexicon.entries]
    assert len(ids) == len(set(ids))


@pytest.mark.parametrize(
    "text, message",
    [
        ("x\tparticle\tno-such-type\tsubcat=noun", "line 1: unknown type name"),
        ("\nx\tparticle", "line 2: expected 3 or 4"),
        ("x\tnoun\t-\nx\tnoun\t-", "line 2: duplicate entry id"),
        ("x\tparticle\tcase-particle\tcase=kara subcat=noun", "illegal case"),
        ("x\tparticle\tpostposition\tcase=ga mod=verb subcat=noun", "case on a non-case-particle"),
        ("x\tparticle\tcase-particle\tcase=ga mod=verb subcat=noun", "MOD none"),
        ("x\tparticle\tpostposition\tsubcat=noun", "without MOD"),
        ("x\tparticle\tcase-particle\tcase=ga", "without subcat"),
        ("x\tparticle\tcase-particle\tcase=ga subcat=pronoun", "unknown subcat category"),
        ("x\tverb\t-\tvalence=subj:wo:any:optional;obj:wo:any:optional", "more than one wo"),
        ("x\tverb\t-\tvalence=subj:ga:any:optional;subj:ni:any:optional", "role appears twice"),
        ("x\tverb\t-\tvalence=subj:ga:alien:optional", "unknown sort"),
        ("x\tverb\t-\tvalence=subj:ga:any:saturated", "bad slot status"),
        ("x\tnoun\tcase-particle", "only particles carry a type"),
        ("x\tpronoun\t-", "unknown part of speech"),
        ("x\tnoun\t-\tcolour=red", "malformed attribute"),
        ("x\tnoun\t-\tvalence=subj:ga:any:optional", "valence on a non-predicate"),
    ],
)
def test_load_errors(lattice, text, message):
    with pytest.raises(LexiconError, match=message):
        load_lexicon(text, lattice)


def test_homophones_distinguished_by_id(lexicon):
    ids = {e.entry_id for e in lexicon.get("to")}
    assert ids == {"to/case", "to/comp", "to/adv"}
