import pytest

from jparticles.chart import build_chart
from jparticles.features import SATURATED
from jparticles.rules import (
    Failure,
    adjunct_head,
    bare_np_adjunct,
    complement_head,
    sap_attach,
)


def word(lexicon, surface, position, entry_id=None):
    signs = lexicon.lookup(surface, position)
    if entry_id is not None:
        signs = [s for s in signs if s.entry_id == entry_id]
    assert len(signs) == 1, (surface, [s.entry_id for s in signs])
    return signs[0]


def one(result):
    assert result, getattr(result, "reason", result)
    assert len(result) == 1
    return result[0]


def phrase(lexicon, noun, particle, start, entry_id=None):
    np = word(lexicon, noun, start)
    p = word(lexicon, particle, start + 1, entry_id)
    return one(complement_head(np, p, lexicon.lattice))


def slot(sign, role):
    return next(s for s in sign.valence if s.role == role)


def test_noun_plus_case_particle(lexicon):
    ga_phrase = phrase(lexicon, "oyogi", "ga", 2, "ga/case")
    assert ga_phrase.span == (2, 4)
    assert ga_phrase.head.case == "ga" and ga_phrase.head.mod is None
    assert ga_phrase.saturated
    assert ga_phrase.sort == "event"


def test_stative_verb_takes_two_ga_phrases(lexicon):
    lat = lexicon.lattice
    obj = phrase(lexicon, "oyogi", "ga", 2, "ga/case")
    verb = word(lexicon, "dekimasu", 4)
    vp = one(complement_head(obj, verb, lat))
    assert slot(vp, "obj").status == SATURATED
    assert slot(vp, "subj").open
    subj = phrase(lexicon, "kanojo", "ga", 0, "ga/case")
    clause = one(complement_head(subj, vp, lat))
    assert all(s.status == SATURATED for s in clause.valence)
    roles = clause.pas.roles
    assert roles["subj"].span == (0, 1) and roles["obj"].span == (2, 3)
    assert clause.pas.predicate == "dekimasu"


def test_already_saturated(lexicon):
    lat = lexicon.lattice
    vp = one(complement_head(phrase(lexicon, "hoN", "wo", 2), word(lexicon, "mimasu", 4), lat))
    result = complement_head(phrase(lexicon, "kanojo", "wo", 0), vp, lat)
    assert isinstance(result, Failure)
    assert result.reason == "already-saturated"


def test_case_clash(lexicon):
    result = complement_head(phrase(lexicon, "hoN", "wo", 0), word(lexicon, "dekimasu", 2), lexicon.lattice)
    assert not result and result.reason == "case-clash"


def test_sort_clash(lexicon):
    # the adjunct ga restricts its noun to temporal or human sorts
    result = complement_head(word(lexicon, "hoN", 0), word(lexicon, "ga", 1, "ga/adjunct"), lexicon.lattice)
    assert not result and result.reason == "sort-clash"


def test_category_clash_on_particle(lexicon):
    result = complement_head(word(lexicon, "dekimasu", 0), word(lexicon, "wo", 1), lexicon.lattice)
    assert not result and result.reason == "category-clash"


def test_adjacency_violation(lexicon):
    lat = lexicon.lattice
    # omoimasu wants its to-clause immediately before it
    verb = word(lexicon, "omoimasu", 3)
    adverb = word(lexicon, "chotto", 2)
    result = adjunct_head(adverb, verb, lat)
    assert not result and result.reason == "adjacency-violation"


def test_postposition_adjunct(lexicon):
    lat = lexicon.lattice
    kara = phrase(lexicon, "naNji", "kara", 0)
    verb = word(lexicon, "hajimaru", 2)
    vp = one(adjunct_head(kara, verb, lat))
    assert vp.head is verb.head
    assert vp.valence == verb.valence
    (adj,) = vp.pas.adjuncts
    assert adj.span == (0, 2) and adj.flavor == "postposition"


def test_case_phrase_cannot_adjoin(lexicon):
    lat = lexicon.lattice
    kara = phrase(lexicon, "naNji", "kara", 0)
    kara_ga = one(complement_head(kara, word(lexicon, "ga", 2, "ga/case"), lat))
    assert kara_ga.head.mod is None
    result = adjunct_head(kara_ga, word(lexicon, "toremasu", 3), lat)
    assert not result and result.reason == "mod-none"


def test_no_phrase_cannot_modify_adverb_or_verb(lexicon):
    lat = lexicon.lattice
    no_phrase = phrase(lexicon, "gogo", "no", 0)
    for target in ("yukkuri", "dekimasu"):
        result = adjunct_head(no_phrase, word(lexicon, target, 2), lat)
        assert not result and result.reason == "target-pos-clash"


def test_no_phrase_modifies_noun(lexicon):
    no_phrase = phrase(lexicon, "gogo", "no", 0)
    np = one(adjunct_head(no_phrase, word(lexicon, "hou", 2), lexicon.lattice))
    assert np.pas.adjuncts[0].flavor == "no-attributive"
    assert np.sort == "temporal"  # the light noun picks up its attribute's sort


def test_aux_clash(lexicon):
    kara = phrase(lexicon, "naNji", "kara", 0)
    result = adjunct_head(kara, word(lexicon, "desu", 2), lexicon.lattice)
    assert not result and result.reason == "aux-clash"


def test_bare_np(lexicon):
    gogo = word(lexicon, "gogo", 0)
    promoted = bare_np_adjunct(gogo)
    assert promoted.adjunct_only and promoted.rule == "bare-np"
    assert promoted.head.mod.target_pos == "verb" and promoted.head.mod.nonaux_only
    assert gogo.head.mod is None  # the original stays a plain noun
    vp = one(adjunct_head(promoted, word(lexicon, "hajimaru", 1), lexicon.lattice))
    assert vp.pas.adjuncts[0].flavor == "bare-np"


def test_bare_np_is_never_a_complement(lexicon):
    promoted = bare_np_adjunct(word(lexicon, "niji", 0))
    result = complement_head(promoted, word(lexicon, "ga", 1, "ga/case"), lexicon.lattice)
    assert not result and result.reason == "adjunct-only"


def test_bare_np_precondition(lexicon):
    with pytest.raises(ValueError):
        bare_np_adjunct(phrase(lexicon, "gogo", "ga", 0, "ga/case"))
    with pytest.raises(ValueError):
        bare_np_adjunct(bare_np_adjunct(word(lexicon, "gogo", 0)))


def _clause(lexicon, sentence):
    tokens = sentence.split()
    chart = build_chart(lexicon, tokens)
    complete = [s for s in chart.cell(0, len(tokens)) if s.complete and s.head.pos in ("verb", "adjective")]
    assert complete
    return complete[0]


def test_sap_wraps_clause(lexicon):
    clause = _clause(lexicon, "naNji kara ga yoroshii desu")
    utt = one(sap_attach(clause, word(lexicon, "ka", 5)))
    assert utt.head.pos == "utterance" and utt.head.question
    assert utt.pas is clause.pas


def test_sap_after_sentence_final_ga(lexicon):
    clause = _clause(lexicon, "nantoka yotei ga toreru N desu")
    utt = one(sap_attach(clause, word(lexicon, "ga", 6, "ga/sap")))
    assert utt.span == (0, 7)


def test_repeated_sap(lexicon):
    clause = _clause(lexicon, "naNji kara ga yoroshii desu")
    utt = one(sap_attach(clause, word(lexicon, "ka", 5)))
    assert one(sap_attach(utt, word(lexicon, "ne", 6))).span == (0, 7)


def test_sap_rejects_noun(lexicon):
    result = sap_attach(word(lexicon, "hoN", 0), word(lexicon, "ka", 1))
    assert not result and result.reason == "incomplete-clause"


def test_rules_require_adjacent_daughters(lexicon):
    with pytest.raises(ValueError):
        complement_head(word(lexicon, "hoN", 0), word(lexicon, "wo", 2), lexicon.lattice)


def test_failure_is_falsy():
    assert not Failure("mod-none")
    assert Failure("mod-none").reason == "mod-none"
