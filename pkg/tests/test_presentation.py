from math import comb

import pytest

from lcskit import fixtures
from lcskit.errors import PresentationError, PresentationSyntaxError
from lcskit.presentation import (
    CyclicRelation,
    IDENTITY,
    IncidenceData,
    Presentation,
    format_presentation,
    incidence_of,
    is_conjugation_free,
    parse_presentation,
    parse_word,
    read_presentation,
    validate,
)


def test_single_triple_is_valid():
    p = parse_presentation("generators 3\nrelation 1 2 3")
    assert len(p.relations) == 1
    assert p.relations[0].support == (1, 2, 3)
    assert validate(p).ok


def test_example_h_shape():
    p = fixtures.example_h()
    triples = [r.support for r in p.relations if r.length == 3]
    assert triples == [(1, 2, 3), (1, 5, 6), (3, 4, 5)]
    explicit = [l for l in fixtures.H_TEXT.splitlines() if l.startswith("relation") and len(l.split()) == 3]
    assert len(explicit) == 10
    # the two pairs {1,4} and {3,6} are filled in implicitly
    assert sum(1 for r in p.relations if r.length == 2) == 12
    assert validate(p).ok and is_conjugation_free(p)


def test_non_increasing_support_is_a_syntax_error():
    with pytest.raises(PresentationSyntaxError) as info:
        parse_presentation("generators 3\nrelation 2 1 3")
    assert info.value.line == 2
    assert "increasing" in str(info.value)


@pytest.mark.parametrize(
    "text",
    [
        "relation 1 2",
        "generators x",
        "generators 3\nrelation 1 4",
        "generators 3\nrelation 1",
        "generators 3\nfrobnicate 1 2",
        "generators 3\nrelation 1 2 3 conj e ; e",
        "generators 3\nrelation 1 2 conj y1 ; e",
    ],
)
def test_malformed_inputs(text):
    with pytest.raises(PresentationSyntaxError):
        parse_presentation(text)


def test_overlap_violates_requirement_three():
    p = Presentation.from_relations(4, [(1, 2, 3), (1, 2, 4)])
    report = validate(p)
    assert not report.ok
    req3 = [v for v in report.violations if v.requirement == 3]
    assert req3 and req3[0].relations


def test_duplicate_pair_violates_requirement_two():
    p = parse_presentation("generators 2\nrelation 1 2\nrelation 1 2")
    report = validate(p)
    req2 = [v for v in report.violations if v.requirement == 2]
    assert len(req2) == 1 and req2[0].pair == (1, 2)


def test_strict_mode_leaves_pairs_uncovered():
    p = parse_presentation("generators 3\nstrict\nrelation 1 2")
    report = validate(p)
    assert not report.ok
    assert {v.pair for v in report.violations} == {(1, 3), (2, 3)}
    assert validate(parse_presentation("generators 3\nrelation 1 2")).ok


def test_g2_is_cyclic_related_but_not_conjugation_free():
    p = fixtures.example_g2()
    assert validate(p).ok
    assert not is_conjugation_free(p)


def test_all_identity_conjugators_are_conjugation_free():
    p = parse_presentation("generators 3\nrelation 1 2 3 conj e ; e ; e")
    assert is_conjugation_free(p)


def test_words():
    w = parse_word("x3 x1^-1")
    assert w.letters == ((3, 1), (1, -1))
    assert str(w) == "x3 x1^-1"
    assert parse_word("e") == IDENTITY
    with pytest.raises(ValueError):
        parse_word("x0")


def test_relation_checks():
    with pytest.raises(PresentationError):
        CyclicRelation((1,))
    with pytest.raises(PresentationError):
        CyclicRelation((2, 1))
    with pytest.raises(PresentationError):
        CyclicRelation((1, 2), (IDENTITY,))
    r = CyclicRelation((1, 2, 3))
    assert r.is_multiple and r.is_conjugation_free
    assert list(r.pairs()) == [(1, 2), (1, 3), (2, 3)]


def test_incidence_of_examples():
    inc = incidence_of(fixtures.example_h())
    assert inc.counts() == {3: 3, 2: 12}
    assert incidence_of(fixtures.pencil(5)).counts() == {5: 1}
    inc = incidence_of(fixtures.generic(5))
    assert inc.counts() == {2: comb(5, 2)}
    assert inc.covers_all_pairs()


def test_incidence_round_trip():
    inc = IncidenceData(4, ((1, 2, 3), (1, 4), (2, 4), (3, 4)))
    assert incidence_of(inc.to_presentation()) == inc


@pytest.mark.parametrize(
    "maker", [fixtures.example_h, fixtures.example_g2, fixtures.example_x3, fixtures.braid_section]
)
def test_format_parse_round_trip(maker, tmp_path):
    p = maker()
    text = format_presentation(p)
    assert parse_presentation(text) == p
    path = tmp_path / "p.pres"
    path.write_text(text)
    assert read_presentation(path) == p


def test_comments_and_blank_lines():
    p = parse_presentation("# header\n\ngenerators 3   # three\nrelation 1 2 3  # the only one\n")
    assert p.relations[0].support == (1, 2, 3)


def test_syntax_error_carries_position():
    with pytest.raises(PresentationSyntaxError) as info:
        parse_presentation("generators 3\n\nrelation 1 9")
    assert info.value.line == 3
    assert str(info.value).startswith("line 3")
