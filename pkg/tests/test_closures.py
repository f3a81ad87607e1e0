"""Closure operators: Kuratowski laws, duality, and minimal generators."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from closurelab.automata import Lang
from closurelab.closures import (
    down_word,
    downward_closure,
    is_closed,
    minimal_generators,
    up_word,
    upward_closure,
)
from closurelab.words import Alphabet, is_subword, parse_word, words_up_to

AB = Alphabet.from_names("ab")
ABC = Alphabet.from_names("abc")

words3 = st.lists(st.integers(min_value=0, max_value=2), max_size=4).map(tuple)
finite_langs = st.lists(words3, max_size=4).map(lambda ws: Lang.finite(ws, ABC))


def test_down_word_members():
    w = parse_word("ab")
    lang = down_word(w)
    assert set(lang.words(3)) == {(), (0,), (1,), (0, 1)}
    for m in range(4):
        unary = down_word((0,) * m, Alphabet.from_names("a"))
        assert set(unary.words(m + 1)) == {(0,) * i for i in range(m + 1)}


def test_down_word_semantics_is_subword():
    w = parse_word("abcba")
    lang = down_word(w)
    for x in words_up_to(lang.alphabet, 5):
        assert lang.accepts(x) == is_subword(x, w)


def test_up_word_semantics_is_superword():
    w = parse_word("ab")
    lang = up_word(w, ABC)
    for x in words_up_to(ABC, 4):
        assert lang.accepts(x) == is_subword(w, x)


def test_up_word_unary():
    m = 3
    lang = up_word((0,) * m, Alphabet.from_names("a"))
    for i in range(7):
        assert lang.accepts((0,) * i) == (i >= m)


def test_closure_of_empty():
    assert downward_closure(Lang.empty(ABC)).is_empty()
    assert upward_closure(Lang.empty(ABC)).is_empty()


@given(finite_langs)
@settings(max_examples=60)
def test_kuratowski_axioms(lang):
    down, up = downward_closure(lang), upward_closure(lang)
    assert lang.subset(down) and lang.subset(up)
    assert downward_closure(down) == down
    assert upward_closure(up) == up


@given(finite_langs, finite_langs)
@settings(max_examples=40)
def test_closure_distributes_over_union(l1, l2):
    u = l1.union(l2)
    assert downward_closure(u) == downward_closure(l1).union(downward_closure(l2))
    assert upward_closure(u) == upward_closure(l1).union(upward_closure(l2))


@given(finite_langs)
@settings(max_examples=60)
def test_duality_down_closed_iff_complement_up_closed(lang):
    down = downward_closure(lang)
    assert is_closed(down, "down")
    assert is_closed(down.complement(), "up")
    assert is_closed(lang, "down") == is_closed(lang.complement(), "up")


@given(finite_langs)
@settings(max_examples=40)
def test_upward_closure_is_shuffle_with_universe(lang):
    assert upward_closure(lang) == lang.shuffle(Lang.universe(lang.alphabet))


def test_is_closed_examples():
    ab = Lang.single_word(parse_word("ab"))
    assert not is_closed(ab, "down")
    assert not is_closed(ab, "up")
    assert is_closed(Lang.universe(AB), "down")
    assert is_closed(Lang.universe(AB), "up")
    with pytest.raises(ValueError):
        is_closed(ab, "sideways")


def test_minimal_generators_examples():
    assert minimal_generators(up_word(parse_word("ab"))) == [parse_word("ab")]
    two = upward_closure(Lang.finite([parse_word("ab"), parse_word("ba")]))
    assert minimal_generators(two) == [parse_word("ab"), parse_word("ba")]
    assert minimal_generators(Lang.empty(AB)) == []
    with pytest.raises(ValueError):
        minimal_generators(Lang.single_word(parse_word("ab")))


def test_minimal_generators_drops_redundant_words():
    # aab is above ab, so it contributes nothing
    lang = upward_closure(Lang.finite([parse_word("ab"), parse_word("aab")], AB))
    assert minimal_generators(lang) == [parse_word("ab")]


@given(finite_langs)
@settings(max_examples=30, deadline=None)
def test_minimal_generators_regenerate(lang):
    up = upward_closure(lang)
    gens = minimal_generators(up)
    assert upward_closure(Lang.finite(gens, up.alphabet)) == up
    # generators form an antichain
    for x in gens:
        for y in gens:
            if x != y:
                assert not is_subword(x, y)


def test_closure_alphabet_relativity():
    # the same word closes upward differently over a larger alphabet
    narrow = up_word(parse_word("a"))
    wide = up_word(parse_word("a"), AB)
    assert narrow.kappa == 2
    assert wide.kappa == 2
    assert not narrow.alphabet.contains(wide.alphabet)
    assert wide.accepts(parse_word("ba"))
