"""Word-level operations checked against brute-force enumeration."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from closurelab.errors import ParseError
from closurelab.words import (
    Alphabet,
    conjugates,
    count_letter,
    cut_shuffle,
    is_subword,
    letter_from_name,
    letter_name,
    normalize_word,
    parse_word,
    word_shuffle,
    word_str,
    words_up_to,
)

words = st.lists(st.integers(min_value=0, max_value=2), max_size=7).map(tuple)
short_words = st.lists(st.integers(min_value=0, max_value=1), max_size=5).map(tuple)


def subword_oracle(x, y):
    # x appears among the ordered len(x)-selections from y
    return x in set(itertools.combinations(y, len(x)))


def interleave_oracle(t, v):
    if not t or not v:
        return {t + v}
    return {(t[0],) + w for w in interleave_oracle(t[1:], v)} | {
        (v[0],) + w for w in interleave_oracle(t, v[1:])
    }


@given(words, words)
def test_is_subword_matches_enumeration(x, y):
    assert is_subword(x, y) == subword_oracle(x, y)


@given(words)
def test_subword_reflexive(x):
    assert is_subword(x, x)
    assert is_subword((), x)


@given(words, words)
def test_subword_antisymmetric(x, y):
    if is_subword(x, y) and is_subword(y, x):
        assert x == y


@given(words, words, words)
def test_subword_transitive(x, y, z):
    if is_subword(x, y) and is_subword(y, z):
        assert is_subword(x, z)


def test_parse_word_round_trip():
    assert parse_word("abc") == (0, 1, 2)
    assert parse_word("") == ()
    assert parse_word("-") == ()
    assert word_str((0, 1, 2)) == "abc"
    with pytest.raises(ParseError):
        parse_word("a!b")


def test_letter_names_past_z():
    assert letter_name(0) == "a"
    assert letter_name(25) == "z"
    assert letter_name(26) == "a26"
    assert letter_from_name("q") == 16
    with pytest.raises(ParseError):
        letter_from_name("a26")


def test_conjugates_exact():
    assert conjugates(parse_word("abc")) == [
        parse_word("abc"),
        parse_word("bca"),
        parse_word("cab"),
    ]
    assert conjugates(parse_word("aa")) == [parse_word("aa")]
    assert conjugates(()) == [()]


@given(words)
def test_conjugate_count_divides_length(u):
    if u:
        assert len(u) % len(conjugates(u)) == 0


@given(short_words, short_words)
def test_word_shuffle_matches_enumeration(t, v):
    got = word_shuffle(t, v)
    assert got == sorted(set(got), key=lambda w: (len(w), w))
    assert set(got) == interleave_oracle(t, v)


def test_cut_shuffle_small():
    assert cut_shuffle(parse_word("ab")) == [parse_word("ab"), parse_word("ba")]
    assert cut_shuffle(parse_word("a")) == [parse_word("a")]
    assert cut_shuffle(()) == [()]


@given(words)
def test_cut_shuffle_contains_word_and_conjugates(w):
    cs = set(cut_shuffle(w))
    assert w in cs
    assert set(conjugates(w)) <= cs
    for u in cs:
        assert sorted(u) == sorted(w)


def test_normalize_word_first_occurrence():
    assert normalize_word(parse_word("cacb")) == parse_word("abac")
    assert normalize_word(()) == ()


@given(words)
def test_normalize_idempotent(w):
    assert normalize_word(normalize_word(w)) == normalize_word(w)


@given(words, st.permutations(list(range(3))))
def test_normalize_invariant_under_renaming(w, perm):
    renamed = tuple(perm[a] for a in w)
    assert normalize_word(renamed) == normalize_word(w)


def test_words_up_to_order():
    ab = Alphabet.from_names("ab")
    ws = list(words_up_to(ab, 2))
    assert ws == [(), (0,), (1,), (0, 0), (0, 1), (1, 0), (1, 1)]


def test_alphabet_validation():
    with pytest.raises(ValueError):
        Alphabet(())
    with pytest.raises(ValueError):
        Alphabet((1, 0))
    abc = Alphabet.from_names("cab")
    assert str(abc) == "abc"
    assert abc.position(2) == 2
    with pytest.raises(ValueError):
        abc.position(5)
    assert Alphabet.from_names("ab").union(Alphabet.from_names("bc")) == Alphabet.from_names("abc")


def test_count_letter():
    assert count_letter(parse_word("abcabca"), 0) == 3
    assert count_letter((), 0) == 0
