"""Words over indexed alphabets and the scattered-subword order.

Letters are non-negative integers.  Letter ``i`` prints as the ``i``-th
lowercase name (``a`` .. ``z``) and as ``a<i>`` past index 25.  A word is a
tuple of letters; the empty tuple is the empty word.  Words serialize as the
concatenation of their letter names, with the empty word serializing as the
empty string (shown as ``-`` on interactive surfaces).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ParseError

Letter = int
Word = tuple[int, ...]

EPSILON: Word = ()

_NAMES = "abcdefghijklmnopqrstuvwxyz"


def letter_name(letter: Letter) -> str:
    if letter < 0:
        raise ValueError(f"letter index must be non-negative, got {letter}")
    if letter < len(_NAMES):
        return _NAMES[letter]
    return f"a{letter}"


def letter_from_name(name: str) -> Letter:
    if len(name) == 1 and name in _NAMES:
        return _NAMES.index(name)
    raise ParseError(f"unknown letter name {name!r}")


@dataclass(frozen=True)
class Alphabet:
    """A finite, ordered set of letters.

    The order is the letter-index order, so two alphabets over the same
    letters are equal.  Alphabets are never empty: state-counting is relative
    to a declared alphabet and an empty declaration is always a mistake.
    """

    letters: tuple[Letter, ...]

    def __post_init__(self):
        if not self.letters:
            raise ValueError("alphabet must contain at least one letter")
        if any(a < 0 for a in self.letters):
            raise ValueError("letters must be non-negative")
        if any(a >= b for a, b in zip(self.letters, self.letters[1:])):
            raise ValueError("letters must be strictly increasing")

    @classmethod
    def from_names(cls, names: str) -> "Alphabet":
        return cls(tuple(sorted(letter_from_name(c) for c in set(names))))

    @classmethod
    def from_size(cls, n: int) -> "Alphabet":
        if n <= 0:
            raise ValueError("alphabet size must be positive")
        return cls(tuple(range(n)))

    @property
    def size(self) -> int:
        return len(self.letters)

    def position(self, letter: Letter) -> int:
        """Index of ``letter`` inside this alphabet; raises if absent."""
        try:
            return self.letters.index(letter)
        except ValueError:
            raise ValueError(
                f"letter {letter_name(letter)} not in alphabet {self}"
            ) from None

    def union(self, other: "Alphabet") -> "Alphabet":
        return Alphabet(tuple(sorted(set(self.letters) | set(other.letters))))

    def contains(self, other: "Alphabet") -> bool:
        return set(other.letters) <= set(self.letters)

    def __contains__(self, letter: Letter) -> bool:
        return letter in self.letters

    def __iter__(self):
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(letter_name(a) for a in self.letters)


def parse_word(text: str) -> Word:
    """Parse a word from concatenated single-letter names; ``-`` or "" is empty."""
    if text in ("", "-"):
        return EPSILON
    return tuple(letter_from_name(c) for c in text)


def word_str(w: Word) -> str:
    return "".join(letter_name(a) for a in w)


def word_display(w: Word) -> str:
    """Human form of a word: like :func:`word_str` but the empty word is ``-``."""
    return word_str(w) if w else "-"


def letters_of(w: Word) -> frozenset[Letter]:
    return frozenset(w)


def word_alphabet(w: Word, floor: Letter = 0) -> Alphabet:
    """The alphabet of the letters occurring in ``w``.

    The empty word has no letters of its own, yet every language here lives
    over a non-empty alphabet; in that case fall back to the single letter
    ``floor``.
    """
    if not w:
        return Alphabet((floor,))
    return Alphabet(tuple(sorted(set(w))))


def count_letter(w: Word, a: Letter) -> int:
    return w.count(a)


def is_subword(x: Word, y: Word) -> bool:
    """Scattered-subword test: can ``x`` be embedded into ``y`` in order?"""
    it = iter(y)
    return all(a in it for a in x)


def conjugates(u: Word) -> list[Word]:
    """All rotations of ``u``, deduplicated, in (length, lex) order.

    ``u = vv'`` yields the conjugate ``v'v``; a periodic word has fewer
    distinct conjugates than letters.
    """
    seen = {u[i:] + u[:i] for i in range(max(len(u), 1))}
    return sorted(seen)


def word_shuffle(t: Word, v: Word) -> list[Word]:
    """All interleavings of ``t`` and ``v``, deduplicated and sorted."""
    out: set[Word] = set()

    def go(prefix: list[int], i: int, j: int):
        if i == len(t) and j == len(v):
            out.add(tuple(prefix))
            return
        if i < len(t):
            prefix.append(t[i])
            go(prefix, i + 1, j)
            prefix.pop()
        if j < len(v):
            prefix.append(v[j])
            go(prefix, i, j + 1)
            prefix.pop()

    go([], 0, 0)
    return sorted(out, key=lambda w: (len(w), w))


def cut_shuffle(w: Word) -> list[Word]:
    """Every interleaving of a suffix of ``w`` before/into its matching prefix.

    Cut ``w = tv`` at each position and shuffle the two halves together; the
    union over all cuts, deduplicated and sorted by (length, lex).
    """
    out: set[Word] = set()
    for cut in range(len(w) + 1):
        out.update(word_shuffle(w[:cut], w[cut:]))
    return sorted(out, key=lambda u: (len(u), u))


def normalize_word(w: Word) -> Word:
    """Rename letters to a, b, c, ... in order of first occurrence.

    The result is the canonical representative of ``w`` under alphabet
    bijections: two words normalize to the same word exactly when some
    bijective renaming maps one to the other.
    """
    seen: dict[int, int] = {}
    for a in w:
        if a not in seen:
            seen[a] = len(seen)
    return tuple(seen[a] for a in w)


def all_words(alphabet: Alphabet, length: int):
    """Iterate every word of exactly ``length`` over ``alphabet`` in lex order."""
    return (tuple(w) for w in itertools.product(alphabet.letters, repeat=length))


def words_up_to(alphabet: Alphabet, max_len: int):
    """Iterate every word of length at most ``max_len`` in (length, lex) order."""
    for n in range(max_len + 1):
        yield from all_words(alphabet, n)
