"""Named word and language families used throughout the experiments.

The dispatcher :func:`family` accepts the short kind names used on the
command line (``V``, ``W``, ``U``, ``Ln``, ``Aij``); the functions underneath
carry descriptive names.  Letter arguments ``i`` are 1-based: ``i = 1`` is
letter ``a``.
"""

from __future__ import annotations

import math

from .automata import Dfa, Lang, canonical
from .words import Alphabet, Letter, Word


def distinct_word(n: int) -> Word:
    """The word of ``n`` pairwise distinct letters in alphabet order: a b c ..."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(range(n))


def cubed_word(n: int) -> Word:
    """Three copies of :func:`distinct_word`, the square-root stress family."""
    return distinct_word(n) * 3


def distinct_word_factor(i: int, j: int) -> Word:
    """The factor of :func:`distinct_word` running from the i-th to the j-th
    letter inclusive (1-based); empty when ``i > j``."""
    if i < 1:
        raise ValueError("i must be at least 1")
    return tuple(range(i - 1, j))


def ceil_third(n: int) -> int:
    return math.ceil(n / 3)


def alpha_candidate(n: int) -> Word:
    """Length-``n`` word conjectured to maximize the square-root quotient
    count among all words of length at most ``n``.

    Two equal blocks of ``ceil(n/3)`` distinct letters followed by the prefix
    that pads the length to ``n``.  At ``n = 1`` the block formula would need
    a negative pad, and the single word ``a`` is the only candidate anyway.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return distinct_word(1)
    c = ceil_third(n)
    block = distinct_word(c)
    return block + block + block[: n - 2 * c]


def unary_threshold_lang(n: int) -> Lang:
    """Words over {a} with at least ``n - 1`` letters."""
    if n < 1:
        raise ValueError("n must be at least 1")
    alphabet = Alphabet((0,))
    rows = tuple((min(i + 1, n - 1),) for i in range(n))
    return canonical(Dfa(alphabet, rows, 0, frozenset({n - 1})))


def avoid_letter_star(alphabet: Alphabet, letter: Letter) -> Lang:
    """All words over ``alphabet`` that never use ``letter``."""
    pos = alphabet.position(letter)
    row0 = tuple(1 if p == pos else 0 for p in range(alphabet.size))
    sink = tuple(1 for _ in range(alphabet.size))
    return canonical(Dfa(alphabet, (row0, sink), 0, frozenset({0})))


def bounded_occurrence_lang(n: int, i: int, j: int) -> Lang:
    """Words over the first ``n`` letters with at most ``j`` copies of the
    ``i``-th letter (1-based)."""
    if not 1 <= i <= n:
        raise ValueError("need 1 <= i <= n")
    if j < 0:
        raise ValueError("j must be non-negative")
    alphabet = Alphabet.from_size(n)
    pos = i - 1
    sink = j + 1
    rows = []
    for count in range(j + 1):
        rows.append(
            tuple(count + 1 if p == pos else count for p in range(n))
        )
    rows.append(tuple(sink for _ in range(n)))
    return canonical(
        Dfa(alphabet, tuple(rows), 0, frozenset(range(j + 1)))
    )


def family(kind: str, **params):
    """Dispatch on the short family names.

    ``V``, ``W``, ``U`` take ``n`` and return a word; ``Ln`` takes ``n`` and
    ``Aij`` takes ``n``, ``i``, ``j`` and both return a Lang.
    """
    if kind == "V":
        return distinct_word(params.pop("n"))
    if kind == "W":
        return cubed_word(params.pop("n"))
    if kind == "U":
        return alpha_candidate(params.pop("n"))
    if kind == "Ln":
        return unary_threshold_lang(params.pop("n"))
    if kind == "Aij":
        return bounded_occurrence_lang(
            params.pop("n"), params.pop("i"), params.pop("j")
        )
    raise ValueError(f"unknown family kind {kind!r}")
