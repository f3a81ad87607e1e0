"""Downward and upward closures under the scattered-subword order.

The downward closure of a language adds every subword of every member; the
upward closure adds every superword over the declared alphabet.  Both are
regular for any language and both constructions below work directly on the
canonical DFA: deleting a letter is an epsilon move parallel to each letter
transition, inserting one is a self-loop on every letter at every state.
"""

from __future__ import annotations

from .automata import Lang, Nfa, equivalent
from .words import Word


def downward_closure(lang: Lang) -> Lang:
    d = lang.dfa
    trans = set()
    for s in range(d.n_states):
        for pos in range(lang.alphabet.size):
            t = d.transitions[s][pos]
            trans.add((s, pos, t))
            trans.add((s, None, t))
    nfa = Nfa(
        lang.alphabet,
        d.n_states,
        frozenset(trans),
        frozenset({d.initial}),
        d.finals,
    )
    return Lang.from_nfa(nfa)


def upward_closure(lang: Lang) -> Lang:
    d = lang.dfa
    trans = set()
    for s in range(d.n_states):
        for pos in range(lang.alphabet.size):
            trans.add((s, pos, d.transitions[s][pos]))
            trans.add((s, pos, s))
    nfa = Nfa(
        lang.alphabet,
        d.n_states,
        frozenset(trans),
        frozenset({d.initial}),
        d.finals,
    )
    return Lang.from_nfa(nfa)


def is_closed(lang: Lang, direction: str) -> bool:
    """Is the language its own closure?  ``direction`` is ``down`` or ``up``."""
    if direction == "down":
        return downward_closure(lang) == lang
    if direction == "up":
        return upward_closure(lang) == lang
    raise ValueError(f"direction must be 'down' or 'up', got {direction!r}")


def down_word(word: Word, alphabet=None) -> Lang:
    """Downward closure of a single word."""
    return downward_closure(Lang.single_word(word, alphabet))


def up_word(word: Word, alphabet=None) -> Lang:
    """Upward closure of a single word."""
    return upward_closure(Lang.single_word(word, alphabet))


def minimal_generators(lang: Lang) -> list[Word]:
    """The minimal words of an upward closed language.

    Enumerates members in (length, lex) order, keeps the ones no single-letter
    deletion of which stays in the language, and stops as soon as the upward
    closure of the kept words equals the language.  The kept words are exactly
    the generating antichain, which is finite, so this terminates.
    """
    if not is_closed(lang, "up"):
        raise ValueError("minimal_generators requires an upward closed language")
    kept: list[Word] = []
    length = 0
    while True:
        for w in lang.words_of_length(length):
            if all(
                not lang.accepts(w[:i] + w[i + 1 :]) for i in range(len(w))
            ):
                kept.append(w)
        gen = Lang.finite(kept, lang.alphabet)
        if equivalent(upward_closure(gen), lang):
            return kept
        length += 1
