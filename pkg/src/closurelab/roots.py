"""Root operators: the k-th root and the star root of a regular language.

The k-th root keeps the words whose k-fold repetition lies in the language;
the star root keeps the words some positive power of which does.  Both are
computed on the transition functions of the canonical DFA: the states of the
result are the functions reachable by composing one-letter actions, a word's
function applied k times to the initial state decides k-th root acceptance,
and for the star root it suffices to probe exponents up to the state count,
because the orbit of the initial state under a fixed function repeats within
that many steps.
"""

from __future__ import annotations

from .automata import Dfa, Lang, canonical

TransitionFunction = tuple[int, ...]


def _function_power(f: TransitionFunction, k: int) -> TransitionFunction:
    """k-fold self-composition by squaring; powers of one function commute."""
    result = tuple(range(len(f)))
    base = f
    while k:
        if k & 1:
            result = tuple(base[q] for q in result)
        base = tuple(base[q] for q in base)
        k >>= 1
    return result


def _reachable_functions(lang: Lang):
    """BFS over the transition monoid generated by the one-letter actions.

    Returns the interned function list (identity first) and the transition
    rows between them, indexed by letter position.
    """
    d = lang.dfa
    n = d.n_states
    actions = [
        tuple(d.transitions[q][pos] for q in range(n))
        for pos in range(lang.alphabet.size)
    ]
    identity = tuple(range(n))
    index: dict[TransitionFunction, int] = {identity: 0}
    order: list[TransitionFunction] = [identity]
    rows: list[tuple[int, ...]] = []
    i = 0
    while i < len(order):
        f = order[i]
        i += 1
        row = []
        for act in actions:
            g = tuple(act[q] for q in f)
            j = index.get(g)
            if j is None:
                j = len(order)
                index[g] = j
                order.append(g)
            row.append(j)
        rows.append(tuple(row))
    return order, rows


def kth_root(lang: Lang, k: int) -> Lang:
    """Language of the words ``x`` with ``x`` repeated ``k`` times in ``lang``."""
    if k < 1:
        raise ValueError("kth_root requires k >= 1")
    order, rows = _reachable_functions(lang)
    d = lang.dfa
    finals = frozenset(
        i
        for i, f in enumerate(order)
        if _function_power(f, k)[d.initial] in d.finals
    )
    return canonical(Dfa(lang.alphabet, tuple(rows), 0, finals))


def star_root(lang: Lang) -> Lang:
    """Language of the words some positive power of which lies in ``lang``."""
    order, rows = _reachable_functions(lang)
    d = lang.dfa

    def accepts(f: TransitionFunction) -> bool:
        q = d.initial
        for _ in range(d.n_states):
            q = f[q]
            if q in d.finals:
                return True
        return False

    finals = frozenset(i for i, f in enumerate(order) if accepts(f))
    return canonical(Dfa(lang.alphabet, tuple(rows), 0, finals))
