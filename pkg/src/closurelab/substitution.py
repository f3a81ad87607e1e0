"""Regular substitutions on canonical DFAs.

A substitution maps each letter of a source alphabet to a regular language;
unmentioned letters map to themselves.  Applying one to a language splices a
fresh copy of the target automaton into every transition that reads a
substituted letter: an epsilon edge enters the copy, the copy's accepting
states epsilon back out to the transition's endpoint, and the original
lettered edge disappears.  Determinizing the spliced automaton gives the
image language over the union of the target alphabets.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .automata import Lang, Nfa
from .closures import is_closed
from .errors import FactorizationError
from .words import Alphabet, Letter, Word, letter_name


@dataclass(frozen=True)
class SubstitutionMap:
    """Per-letter image languages over a fixed source alphabet.

    Only non-default entries are stored; every other letter maps to itself
    (as a one-word language over just that letter).
    """

    source: Alphabet
    mapped: tuple[tuple[Letter, Lang], ...]

    def __post_init__(self):
        letters = [a for a, _ in self.mapped]
        if len(set(letters)) != len(letters):
            raise ValueError("a letter may be mapped only once")
        for a in letters:
            if a not in self.source:
                raise ValueError(
                    f"mapped letter {letter_name(a)} not in source alphabet"
                )

    @classmethod
    def of(cls, source: Alphabet, mapping: dict[Letter, Lang]) -> "SubstitutionMap":
        return cls(source, tuple(sorted(mapping.items(), key=lambda kv: kv[0])))

    @classmethod
    def identity(cls, source: Alphabet) -> "SubstitutionMap":
        return cls(source, ())

    def is_identity(self, a: Letter) -> bool:
        return all(key != a for key, _ in self.mapped)

    def target(self, a: Letter) -> Lang:
        for key, lang in self.mapped:
            if key == a:
                return lang
        if a not in self.source:
            raise ValueError(f"letter {letter_name(a)} not in source alphabet")
        return Lang.single_word((a,), Alphabet((a,)))

    @property
    def target_alphabet(self) -> Alphabet:
        """Union of the image alphabets over every source letter."""
        letters: set[Letter] = set()
        for a in self.source.letters:
            letters |= set(self.target(a).alphabet.letters)
        return Alphabet(tuple(sorted(letters)))


def substitute(lang: Lang, rho: SubstitutionMap, literal: bool = False) -> Lang:
    """Image of ``lang`` under the substitution.

    Identity letters keep their plain transition unless ``literal`` is set,
    in which case even they go through the splice; the two must agree, which
    the tests check.
    """
    if lang.alphabet != rho.source:
        raise ValueError("substitution source alphabet must match the language")
    gamma = rho.target_alphabet
    d = lang.dfa
    trans: set[tuple[int, int | None, int]] = set()
    n = d.n_states
    for q in range(d.n_states):
        for pos, a in enumerate(lang.alphabet.letters):
            q2 = d.transitions[q][pos]
            if not literal and rho.is_identity(a):
                trans.add((q, gamma.position(a), q2))
                continue
            target = rho.target(a).dfa
            offset = n
            n += target.n_states
            for s in range(target.n_states):
                for tpos, b in enumerate(target.alphabet.letters):
                    trans.add(
                        (
                            offset + s,
                            gamma.position(b),
                            offset + target.transitions[s][tpos],
                        )
                    )
            trans.add((q, None, offset + target.initial))
            for f in target.finals:
                trans.add((offset + f, None, q2))
    nfa = Nfa(
        gamma,
        n,
        frozenset(trans),
        frozenset({d.initial}),
        d.finals,
    )
    return Lang.from_nfa(nfa)


def substitute_single(lang: Lang, a: Letter, k: Lang, literal: bool = False) -> Lang:
    """Substitute the single letter ``a`` by ``k``, all others unchanged."""
    if a not in lang.alphabet:
        raise ValueError(f"letter {letter_name(a)} not in the language's alphabet")
    return substitute(lang, SubstitutionMap.of(lang.alphabet, {a: k}), literal)


@functools.lru_cache(maxsize=256)
def _factor_context(l: Lang, a: Letter, k: Lang):
    """Shared search state for factorizations of all quotients of one image."""
    if set(l.alphabet.letters) & set(k.alphabet.letters):
        raise ValueError("the two alphabets must be disjoint")
    if k.is_empty():
        raise ValueError("the substituted language must be non-empty")
    if not is_closed(l, "down") or not is_closed(k, "down"):
        raise ValueError("both languages must be downward closed")
    image = substitute_single(l, a, k)
    gamma = image.alphabet

    p_candidates: list[Lang] = []
    for _, p in k.residuals():
        if p not in p_candidates:
            p_candidates.append(p)
    eps = Lang.epsilon(k.alphabet)
    if eps not in p_candidates:
        p_candidates.append(eps)
    q_candidates: list[Lang] = []
    for _, q in l.residuals():
        if q not in q_candidates:
            q_candidates.append(q)

    images = {q: substitute_single(q, a, k) for q in q_candidates}
    ranked = tuple(
        sorted(
            (
                (p.extended(gamma).concat(images[q]), p, q)
                for p in p_candidates
                for q in q_candidates
            ),
            key=lambda entry: (entry[1].kappa, entry[2].kappa),
        )
    )
    return image, ranked


def factor_quotient(l: Lang, a: Letter, k: Lang, x: Word) -> tuple[Lang, Lang]:
    """Split a quotient of the substituted language into carry times image.

    For downward closed ``l`` and ``k`` over disjoint alphabets, every
    quotient of the substituted language is some quotient-or-epsilon ``P`` of
    ``k`` concatenated with the image of some quotient ``Q`` of ``l``.  The
    pair is found by finite search, smallest state counts first; exhausting
    the candidates would falsify that theorem, so it raises instead of
    returning quietly.
    """
    image, ranked = _factor_context(l, a, k)
    target = image.residual(x)
    for candidate, p, q in ranked:
        if candidate == target:
            return p, q
    raise FactorizationError(
        f"no residual factorization for quotient by {x!r}"
    )
