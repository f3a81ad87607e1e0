"""Finite automata over indexed alphabets, with a canonical DFA form.

A :class:`Lang` is a regular language held as its canonical DFA: complete
(an explicit dead state when needed), minimal, and numbered by breadth-first
search from the initial state with letters taken in alphabet order.  Minimal
complete DFAs are unique up to isomorphism and the BFS numbering picks one
representative, so two Langs over the same alphabet are equal (and hash
equal) exactly when they denote the same language.  The state count of a
Lang is therefore its quotient count: the number of distinct left quotients,
the dead state's empty quotient included whenever the language is proper.

Transitions are stored against letter positions (indexes into the alphabet's
letter tuple), not raw letter values, so the same machinery works for
languages over any subset of the letter universe.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import AlphabetMismatch, ParseError
from .words import (
    Alphabet,
    Word,
    letter_from_name,
    letter_name,
    word_alphabet,
)


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton: ``transitions[state][letter_pos]``."""

    alphabet: Alphabet
    transitions: tuple[tuple[int, ...], ...]
    initial: int
    finals: frozenset[int]

    def __post_init__(self):
        n = len(self.transitions)
        if n == 0:
            raise ValueError("a DFA needs at least one state")
        if not (0 <= self.initial < n):
            raise ValueError("initial state out of range")
        width = self.alphabet.size
        for row in self.transitions:
            if len(row) != width:
                raise ValueError("transition row width must match alphabet size")
            for t in row:
                if not (0 <= t < n):
                    raise ValueError("transition target out of range")
        if not all(0 <= q < n for q in self.finals):
            raise ValueError("final state out of range")

    @property
    def n_states(self) -> int:
        return len(self.transitions)

    def run(self, word: Word, start: int | None = None) -> int:
        """State reached from ``start`` (default: initial) after ``word``."""
        state = self.initial if start is None else start
        for a in word:
            state = self.transitions[state][self.alphabet.position(a)]
        return state

    def accepts(self, word: Word) -> bool:
        return self.run(word) in self.finals


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic automaton; transition symbols are letter positions,
    with ``None`` standing for an epsilon move."""

    alphabet: Alphabet
    n_states: int
    transitions: frozenset[tuple[int, int | None, int]]
    initials: frozenset[int]
    finals: frozenset[int]

    def __post_init__(self):
        for src, sym, dst in self.transitions:
            if not (0 <= src < self.n_states and 0 <= dst < self.n_states):
                raise ValueError("transition endpoint out of range")
            if sym is not None and not (0 <= sym < self.alphabet.size):
                raise ValueError("transition symbol out of range")
        if not all(0 <= q < self.n_states for q in self.initials | self.finals):
            raise ValueError("state out of range")


def determinize(nfa: Nfa) -> Dfa:
    """Subset construction with epsilon closure; the result is complete."""
    eps: list[set[int]] = [set() for _ in range(nfa.n_states)]
    by_symbol: list[dict[int, set[int]]] = [dict() for _ in range(nfa.alphabet.size)]
    for src, sym, dst in nfa.transitions:
        if sym is None:
            eps[src].add(dst)
        else:
            by_symbol[sym].setdefault(src, set()).add(dst)

    def closure(states) -> frozenset[int]:
        stack = list(states)
        out = set(states)
        while stack:
            s = stack.pop()
            for t in eps[s]:
                if t not in out:
                    out.add(t)
                    stack.append(t)
        return frozenset(out)

    start = closure(nfa.initials)
    index: dict[frozenset[int], int] = {start: 0}
    order: list[frozenset[int]] = [start]
    rows: list[list[int]] = []
    i = 0
    while i < len(order):
        subset = order[i]
        i += 1
        row = []
        for pos in range(nfa.alphabet.size):
            nxt: set[int] = set()
            for s in subset:
                nxt |= by_symbol[pos].get(s, frozenset())
            target = closure(nxt)
            if target not in index:
                index[target] = len(order)
                order.append(target)
            row.append(index[target])
        rows.append(row)
    finals = frozenset(
        i for i, subset in enumerate(order) if subset & nfa.finals
    )
    return Dfa(
        alphabet=nfa.alphabet,
        transitions=tuple(tuple(r) for r in rows),
        initial=0,
        finals=finals,
    )


def _restrict_reachable(dfa: Dfa) -> Dfa:
    order = [dfa.initial]
    new_id = {dfa.initial: 0}
    i = 0
    while i < len(order):
        s = order[i]
        i += 1
        for t in dfa.transitions[s]:
            if t not in new_id:
                new_id[t] = len(order)
                order.append(t)
    rows = tuple(
        tuple(new_id[t] for t in dfa.transitions[s]) for s in order
    )
    finals = frozenset(new_id[q] for q in dfa.finals if q in new_id)
    return Dfa(dfa.alphabet, rows, 0, finals)


def _merge_equivalent(dfa: Dfa) -> Dfa:
    """Moore partition refinement; assumes every state is reachable."""
    n = dfa.n_states
    cls = [1 if s in dfa.finals else 0 for s in range(n)]
    while True:
        signature: dict[tuple, int] = {}
        refined = []
        for s in range(n):
            key = (cls[s], tuple(cls[t] for t in dfa.transitions[s]))
            refined.append(signature.setdefault(key, len(signature)))
        if refined == cls:
            break
        cls = refined
    count = max(cls) + 1
    rows: list[tuple[int, ...] | None] = [None] * count
    for s in range(n):
        if rows[cls[s]] is None:
            rows[cls[s]] = tuple(cls[t] for t in dfa.transitions[s])
    finals = frozenset(cls[q] for q in dfa.finals)
    return Dfa(dfa.alphabet, tuple(rows), cls[dfa.initial], finals)


def _bfs_renumber(dfa: Dfa) -> Dfa:
    order = [dfa.initial]
    new_id = {dfa.initial: 0}
    i = 0
    while i < len(order):
        s = order[i]
        i += 1
        for t in dfa.transitions[s]:
            if t not in new_id:
                new_id[t] = len(order)
                order.append(t)
    rows = tuple(
        tuple(new_id[t] for t in dfa.transitions[s]) for s in order
    )
    finals = frozenset(new_id[q] for q in dfa.finals)
    return Dfa(dfa.alphabet, rows, 0, finals)


def canonical(dfa: Dfa) -> "Lang":
    """Canonical form: reachable part, merged equivalent states, BFS numbering."""
    return Lang(_bfs_renumber(_merge_equivalent(_restrict_reachable(dfa))))


@dataclass(frozen=True)
class Lang:
    """A regular language in canonical DFA form.

    Build one through the factories or :func:`canonical`; the constructor
    trusts that ``dfa`` is already canonical.
    """

    dfa: Dfa

    # -- factories ---------------------------------------------------------

    @classmethod
    def from_dfa(cls, dfa: Dfa) -> "Lang":
        return canonical(dfa)

    @classmethod
    def from_nfa(cls, nfa: Nfa) -> "Lang":
        return canonical(determinize(nfa))

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "Lang":
        row = tuple(0 for _ in range(alphabet.size))
        return cls(Dfa(alphabet, (row,), 0, frozenset()))

    @classmethod
    def universe(cls, alphabet: Alphabet) -> "Lang":
        row = tuple(0 for _ in range(alphabet.size))
        return cls(Dfa(alphabet, (row,), 0, frozenset({0})))

    @classmethod
    def epsilon(cls, alphabet: Alphabet) -> "Lang":
        return cls.single_word((), alphabet)

    @classmethod
    def single_word(cls, word: Word, alphabet: Alphabet | None = None) -> "Lang":
        if alphabet is None:
            alphabet = word_alphabet(word)
        n = len(word)
        sink = n + 1
        rows = []
        for i in range(n + 2):
            row = [sink] * alphabet.size
            if i < n:
                row[alphabet.position(word[i])] = i + 1
            rows.append(tuple(row))
        return canonical(Dfa(alphabet, tuple(rows), 0, frozenset({n})))

    @classmethod
    def finite(cls, words, alphabet: Alphabet | None = None) -> "Lang":
        words = list(words)
        if alphabet is None:
            present = sorted({a for w in words for a in w})
            alphabet = Alphabet(tuple(present)) if present else Alphabet((0,))
        out = cls.empty(alphabet)
        for w in words:
            out = out.union(cls.single_word(w, alphabet))
        return out

    # -- basic views -------------------------------------------------------

    @property
    def alphabet(self) -> Alphabet:
        return self.dfa.alphabet

    @property
    def kappa(self) -> int:
        """Number of distinct left quotients (= canonical state count)."""
        return self.dfa.n_states

    def accepts(self, word: Word) -> bool:
        return self.dfa.accepts(word)

    def is_empty(self) -> bool:
        return not self.dfa.finals

    def is_universal(self) -> bool:
        return len(self.dfa.finals) == self.dfa.n_states

    # -- quotients ---------------------------------------------------------

    def residual(self, word: Word) -> "Lang":
        """Left quotient by ``word``: all ``y`` with ``word + y`` in the language."""
        state = self.dfa.run(word)
        rerooted = Dfa(self.alphabet, self.dfa.transitions, state, self.dfa.finals)
        return canonical(rerooted)

    def residuals(self) -> list[tuple[Word, "Lang"]]:
        """All distinct left quotients, one per canonical state, each paired
        with its shortest (then lexicographically least) access word."""
        access: list[Word | None] = [None] * self.dfa.n_states
        access[0] = ()
        queue = deque([0])
        while queue:
            s = queue.popleft()
            for pos, t in enumerate(self.dfa.transitions[s]):
                if access[t] is None:
                    access[t] = access[s] + (self.alphabet.letters[pos],)
                    queue.append(t)
        return [(w, self.residual(w)) for w in access]

    # -- boolean operations --------------------------------------------------

    def _require_same_alphabet(self, other: "Lang"):
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch(
                f"alphabets differ: {self.alphabet} vs {other.alphabet}"
            )

    def _product(self, other: "Lang", keep) -> "Lang":
        self._require_same_alphabet(other)
        d1, d2 = self.dfa, other.dfa
        start = (d1.initial, d2.initial)
        index = {start: 0}
        order = [start]
        rows = []
        i = 0
        while i < len(order):
            p, q = order[i]
            i += 1
            row = []
            for pos in range(self.alphabet.size):
                t = (d1.transitions[p][pos], d2.transitions[q][pos])
                if t not in index:
                    index[t] = len(order)
                    order.append(t)
                row.append(index[t])
            rows.append(tuple(row))
        finals = frozenset(
            i
            for i, (p, q) in enumerate(order)
            if keep(p in d1.finals, q in d2.finals)
        )
        return canonical(Dfa(self.alphabet, tuple(rows), 0, finals))

    def union(self, other: "Lang") -> "Lang":
        return self._product(other, lambda a, b: a or b)

    def intersection(self, other: "Lang") -> "Lang":
        return self._product(other, lambda a, b: a and b)

    def difference(self, other: "Lang") -> "Lang":
        return self._product(other, lambda a, b: a and not b)

    def symmetric_difference(self, other: "Lang") -> "Lang":
        return self._product(other, lambda a, b: a != b)

    def complement(self) -> "Lang":
        d = self.dfa
        finals = frozenset(range(d.n_states)) - d.finals
        return canonical(Dfa(d.alphabet, d.transitions, d.initial, finals))

    def subset(self, other: "Lang") -> bool:
        return self.difference(other).is_empty()

    # -- composition ---------------------------------------------------------

    def to_nfa(self) -> Nfa:
        d = self.dfa
        trans = frozenset(
            (s, pos, d.transitions[s][pos])
            for s in range(d.n_states)
            for pos in range(self.alphabet.size)
        )
        return Nfa(self.alphabet, d.n_states, trans, frozenset({d.initial}), d.finals)

    def concat(self, other: "Lang") -> "Lang":
        self._require_same_alphabet(other)
        d1, d2 = self.dfa, other.dfa
        shift = d1.n_states
        trans = set()
        for s in range(d1.n_states):
            for pos in range(self.alphabet.size):
                trans.add((s, pos, d1.transitions[s][pos]))
        for s in range(d2.n_states):
            for pos in range(self.alphabet.size):
                trans.add((s + shift, pos, d2.transitions[s][pos] + shift))
        for f in d1.finals:
            trans.add((f, None, d2.initial + shift))
        nfa = Nfa(
            self.alphabet,
            d1.n_states + d2.n_states,
            frozenset(trans),
            frozenset({d1.initial}),
            frozenset(q + shift for q in d2.finals),
        )
        return Lang.from_nfa(nfa)

    def power(self, k: int) -> "Lang":
        """Concatenation of ``k`` copies; ``k`` must be at least 1."""
        if k < 1:
            raise ValueError("power requires k >= 1; spell out {epsilon} yourself")
        out = self
        for _ in range(k - 1):
            out = out.concat(self)
        return out

    def shuffle(self, other: "Lang") -> "Lang":
        """All interleavings of a word of self with a word of other."""
        self._require_same_alphabet(other)
        d1, d2 = self.dfa, other.dfa
        n1, n2 = d1.n_states, d2.n_states
        trans = set()
        for p in range(n1):
            for q in range(n2):
                s = p * n2 + q
                for pos in range(self.alphabet.size):
                    trans.add((s, pos, d1.transitions[p][pos] * n2 + q))
                    trans.add((s, pos, p * n2 + d2.transitions[q][pos]))
        finals = frozenset(
            p * n2 + q for p in d1.finals for q in d2.finals
        )
        nfa = Nfa(
            self.alphabet,
            n1 * n2,
            frozenset(trans),
            frozenset({d1.initial * n2 + d2.initial}),
            finals,
        )
        return Lang.from_nfa(nfa)

    def extended(self, alphabet: Alphabet) -> "Lang":
        """Same word set, declared over a larger alphabet; new letters are dead."""
        if not alphabet.contains(self.alphabet):
            raise AlphabetMismatch(
                f"{alphabet} does not contain {self.alphabet}"
            )
        d = self.dfa
        sink = d.n_states
        rows = []
        for s in range(d.n_states):
            row = []
            for a in alphabet.letters:
                if a in self.alphabet:
                    row.append(d.transitions[s][self.alphabet.position(a)])
                else:
                    row.append(sink)
            rows.append(tuple(row))
        rows.append(tuple(sink for _ in alphabet.letters))
        return canonical(Dfa(alphabet, tuple(rows), d.initial, d.finals))

    # -- enumeration ---------------------------------------------------------

    def _live_states(self) -> set[int]:
        back: list[set[int]] = [set() for _ in range(self.dfa.n_states)]
        for s, row in enumerate(self.dfa.transitions):
            for t in row:
                back[t].add(s)
        live = set(self.dfa.finals)
        stack = list(live)
        while stack:
            s = stack.pop()
            for p in back[s]:
                if p not in live:
                    live.add(p)
                    stack.append(p)
        return live

    def words_of_length(self, length: int):
        """Yield the accepted words of exactly ``length`` in lex order."""
        live = self._live_states()
        if self.dfa.initial not in live:
            return

        def go(state: int, prefix: tuple, remaining: int):
            if remaining == 0:
                if state in self.dfa.finals:
                    yield prefix
                return
            for pos, a in enumerate(self.alphabet.letters):
                t = self.dfa.transitions[state][pos]
                if t in live:
                    yield from go(t, prefix + (a,), remaining - 1)

        yield from go(self.dfa.initial, (), length)

    def words(self, max_len: int):
        """Yield accepted words of length at most ``max_len``, shortest first."""
        for n in range(max_len + 1):
            yield from self.words_of_length(n)


# -- module-level operation names ------------------------------------------


def kappa(lang: Lang) -> int:
    return lang.kappa


def residual(lang: Lang, word: Word) -> Lang:
    return lang.residual(word)


def residuals(lang: Lang) -> list[tuple[Word, Lang]]:
    return lang.residuals()


_BOOLEAN_OPS = {
    "union": Lang.union,
    "intersection": Lang.intersection,
    "difference": Lang.difference,
    "symmetric-difference": Lang.symmetric_difference,
}


def boolean(l1: Lang, l2: Lang, op: str) -> Lang:
    try:
        fn = _BOOLEAN_OPS[op]
    except KeyError:
        raise ValueError(f"unknown boolean op {op!r}") from None
    return fn(l1, l2)


def complement(lang: Lang) -> Lang:
    return lang.complement()


def equivalent(l1: Lang, l2: Lang) -> bool:
    """Language equality over a common alphabet; mismatched alphabets are an error."""
    if l1.alphabet != l2.alphabet:
        raise AlphabetMismatch(
            f"alphabets differ: {l1.alphabet} vs {l2.alphabet}"
        )
    return l1 == l2


def concat(l1: Lang, l2: Lang) -> Lang:
    return l1.concat(l2)


def power(lang: Lang, k: int) -> Lang:
    return lang.power(k)


def shuffle_lang(l1: Lang, l2: Lang) -> Lang:
    return l1.shuffle(l2)


def alphabet_extend(lang: Lang, alphabet: Alphabet) -> Lang:
    return lang.extended(alphabet)


def distinguisher_table(lang: Lang) -> dict[tuple[int, int], Word]:
    """Shortest distinguishing suffix for every pair of canonical states.

    Keys are ordered pairs ``(p, q)`` with ``p < q``; the suffix is accepted
    from exactly one of the two states and is the lexicographically least
    among the shortest ones.  In a canonical DFA every pair gets an entry.
    """
    d = lang.dfa
    n = d.n_states
    size = lang.alphabet.size

    def key(p: int, q: int) -> tuple[int, int]:
        return (p, q) if p < q else (q, p)

    dist: dict[tuple[int, int], int] = {}
    frontier = []
    for p in range(n):
        for q in range(p + 1, n):
            if (p in d.finals) != (q in d.finals):
                dist[(p, q)] = 0
                frontier.append((p, q))
    back: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for p in range(n):
        for q in range(p + 1, n):
            for pos in range(size):
                ta, tb = d.transitions[p][pos], d.transitions[q][pos]
                if ta != tb and key(ta, tb) != (p, q):
                    back.setdefault(key(ta, tb), []).append((p, q))
    i = 0
    while i < len(frontier):
        pair = frontier[i]
        i += 1
        for prev in back.get(pair, ()):
            if prev not in dist:
                dist[prev] = dist[pair] + 1
                frontier.append(prev)

    table: dict[tuple[int, int], Word] = {}
    for p in range(n):
        for q in range(p + 1, n):
            word = []
            a, b = p, q
            steps = dist[(p, q)]
            for _ in range(steps):
                for pos in range(size):
                    ta, tb = d.transitions[a][pos], d.transitions[b][pos]
                    if ta != tb and dist[key(ta, tb)] == dist[key(a, b)] - 1:
                        word.append(lang.alphabet.letters[pos])
                        a, b = ta, tb
                        break
            table[(p, q)] = tuple(word)
    return table


# -- text format and DOT -----------------------------------------------------


def parse_automaton(text: str) -> Nfa:
    """Parse the line-based automaton format.

    Recognized lines: ``alphabet:``, ``states:``, ``initial:``, ``final:``
    and ``trans: <src> <letter> <dst>`` where the letter ``eps`` marks an
    epsilon move.  Blank lines and ``#`` comments are skipped.
    """
    alphabet: Alphabet | None = None
    n_states: int | None = None
    initials: set[int] = set()
    finals: set[int] = set()
    raw_trans: list[tuple[int, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(":")
        head = head.strip()
        fields = rest.split()
        try:
            if head == "alphabet":
                alphabet = Alphabet(
                    tuple(sorted(letter_from_name(f) for f in fields))
                )
            elif head == "states":
                (n_states,) = (int(f) for f in fields)
            elif head == "initial":
                initials.update(int(f) for f in fields)
            elif head == "final":
                finals.update(int(f) for f in fields)
            elif head == "trans":
                src, letter, dst = fields
                raw_trans.append((int(src), letter, int(dst)))
            else:
                raise ParseError(f"line {lineno}: unknown declaration {head!r}")
        except (ValueError, ParseError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"line {lineno}: {line!r} is malformed") from exc
    if alphabet is None:
        raise ParseError("missing alphabet declaration")
    if n_states is None:
        raise ParseError("missing states declaration")
    if not initials:
        raise ParseError("missing initial declaration")
    trans = set()
    for src, letter, dst in raw_trans:
        sym = None if letter == "eps" else alphabet.position(letter_from_name(letter))
        trans.add((src, sym, dst))
    return Nfa(alphabet, n_states, frozenset(trans), frozenset(initials), frozenset(finals))


def load_lang(text: str) -> Lang:
    return Lang.from_nfa(parse_automaton(text))


def format_lang(lang: Lang) -> str:
    d = lang.dfa
    lines = [
        "alphabet: " + " ".join(letter_name(a) for a in lang.alphabet.letters),
        f"states: {d.n_states}",
        f"initial: {d.initial}",
        "final: " + " ".join(str(q) for q in sorted(d.finals)),
    ]
    for s in range(d.n_states):
        for pos, a in enumerate(lang.alphabet.letters):
            lines.append(f"trans: {s} {letter_name(a)} {d.transitions[s][pos]}")
    return "\n".join(lines) + "\n"


def format_nfa(nfa: Nfa) -> str:
    lines = [
        "alphabet: " + " ".join(letter_name(a) for a in nfa.alphabet.letters),
        f"states: {nfa.n_states}",
        "initial: " + " ".join(str(q) for q in sorted(nfa.initials)),
        "final: " + " ".join(str(q) for q in sorted(nfa.finals)),
    ]
    def symbol(sym):
        return "eps" if sym is None else letter_name(nfa.alphabet.letters[sym])
    for src, sym, dst in sorted(
        nfa.transitions, key=lambda t: (t[0], -1 if t[1] is None else t[1], t[2])
    ):
        lines.append(f"trans: {src} {symbol(sym)} {dst}")
    return "\n".join(lines) + "\n"


def to_dot(obj: Lang | Nfa, title: str = "") -> str:
    """GraphViz rendering of a Lang (its canonical DFA) or an Nfa."""
    lines = ["digraph automaton {", "  rankdir=LR;"]
    if title:
        lines.append(f'  label="{title}";')
    lines.append('  hidden [shape=none, label=""];')
    if isinstance(obj, Lang):
        d = obj.dfa
        initials = [d.initial]
        finals = d.finals
        n = d.n_states
        edges: dict[tuple[int, int], list[str]] = {}
        for s in range(n):
            for pos, a in enumerate(obj.alphabet.letters):
                edges.setdefault((s, d.transitions[s][pos]), []).append(letter_name(a))
    else:
        initials = sorted(obj.initials)
        finals = obj.finals
        n = obj.n_states
        edges = {}
        for src, sym, dst in sorted(
            obj.transitions, key=lambda t: (t[0], t[2], -1 if t[1] is None else t[1])
        ):
            name = "eps" if sym is None else letter_name(obj.alphabet.letters[sym])
            edges.setdefault((src, dst), []).append(name)
    for s in range(n):
        shape = "doublecircle" if s in finals else "circle"
        lines.append(f"  {s} [shape={shape}];")
    for q in initials:
        lines.append(f"  hidden -> {q};")
    for (src, dst), names in sorted(edges.items()):
        label = ",".join(names)
        lines.append(f'  {src} -> {dst} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
