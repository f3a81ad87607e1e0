"""Simple regular expressions: the syntax of downward closed languages.

An expression is either the empty-language marker ``0`` or a finite sum of
products of atoms, where an atom is ``a?`` (one optional letter) or ``[ab]*``
(any word over a letter set).  Every atom's language contains the empty word,
so every product's does too; the sum of no products is read as the language
``{epsilon}``, which is why the empty language needs its own marker.

These expressions denote exactly the downward closed languages.  The module
computes quotients, substitutions, and residual sets symbolically; language
questions (inclusion, equivalence) are settled by the automata backend, which
keeps the symbolic layer honest.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .automata import Lang, Nfa
from .errors import ParseError
from .words import Alphabet, Letter, Word, letter_from_name, letter_name


@dataclass(frozen=True)
class LetterAtom:
    """One optional letter: the two-word language {letter, epsilon}."""

    letter: Letter


@dataclass(frozen=True)
class StarAtom:
    """All words over a non-empty letter set."""

    letters: frozenset[Letter]

    def __post_init__(self):
        if not self.letters:
            raise ValueError("a star atom needs at least one letter")


Atom = LetterAtom | StarAtom


@dataclass(frozen=True)
class Product:
    atoms: tuple[Atom, ...]


@dataclass(frozen=True)
class Sre:
    """A sum of products, or the empty language when ``empty`` is set.

    No products with ``empty`` unset denotes ``{epsilon}``.
    """

    products: tuple[Product, ...] = ()
    empty: bool = False

    def __post_init__(self):
        if self.empty and self.products:
            raise ValueError("the empty marker admits no products")


ZERO = Sre((), True)
EPSILON_SRE = Sre(())


def _atom_key(atom: Atom):
    if isinstance(atom, LetterAtom):
        return (0, (atom.letter,))
    return (1, tuple(sorted(atom.letters)))


def _product_key(product: Product):
    return (len(product.atoms), tuple(_atom_key(a) for a in product.atoms))


def atom_letters(atom: Atom) -> frozenset[Letter]:
    if isinstance(atom, LetterAtom):
        return frozenset((atom.letter,))
    return atom.letters


def sre_letters(e: Sre) -> frozenset[Letter]:
    """Letters occurring in the expression (equivalently, in its language)."""
    out: set[Letter] = set()
    for p in e.products:
        for atom in p.atoms:
            out |= atom_letters(atom)
    return frozenset(out)


def sre_alphabet(e: Sre, floor: Letter = 0) -> Alphabet:
    """Declared alphabet inferred from the expression, never empty."""
    letters = sre_letters(e)
    if not letters:
        return Alphabet((floor,))
    return Alphabet(tuple(sorted(letters)))


def down_word_product(word: Word) -> Product:
    """The product whose language is the set of subwords of ``word``."""
    return Product(tuple(LetterAtom(a) for a in word))


def down_word_sre(word: Word) -> Sre:
    return Sre((down_word_product(word),))


def letters_sum(letters) -> Sre:
    """The language holding epsilon and each given letter alone."""
    return Sre(
        tuple(Product((LetterAtom(a),)) for a in sorted(set(letters)))
    )


# -- parsing and rendering ----------------------------------------------------


def parse_sre(text: str) -> Sre:
    """Parse and normalize an expression; whitespace is insignificant."""
    squeezed = "".join(text.split())
    if not squeezed:
        raise ParseError("empty expression")
    if squeezed == "0":
        return ZERO
    products = []
    offset = 0
    for part in squeezed.split("+"):
        if part == "0":
            raise ParseError(
                "the empty-language marker 0 cannot appear inside a sum",
                position=offset,
            )
        products.append(_parse_product(part, offset))
        offset += len(part) + 1
    return sre_normalize(Sre(tuple(products)))


def _parse_product(part: str, offset: int) -> Product:
    if not part:
        raise ParseError("missing product between + signs", position=offset)
    if part == "1":
        return Product(())
    atoms: list[Atom] = []
    i = 0
    while i < len(part):
        c = part[i]
        if c.islower() and c.isalpha():
            if i + 1 >= len(part) or part[i + 1] != "?":
                raise ParseError(
                    f"letter {c!r} must be followed by ?", position=offset + i
                )
            atoms.append(LetterAtom(letter_from_name(c)))
            i += 2
        elif c == "[":
            j = part.find("]", i + 1)
            if j < 0:
                raise ParseError("unclosed [", position=offset + i)
            body = part[i + 1 : j]
            if not body:
                raise ParseError("empty letter set", position=offset + i)
            letters = frozenset(letter_from_name(b) for b in body)
            if j + 1 >= len(part) or part[j + 1] != "*":
                raise ParseError(
                    "letter set must be followed by *", position=offset + j
                )
            atoms.append(StarAtom(letters))
            i = j + 2
        else:
            raise ParseError(f"unexpected character {c!r}", position=offset + i)
    return Product(tuple(atoms))


def render_atom(atom: Atom) -> str:
    if isinstance(atom, LetterAtom):
        return f"{letter_name(atom.letter)}?"
    return "[" + "".join(letter_name(b) for b in sorted(atom.letters)) + "]*"


def render_product(product: Product) -> str:
    if not product.atoms:
        return "1"
    return "".join(render_atom(a) for a in product.atoms)


def render_sre(e: Sre) -> str:
    if e.empty:
        return "0"
    if not e.products:
        return "1"
    return " + ".join(render_product(p) for p in e.products)


# -- semantics ----------------------------------------------------------------


def sre_to_lang(e: Sre, alphabet: Alphabet | None = None) -> Lang:
    """The denoted language as a canonical DFA.

    Without an explicit alphabet the letters of the expression are used,
    falling back to the single letter ``a`` for letterless expressions.
    """
    if alphabet is None:
        alphabet = sre_alphabet(e)
    if e.empty:
        return Lang.empty(alphabet)
    trans: set[tuple[int, int | None, int]] = set()
    finals = {0}
    n = 1
    for product in e.products:
        trans.add((0, None, n))
        cur = n
        n += 1
        for atom in product.atoms:
            if isinstance(atom, LetterAtom):
                trans.add((cur, alphabet.position(atom.letter), n))
                trans.add((cur, None, n))
                cur = n
                n += 1
            else:
                for b in atom.letters:
                    trans.add((cur, alphabet.position(b), cur))
                trans.add((cur, None, n))
                cur = n
                n += 1
        finals.add(cur)
    nfa = Nfa(alphabet, n, frozenset(trans), frozenset({0}), frozenset(finals))
    return Lang.from_nfa(nfa)


@functools.lru_cache(maxsize=None)
def _product_lang(product: Product, alphabet: Alphabet) -> Lang:
    return sre_to_lang(Sre((product,)), alphabet)


def product_inclusion(p1: Product, p2: Product, alphabet: Alphabet | None = None) -> bool:
    """Language inclusion between two products, decided on the automata."""
    if alphabet is None:
        letters = set()
        for p in (p1, p2):
            for atom in p.atoms:
                letters |= atom_letters(atom)
        alphabet = Alphabet(tuple(sorted(letters))) if letters else Alphabet((0,))
    if p1 == p2 or p1.atoms == p2.atoms[len(p2.atoms) - len(p1.atoms) :]:
        # a product swallows each of its suffix products
        return True
    return _product_lang(p1, alphabet).subset(_product_lang(p2, alphabet))


def sre_normalize(e: Sre) -> Sre:
    """Drop products included in other summands, deduplicate, order summands.

    The result is structurally deterministic; language-equal summands keep
    the one with the least sort key, and a sum that boils down to the empty
    product alone becomes the empty sum (both spell ``{epsilon}``).
    """
    if e.empty:
        return ZERO
    products = sorted(set(e.products), key=_product_key)
    if not products:
        return Sre(())
    letters = sre_letters(e)
    alphabet = Alphabet(tuple(sorted(letters))) if letters else Alphabet((0,))
    langs = [_product_lang(p, alphabet) for p in products]
    kept: list[int] = []
    for i in range(len(products)):
        drop = False
        for j in range(len(products)):
            if i == j or not langs[i].subset(langs[j]):
                continue
            if langs[j] == langs[i]:
                # equal languages: the smaller key survives
                if j < i:
                    drop = True
                    break
            else:
                drop = True
                break
        if not drop:
            kept.append(i)
    survivors = tuple(products[i] for i in kept)
    if survivors == (Product(()),):
        return Sre(())
    return Sre(survivors)


# -- quotients -----------------------------------------------------------------


def atom_contains(atom: Atom, b: Letter) -> bool:
    return b in atom_letters(atom)


def product_quotient(product: Product, b: Letter) -> Product | None:
    """Left quotient of a product by one letter; ``None`` means empty.

    The first atom containing the letter decides: a star atom stays (it can
    keep producing), a letter atom is consumed, everything before it can only
    contribute the empty word and is dropped.
    """
    for i, atom in enumerate(product.atoms):
        if atom_contains(atom, b):
            if isinstance(atom, StarAtom):
                return Product(product.atoms[i:])
            return Product(product.atoms[i + 1 :])
    return None


def sre_letter_quotient(e: Sre, b: Letter) -> Sre:
    if e.empty:
        return ZERO
    survivors = tuple(
        q for q in (product_quotient(p, b) for p in e.products) if q is not None
    )
    if not survivors:
        return ZERO
    return sre_normalize(Sre(survivors))


def sre_quotient(e: Sre, word: Word) -> Sre:
    """Left quotient by a word, letter by letter, normalized."""
    out = sre_normalize(e)
    for b in word:
        out = sre_letter_quotient(out, b)
    return out


def sre_residuals(e: Sre, alphabet: Alphabet | None = None) -> list[Sre]:
    """All residual expressions, one per distinct residual language.

    Fixpoint of letter quotients modulo language equivalence; the list length
    equals the quotient count of the denoted language over ``alphabet``.
    """
    if alphabet is None:
        alphabet = sre_alphabet(e)
    start = sre_normalize(e)
    seen: dict[Lang, Sre] = {sre_to_lang(start, alphabet): start}
    queue = [start]
    while queue:
        cur = queue.pop(0)
        for b in alphabet.letters:
            nxt = sre_letter_quotient(cur, b)
            key = sre_to_lang(nxt, alphabet)
            if key not in seen:
                seen[key] = nxt
                queue.append(nxt)
    return list(seen.values())


# -- sums, concatenations, substitution ----------------------------------------


def sre_sum(parts) -> Sre:
    """Union of expressions; the empty marker is the neutral element."""
    products: list[Product] = []
    any_lang = False
    for part in parts:
        if part.empty:
            continue
        any_lang = True
        products.extend(part.products)
    if not any_lang:
        return ZERO
    return sre_normalize(Sre(tuple(products)))


def sre_concat(e1: Sre, e2: Sre) -> Sre:
    """Concatenation; products distribute pairwise.

    Every product contains epsilon, so pairwise concatenations subsume the
    lone summands of either side.
    """
    if e1.empty or e2.empty:
        return ZERO
    if not e1.products:
        return sre_normalize(e2)
    if not e2.products:
        return sre_normalize(e1)
    products = tuple(
        Product(p.atoms + q.atoms)
        for p in e1.products
        for q in e2.products
    )
    return sre_normalize(Sre(products))


def _atom_substitute(atom: Atom, a: Letter, k: Sre) -> list[tuple[Atom, ...]]:
    """Alternatives for one atom under ``a -> k``, each a run of atoms."""
    if isinstance(atom, LetterAtom):
        if atom.letter != a:
            return [(atom,)]
        if not k.products:
            # k adds nothing beyond epsilon (it is {epsilon} or empty), and
            # the optional letter always allowed epsilon anyway
            return [()]
        return [p.atoms for p in k.products]
    if a not in atom.letters:
        return [(atom,)]
    widened = frozenset(sre_letters(k) | (atom.letters - {a}))
    if not widened:
        return [()]
    return [(StarAtom(widened),)]


def sre_substitute(e: Sre, a: Letter, k: Sre) -> Sre:
    """Replace the letter ``a`` by the downward closed language of ``k``.

    Works atom by atom: the optional letter ``a?`` becomes ``k`` (distributed
    over the enclosing product), and any star set containing ``a`` widens to
    the letters of ``k`` instead of ``a``.
    """
    if e.empty:
        return ZERO
    out: list[Product] = []
    for product in e.products:
        alternative_runs = [
            _atom_substitute(atom, a, k) for atom in product.atoms
        ]
        for choice in itertools.product(*alternative_runs):
            out.append(Product(tuple(itertools.chain.from_iterable(choice))))
    return sre_normalize(Sre(tuple(out)))


def subst_quotient_rule(l: Sre, k: Sre, a: Letter, b: Letter) -> Sre:
    """Quotient of the substituted language, built symbolically.

    For ``b != a``: quotient the body and add the carry term where ``k`` has
    started being read; for ``b == a`` only the carry term survives, since the
    substituted language spells ``a`` through ``k`` alone.
    """
    carry = sre_concat(
        sre_letter_quotient(k, b),
        sre_substitute(sre_letter_quotient(l, a), a, k),
    )
    if b == a:
        return carry
    return sre_sum([sre_substitute(sre_letter_quotient(l, b), a, k), carry])


def is_product(e: Sre) -> bool:
    """Does the expression denote a directed (single-product) language?"""
    if e.empty:
        return False
    return len(sre_normalize(e).products) <= 1
