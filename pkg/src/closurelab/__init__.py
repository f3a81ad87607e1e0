"""State-complexity toolkit for subword-closed and superword-closed languages."""

from .automata import Dfa, Lang, Nfa, canonical, determinize, equivalent
from .closures import downward_closure, is_closed, minimal_generators, upward_closure
from .errors import AlphabetMismatch, FactorizationError, ParseError
from .experiments import (
    alpha_search,
    build_sqrt_dividing_family,
    hunt_counterexample,
    run_all,
    run_suite,
    suite_names,
    verify_dividing_set,
)
from .report import Report
from .roots import kth_root, star_root
from .sre import Sre, parse_sre, render_sre, sre_to_lang
from .substitution import SubstitutionMap, factor_quotient, substitute, substitute_single
from .words import Alphabet, Word, is_subword, normalize_word, parse_word, word_str

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AlphabetMismatch",
    "Dfa",
    "FactorizationError",
    "Lang",
    "Nfa",
    "ParseError",
    "Report",
    "Sre",
    "SubstitutionMap",
    "Word",
    "alpha_search",
    "build_sqrt_dividing_family",
    "canonical",
    "determinize",
    "downward_closure",
    "equivalent",
    "factor_quotient",
    "hunt_counterexample",
    "is_closed",
    "is_subword",
    "kth_root",
    "minimal_generators",
    "normalize_word",
    "parse_sre",
    "parse_word",
    "render_sre",
    "run_all",
    "run_suite",
    "sre_to_lang",
    "star_root",
    "substitute",
    "substitute_single",
    "suite_names",
    "upward_closure",
    "verify_dividing_set",
    "word_str",
]
