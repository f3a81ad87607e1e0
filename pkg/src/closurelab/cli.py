"""Command-line front end.

Language arguments accept four spellings:

- a path to a text-format automaton file,
- ``sre:EXPR`` for a simple regular expression,
- ``down:WORD`` for the downward closure of a word,
- ``up:WORD`` for the upward closure of a word,

with the empty word spelled ``-`` and alphabets inferred from the input
unless ``--alphabet`` says otherwise.  Exit codes: 0 on success or all
checks passing, 1 on a failed check or a falsified claim, 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from .automata import Lang, format_lang, load_lang, to_dot
from .closures import down_word, downward_closure, up_word, upward_closure
from .errors import AlphabetMismatch, FactorizationError, ParseError
from .experiments import build_sqrt_dividing_family, run_suite, suite_names
from .report import Report, write_csv, write_json
from .roots import kth_root, star_root
from .sre import parse_sre, render_sre, sre_residuals, sre_to_lang
from .substitution import SubstitutionMap, substitute
from .words import Alphabet, letter_from_name, parse_word, word_alphabet, word_display

PREFIXES = ("sre:", "down:", "up:")


def _parse_alphabet(text: str | None) -> Alphabet | None:
    return None if text is None else Alphabet.from_names(text)


def load_language(spec: str, alphabet: Alphabet | None = None) -> Lang:
    """Resolve one language argument (path, sre:, down:, or up: form)."""
    if spec.startswith("sre:"):
        return sre_to_lang(parse_sre(spec[4:]), alphabet)
    if spec.startswith("down:"):
        w = parse_word(spec[5:])
        return down_word(w, alphabet or word_alphabet(w))
    if spec.startswith("up:"):
        w = parse_word(spec[3:])
        return up_word(w, alphabet or word_alphabet(w))
    try:
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(
            f"cannot read {spec!r} ({exc.strerror}); language arguments are a "
            f"file path or one of {', '.join(PREFIXES)}"
        ) from None
    lang = load_lang(text)
    if alphabet is not None:
        lang = lang.extended(alphabet)
    return lang


def _load_map_target(value: str) -> Lang:
    """Target of one --map entry: a file if the path exists, else a
    prefixed language form, else a bare SRE."""
    if os.path.exists(value):
        return load_language(value)
    if value.startswith(PREFIXES):
        return load_language(value)
    return sre_to_lang(parse_sre(value))


def _default_seed(value: int | None) -> int:
    if value is not None:
        return value
    raw = os.environ.get("CLOSURELAB_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"CLOSURELAB_SEED must be an integer, got {raw!r}") from None


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_kappa(args) -> int:
    lang = load_language(args.lang, _parse_alphabet(args.alphabet))
    print(lang.kappa)
    return 0


def _cmd_closure(args) -> int:
    lang = load_language(args.lang, _parse_alphabet(args.alphabet))
    out = downward_closure(lang) if args.down else upward_closure(lang)
    print(format_lang(out), end="")
    return 0


def _cmd_root(args) -> int:
    lang = load_language(args.lang, _parse_alphabet(args.alphabet))
    out = star_root(lang) if args.star else kth_root(lang, args.k)
    print(format_lang(out), end="")
    return 0


def _cmd_subst(args) -> int:
    lang = load_language(args.lang, _parse_alphabet(args.alphabet))
    mapping = {}
    for entry in args.map:
        name, sep, value = entry.partition("=")
        if not sep or not value:
            raise ParseError(f"--map expects LETTER=LANG, got {entry!r}")
        letter = letter_from_name(name.strip())
        mapping[letter] = _load_map_target(value.strip())
    rho = SubstitutionMap.of(lang.alphabet, mapping)
    print(format_lang(substitute(lang, rho)), end="")
    return 0


def _cmd_quotient(args) -> int:
    lang = load_language(args.lang, _parse_alphabet(args.alphabet))
    print(format_lang(lang.residual(parse_word(args.by))), end="")
    return 0


def _cmd_sre(args) -> int:
    expr = parse_sre(args.expr)
    alphabet = _parse_alphabet(args.alphabet)
    if args.to_dfa:
        print(format_lang(sre_to_lang(expr, alphabet)), end="")
    elif args.residuals:
        residuals = sre_residuals(expr, alphabet)
        print(f"kappa {len(residuals)}")
        for i, r in enumerate(residuals):
            print(f"{i}: {render_sre(r)}")
    else:
        print(render_sre(expr))
    return 0


def _cmd_alpha(args) -> int:
    rep = run_suite(
        "alpha",
        seed=_default_seed(args.seed),
        max_n=args.max_n,
        prune=not args.no_prune,
        jobs=args.jobs,
    )
    print(rep.table_str())
    return 0 if rep.passed else 1


def _cmd_divset(args) -> int:
    family = build_sqrt_dividing_family(args.n)
    for k, ds in enumerate(family, start=1):
        words = " ".join(word_display(w) for w in ds.words)
        print(f"F_{k} (size {len(ds.words)}, target kappa {ds.target.kappa}): {words}")
    return 0


def _cmd_verify(args) -> int:
    seed = _default_seed(args.seed)
    names = suite_names() if args.suite == "all" else [args.suite]
    reports: list[Report] = []
    for name in names:
        rep = run_suite(name, seed=seed)
        reports.append(rep)
        print(rep.table_str())
        print()
    if args.json:
        write_json(reports, args.json)
    if args.csv:
        write_csv(reports, args.csv)
    if args.plots:
        from .figures import render_reports

        for path in render_reports(reports, args.plots):
            print(f"wrote {path}")
    ok = all(r.passed for r in reports)
    print(f"verify: {'PASS' if ok else 'FAIL'} ({sum(r.passed for r in reports)}/{len(reports)} suites)")
    return 0 if ok else 1


def _cmd_dot(args) -> int:
    lang = load_language(args.lang, _parse_alphabet(args.alphabet))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(to_dot(lang))
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_lang_argument(sub) -> None:
    sub.add_argument("lang", help="path, sre:EXPR, down:WORD, or up:WORD")
    sub.add_argument("--alphabet", help="force the alphabet, e.g. abc")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="closurelab",
        description="State complexity lab for subword- and superword-closed languages.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("kappa", help="number of quotients (canonical DFA size)")
    _add_lang_argument(sub)
    sub.set_defaults(handler=_cmd_kappa)

    sub = subs.add_parser("closure", help="downward or upward closure")
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--down", action="store_true")
    group.add_argument("--up", action="store_true")
    _add_lang_argument(sub)
    sub.set_defaults(handler=_cmd_closure)

    sub = subs.add_parser("root", help="k-th root or star root")
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int)
    group.add_argument("--star", action="store_true")
    _add_lang_argument(sub)
    sub.set_defaults(handler=_cmd_root)

    sub = subs.add_parser("subst", help="apply a regular substitution")
    sub.add_argument(
        "--map",
        action="append",
        default=[],
        metavar="LETTER=LANG",
        help="letter target (path, prefixed form, or bare SRE); repeatable",
    )
    _add_lang_argument(sub)
    sub.set_defaults(handler=_cmd_subst)

    sub = subs.add_parser("quotient", help="left quotient by a word")
    sub.add_argument("--by", required=True, help="word, - for epsilon")
    _add_lang_argument(sub)
    sub.set_defaults(handler=_cmd_quotient)

    sub = subs.add_parser("sre", help="parse, normalize, or expand an SRE")
    sub.add_argument("expr")
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--to-dfa", action="store_true")
    group.add_argument("--residuals", action="store_true")
    sub.add_argument("--alphabet", help="force the alphabet, e.g. abc")
    sub.set_defaults(handler=_cmd_sre)

    sub = subs.add_parser("alpha", help="max root complexity over words up to a length")
    sub.add_argument("--max-n", type=int, default=9)
    sub.add_argument("--no-prune", action="store_true")
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--seed", type=int)
    sub.set_defaults(handler=_cmd_alpha)

    sub = subs.add_parser("divset", help="dividing-set family for square roots")
    sub.add_argument("--n", type=int, required=True)
    sub.set_defaults(handler=_cmd_divset)

    sub = subs.add_parser("verify", help="run a verification suite (or all)")
    sub.add_argument("suite", choices=suite_names() + ["all"])
    sub.add_argument("--seed", type=int)
    sub.add_argument("--json", help="write the report(s) as JSON")
    sub.add_argument("--csv", help="write the report rows as CSV")
    sub.add_argument("--plots", help="render report charts (PNG) into this directory")
    sub.set_defaults(handler=_cmd_verify)

    sub = subs.add_parser("dot", help="emit Graphviz DOT for a language")
    sub.add_argument("--out", required=True)
    _add_lang_argument(sub)
    sub.set_defaults(handler=_cmd_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.handler(args)
    except FactorizationError as exc:
        print(f"falsified: {exc}", file=sys.stderr)
        return 1
    except (ParseError, AlphabetMismatch, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
