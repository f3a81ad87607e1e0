"""Acceptance gate: the thirteen headline claims, one test and one line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
verdict lines.  Each test drives the public verification suites (or, for the
symbolic engine, the library API directly) at their default scales and also
enforces the documented runtime budget.
"""

import time

from closurelab.experiments import case_rng, random_down_sre, random_word, run_suite
from closurelab.sre import (
    parse_sre,
    sre_quotient,
    sre_residuals,
    sre_substitute,
    sre_to_lang,
    subst_quotient_rule,
)
from closurelab.substitution import substitute_single
from closurelab.words import Alphabet

SEED = 0


def _line(num: int, ok: bool, detail: str, seconds: float) -> None:
    verdict = "PASS" if ok else "FAIL"
    print(f"criterion {num:2d}: {verdict} - {detail} ({seconds:.1f}s)")


def _run_suites(num: int, detail: str, budget: float, names: list[str], **params):
    t0 = time.perf_counter()
    reports = [run_suite(name, seed=SEED, **params.get(name, {})) for name in names]
    seconds = time.perf_counter() - t0
    _line(num, all(r.passed for r in reports), detail, seconds)
    for rep in reports:
        assert rep.passed, rep.table_str()
    assert seconds < budget, f"criterion {num} took {seconds:.1f}s, budget {budget:.0f}s"


def test_criterion_01_kappa_of_word_closure():
    _run_suites(
        1,
        "kappa(down(w)) = |w| + 2 on 200 random words up to length 12",
        5.0,
        ["kappa-down-word"],
    )


def test_criterion_02_square_root_of_cubed_word():
    _run_suites(
        2,
        "kappa(sqrt(down(W_n))) = n^2 - n + 3 for n = 1..5",
        30.0,
        ["sqrt-down-Wn"],
    )


def test_criterion_03_roots_of_superword_closures_grow_exponentially():
    _run_suites(
        3,
        "kappa(root_k(up(V_n))) >= 2^n for n = 1..4, k in {2, 3, *}",
        60.0,
        ["sqrt-up-lower"],
    )


def test_criterion_04_cut_and_shuffle_generators():
    _run_suites(
        4,
        "|CS(V_n)| = 2^n - n and CS(V_n) minimally generates root_2(up(V_n)), n = 1..5",
        60.0,
        ["cs-generators"],
    )


def test_criterion_05_dividing_family_growth():
    _run_suites(
        5,
        "F_n divides root_2(up(V_n)); |F_n| obeys the recurrence and >= 0.46 * 2.41^n",
        60.0,
        ["dividing-family"],
    )


def test_criterion_06_substitution_exact_counts():
    _run_suites(
        6,
        "substitution kappa: 2^n family, prod(m_i + 2) family, and the word formula",
        60.0,
        ["subst-2n", "subst-product-lower"],
    )


def test_criterion_07_substitution_upper_bounds():
    _run_suites(
        7,
        "kappa of substituted languages within kappa(L) * kappa(K) on 1000 + 1000 random pairs",
        120.0,
        ["subst-disjoint-bound", "subst-product-bound"],
    )


def test_criterion_08_symbolic_engine_matches_automata():
    t0 = time.perf_counter()
    sigma = Alphabet.from_size(3)
    a = 0
    mismatches: list[str] = []

    for i in range(500):
        rng = case_rng(801, i)
        e = random_down_sre(rng, sigma.letters)
        w = random_word(rng, sigma, 3)
        if sre_to_lang(sre_quotient(e, w), sigma) != sre_to_lang(e, sigma).residual(w):
            mismatches.append(f"quotient case {i}")

    for i in range(500):
        rng = case_rng(802, i)
        e = random_down_sre(rng, sigma.letters)
        k = random_down_sre(rng, sigma.letters)
        symbolic = sre_to_lang(sre_substitute(e, a, k), sigma)
        direct = substitute_single(sre_to_lang(e, sigma), a, sre_to_lang(k, sigma))
        if symbolic != direct.extended(sigma):
            mismatches.append(f"substitute case {i}")

    for i in range(500):
        rng = case_rng(803, i)
        l = random_down_sre(rng, sigma.letters)
        k = random_down_sre(rng, sigma.letters)
        b = rng.choice(sigma.letters)
        symbolic = sre_to_lang(subst_quotient_rule(l, k, a, b), sigma)
        image = substitute_single(sre_to_lang(l, sigma), a, sre_to_lang(k, sigma))
        if symbolic != image.extended(sigma).residual((b,)):
            mismatches.append(f"quotient-rule case {i}")

    for i in range(500):
        rng = case_rng(804, i)
        e = random_down_sre(rng, sigma.letters)
        if len(sre_residuals(e, sigma)) != sre_to_lang(e, sigma).kappa:
            mismatches.append(f"residual-count case {i}")

    # the sum instance: (down(ab) + down(ba))^(a <- down(bbc)) quotiented by b
    got = subst_quotient_rule(parse_sre("a?b? + b?a?"), parse_sre("b?b?c?"), 0, 1)
    expect = parse_sre("b?c?b? + b?b?c?")
    if sre_to_lang(got, sigma) != sre_to_lang(expect, sigma):
        mismatches.append("sum quotient instance")

    seconds = time.perf_counter() - t0
    _line(
        8,
        not mismatches,
        "symbolic quotients, substitutions, and residual counts agree with automata (500 cases each)",
        seconds,
    )
    assert not mismatches, mismatches[:10]
    assert seconds < 60.0, f"criterion 8 took {seconds:.1f}s, budget 60s"


def test_criterion_09_factorization_of_image_residuals():
    _run_suites(
        9,
        "every residual of a substituted language factors through a residual pair (200 pairs)",
        60.0,
        ["psi-factorization"],
    )


def test_criterion_10_residual_set_commutation():
    _run_suites(
        10,
        "R(rho(I)) = rho(R(I)) as sets on 200 products, plus the pointwise counterexample",
        30.0,
        ["subst-commutation"],
    )


def test_criterion_11_alpha_table():
    _run_suites(
        11,
        "alpha(n) for n <= 9: bounded by c(n)^2 - c(n) + 3, attained by U_n, monotone",
        600.0,
        ["alpha"],
    )


def test_criterion_12_power_complexity_is_tight():
    _run_suites(
        12,
        "kappa(L_n^k) = k(n - 1) + 1 for n, k <= 5",
        10.0,
        ["lk-tight"],
    )


def test_criterion_13_closure_and_root_preservation():
    _run_suites(
        13,
        "closure axioms, duality, and root closedness preservation on 500 cases each",
        60.0,
        ["closure-axioms", "root-preserves-closure"],
    )
