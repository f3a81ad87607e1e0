"""End-to-end CLI behavior through main(argv): output, files, exit codes."""

import json

import pytest

from closurelab.automata import Lang, format_lang, load_lang
from closurelab.cli import main
from closurelab.closures import down_word
from closurelab.errors import FactorizationError
from closurelab.report import Report
from closurelab.words import Alphabet, parse_word

AB = Alphabet.from_names("ab")


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- language arguments ------------------------------------------------------


def test_kappa_down_word(capsys):
    code, out, _ = run(capsys, "kappa", "down:abc")
    assert code == 0
    assert out == "5\n"


def test_kappa_sre_form(capsys):
    code, out, _ = run(capsys, "kappa", "sre:a?b?")
    assert code == 0
    assert out == "4\n"


def test_kappa_up_form(capsys):
    code, out, _ = run(capsys, "kappa", "up:ab")
    assert code == 0
    assert out == "3\n"


def test_kappa_from_file(capsys, tmp_path):
    path = tmp_path / "lang.txt"
    path.write_text(format_lang(down_word(parse_word("ab"), AB)))
    code, out, _ = run(capsys, "kappa", str(path))
    assert code == 0
    assert out == "4\n"


def test_alphabet_override_changes_the_language(capsys):
    # [a]* over its inferred one-letter alphabet is universal.
    code, out, _ = run(capsys, "kappa", "sre:[a]*")
    assert (code, out) == (0, "1\n")
    code, out, _ = run(capsys, "kappa", "sre:[a]*", "--alphabet", "ab")
    assert (code, out) == (0, "2\n")


def test_missing_file_is_a_usage_error(capsys):
    code, _, err = run(capsys, "kappa", "no/such/automaton.txt")
    assert code == 2
    assert "error:" in err
    assert "down:" in err


# -- closure / root / subst / quotient ---------------------------------------


def test_closure_up_round_trips(capsys):
    code, out, _ = run(capsys, "closure", "--up", "down:ab")
    assert code == 0
    lang = load_lang(out)
    assert lang == Lang.universe(AB)


def test_closure_requires_a_direction(capsys):
    code, _, _ = run(capsys, "closure", "down:ab")
    assert code == 2


def test_root_k2(capsys):
    code, out, _ = run(capsys, "root", "--k", "2", "down:aaaa")
    assert code == 0
    assert load_lang(out) == down_word(parse_word("aa"))


def test_root_star(capsys):
    code, out, _ = run(capsys, "root", "--star", "down:aa")
    assert code == 0
    assert load_lang(out) == down_word(parse_word("aa"))


def test_root_k0_rejected(capsys):
    code, _, err = run(capsys, "root", "--k", "0", "down:aa")
    assert code == 2
    assert "error:" in err


def test_subst_map(capsys):
    code, out, _ = run(capsys, "subst", "down:ab", "--map", "a=c?d?")
    assert code == 0
    expected = down_word(parse_word("cdb"), Alphabet.from_names("bcd"))
    assert load_lang(out) == expected


def test_subst_map_from_file(capsys, tmp_path):
    path = tmp_path / "target.txt"
    path.write_text(format_lang(down_word(parse_word("cd"))))
    code, out, _ = run(capsys, "subst", "down:ab", "--map", f"a={path}")
    assert code == 0
    assert load_lang(out) == down_word(parse_word("cdb"), Alphabet.from_names("bcd"))


def test_subst_without_map_is_identity(capsys):
    code, out, _ = run(capsys, "subst", "down:ab")
    assert code == 0
    assert load_lang(out) == down_word(parse_word("ab"))


def test_subst_map_needs_letter_equals_lang(capsys):
    code, _, err = run(capsys, "subst", "down:ab", "--map", "a")
    assert code == 2
    assert "LETTER=LANG" in err


def test_subst_map_unknown_letter(capsys):
    code, _, err = run(capsys, "subst", "down:ab", "--map", "c=d?")
    assert code == 2
    assert "error:" in err


def test_quotient_by_word(capsys):
    code, out, _ = run(capsys, "quotient", "--by", "b", "down:abba")
    assert code == 0
    assert load_lang(out) == down_word(parse_word("ba"), AB)


def test_quotient_by_epsilon_dash(capsys):
    code, out, _ = run(capsys, "quotient", "--by", "-", "down:ab")
    assert code == 0
    assert load_lang(out) == down_word(parse_word("ab"))


# -- sre ----------------------------------------------------------------------


def test_sre_prints_normal_form(capsys):
    code, out, _ = run(capsys, "sre", "a? + a?b?")
    assert code == 0
    assert out == "a?b?\n"


def test_sre_residuals(capsys):
    code, out, _ = run(capsys, "sre", "--residuals", "a?b?c?")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "kappa 5"
    rendered = {line.split(": ", 1)[1] for line in lines[1:]}
    assert rendered == {"a?b?c?", "b?c?", "c?", "1", "0"}


def test_sre_to_dfa(capsys):
    code, out, _ = run(capsys, "sre", "--to-dfa", "a?b?")
    assert code == 0
    assert load_lang(out) == down_word(parse_word("ab"))


def test_sre_parse_error(capsys):
    code, _, err = run(capsys, "sre", "[]*")
    assert code == 2
    assert "error:" in err


# -- alpha / divset ------------------------------------------------------------


def test_alpha_command(capsys):
    code, out, _ = run(capsys, "alpha", "--max-n", "3")
    assert code == 0
    assert out.startswith("== alpha")
    assert "-- alpha: PASS" in out


def test_alpha_rejects_max_n_zero(capsys):
    code, _, err = run(capsys, "alpha", "--max-n", "0")
    assert code == 2
    assert "error:" in err


def test_divset_levels(capsys):
    code, out, _ = run(capsys, "divset", "--n", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("F_1 (size 2, target kappa 2): ")
    assert lines[1].startswith("F_2 (size 4, target kappa 4): ")
    assert "-" in lines[0].split(": ", 1)[1].split()


# -- verify ---------------------------------------------------------------------


def test_verify_writes_artifacts(capsys, tmp_path):
    json_path = tmp_path / "rep.json"
    csv_path = tmp_path / "rep.csv"
    plot_dir = tmp_path / "plots"
    code, out, _ = run(
        capsys,
        "verify",
        "kappa-down-word",
        "--seed",
        "5",
        "--json",
        str(json_path),
        "--csv",
        str(csv_path),
        "--plots",
        str(plot_dir),
    )
    assert code == 0
    assert "== kappa-down-word (seed=5) ==" in out
    assert "verify: PASS (1/1 suites)" in out
    loaded = json.loads(json_path.read_text())
    assert loaded["suite"] == "kappa-down-word"
    assert loaded["pass"] is True
    assert csv_path.read_text().splitlines()[0] == "suite,input,measured,expected,pass"
    assert (plot_dir / "kappa-down-word.png").exists()
    assert f"wrote {plot_dir / 'kappa-down-word.png'}" in out


def test_verify_unknown_suite_is_usage_error(capsys):
    code, _, _ = run(capsys, "verify", "no-such-suite")
    assert code == 2


def test_verify_failure_exits_one(capsys, monkeypatch):
    rep = Report(suite="lk-tight", seed=0)
    rep.add("claim", 1, 2, False)
    monkeypatch.setattr("closurelab.cli.run_suite", lambda name, seed: rep)
    code, out, _ = run(capsys, "verify", "lk-tight")
    assert code == 1
    assert "verify: FAIL (0/1 suites)" in out


def test_falsified_claim_exits_one(capsys, monkeypatch):
    def boom(name, seed):
        raise FactorizationError("psi splits no factor for x=cc")

    monkeypatch.setattr("closurelab.cli.run_suite", boom)
    code, _, err = run(capsys, "verify", "psi-factorization")
    assert code == 1
    assert err.startswith("falsified:")


def test_time_limit_exits_one(capsys, monkeypatch):
    def slow(name, seed):
        raise RuntimeError("time limit exceeded")

    monkeypatch.setattr("closurelab.cli.run_suite", slow)
    code, _, err = run(capsys, "verify", "alpha")
    assert code == 1
    assert "error:" in err


def test_seed_env_default(capsys, monkeypatch):
    monkeypatch.setenv("CLOSURELAB_SEED", "3")
    code, out, _ = run(capsys, "alpha", "--max-n", "2")
    assert code == 0
    assert "(seed=3)" in out


def test_seed_env_must_be_integer(capsys, monkeypatch):
    monkeypatch.setenv("CLOSURELAB_SEED", "pear")
    code, _, err = run(capsys, "alpha", "--max-n", "2")
    assert code == 2
    assert "CLOSURELAB_SEED" in err


# -- dot / misc -----------------------------------------------------------------


def test_dot_writes_file(capsys, tmp_path):
    out_path = tmp_path / "lang.dot"
    code, _, _ = run(capsys, "dot", "--out", str(out_path), "down:ab")
    assert code == 0
    assert "digraph" in out_path.read_text()


def test_word_parse_error(capsys):
    code, _, err = run(capsys, "kappa", "down:a!b")
    assert code == 2
    assert "error:" in err


def test_unknown_command(capsys):
    assert run(capsys, "frobnicate")[0] == 2


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


@pytest.mark.parametrize("argv", [[], ["root", "down:aa"]])
def test_missing_required_arguments(capsys, argv):
    assert main(argv) == 2
    capsys.readouterr()
