import json
from pathlib import Path

import pytest

from pdvp.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_match_worked_example(capsys):
    rc, out, _ = run(
        capsys, "match", "--pattern", "12|{1},{3,4},{1,2,3}|(1,2,E)|E,P",
        "--perm", "2 3 1 5 4",
    )
    assert rc == 0
    assert out.strip() == "(1,5) -> (2,4)"


def test_match_word_input(capsys):
    rc, out, _ = run(
        capsys, "match", "--pattern", "12|P,{2},P|(1,2,{2})|P,P",
        "--word", "1,3,2,3,1", "--alphabet", "3",
    )
    assert rc == 0
    assert out.strip() == "no occurrences"


def test_match_gp_prefix(capsys):
    rc, out, _ = run(capsys, "match", "--pattern", "gp:2-31", "--perm", "5 1 6 4 2 3")
    assert rc == 0
    assert out.strip() == "(1,3,4) -> (5,6,4)"


def test_malformed_pattern_exits_2(capsys):
    rc, _, err = run(capsys, "match", "--pattern", "12|P|P", "--perm", "1 2")
    assert rc == 2
    assert "parse error" in err


def test_dist_json_golden(capsys):
    rc, out, _ = run(
        capsys, "--format", "json", "dist", "--pattern", "gp:2-31", "--perm-n", "4"
    )
    assert rc == 0
    assert json.loads(out) == json.loads((GOLDEN / "dist_gp231_s4.json").read_text())


def test_gf_dp_json_golden(capsys):
    rc, out, _ = run(
        capsys, "--format", "json", "gf", "--pattern", "12|P,{1},P|(1,2,{2})|P,P",
        "--alphabet", "3", "--dp", "--max-n", "6",
    )
    assert rc == 0
    golden = json.loads((GOLDEN / "gf_dp_adjacent_rise2_t3.json").read_text())
    assert json.loads(out) == golden


def test_gf_solve_text(capsys):
    rc, out, _ = run(
        capsys, "gf", "--pattern", "12|P,{1},P|(1,2,{2})|P,P", "--alphabet", "3",
        "--solve",
    )
    assert rc == 0
    assert "/" in out and "q" in out


def test_avoid_repeated_flags(capsys):
    rc, out, _ = run(
        capsys, "avoid", "--pattern", "gp:231", "--pattern", "gp:132", "--perm-n", "6"
    )
    assert rc == 0
    assert out.strip() == "32"


def test_avoid_pattern_file(tmp_path, capsys):
    listing = tmp_path / "pats.txt"
    listing.write_text("# consecutive pair\ngp:231\ngp:132\n")
    rc, out, _ = run(capsys, "avoid", "--patterns", str(listing), "--perm-n", "5")
    assert rc == 0
    assert out.strip() == "16"


def test_avoid_word_mode(capsys):
    rc, out, _ = run(
        capsys, "avoid",
        "--pattern", "12|P,{1},P|(1,2,{1})|P,P",
        "--pattern", "12|P,{2},P|(1,2,{2})|P,P",
        "--word-n", "5", "--alphabet", "3",
    )
    assert rc == 0
    assert out.strip() == "46"


def test_verify_single_pass_prints_series(capsys):
    rc, out, _ = run(capsys, "verify", "--check", "d3")
    assert rc == 0
    assert out.splitlines()[0] == "PASS d3"
    assert "[1, 3, 8, 20, 49, 119, 288]" in out


def test_verify_failing_check_documents_discrepancy(capsys):
    rc, out, _ = run(capsys, "verify", "--check", "k4n")
    assert rc == 1
    assert "FAIL k4n" in out
    assert "MISMATCH" in out


def test_verify_unknown_check(capsys):
    rc, _, err = run(capsys, "verify", "--check", "nope")
    assert rc == 2
    assert "unknown check" in err


def test_verify_json_schema(capsys):
    rc, out, _ = run(capsys, "--format", "json", "verify", "--check", "fib-bij")
    assert rc == 0
    obj = json.loads(out)
    assert obj["all_ok"] is True
    assert obj["checks"][0]["name"] == "fib-bij"


def test_problem_json(capsys):
    rc, out, _ = run(capsys, "--format", "json", "problem", "--which", "3",
                     "--max-size", "8")
    assert rc == 0
    obj = json.loads(out)
    assert obj["offset"] == 2


def test_budget_env_var(monkeypatch, capsys):
    monkeypatch.setenv("PDVP_BUDGET", "100")
    rc, _, err = run(capsys, "dist", "--pattern", "gp:1-2", "--perm-n", "6")
    assert rc == 2
    assert "limit" in err


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    rc, out, _ = run(
        capsys, "--format", "json", "--out", str(target),
        "dist", "--pattern", "gp:2-31", "--perm-n", "4",
    )
    assert rc == 0
    assert out == ""
    assert json.loads(target.read_text())["n"] == 4


def test_alphabet_required_for_words(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["match", "--pattern", "gp:12", "--word", "1 2"])
    assert exc.value.code == 2


def test_readme_library_example_runs(capsys):
    import re

    md = (Path(__file__).parent.parent / "README.md").read_text()
    block = re.search(r"## Library\n\n```python\n(.*?)```", md, re.S).group(1)
    exec(compile(block, "README-library-example", "exec"), {})
    out = capsys.readouterr().out
    assert "[((1, 5), (2, 4))]" in out
    assert "[1, 3, 9, 24, 64, 168, 441]" in out
