import json

import pytest

from loopbraid.cli import CliConfig, main, run


def machine(command, n, word="", **kw):
    status, out, err = run(CliConfig(command, n, word, output_format="machine", **kw))
    assert status == 0, err
    return json.loads(out)


def test_lefschetz_schema():
    d = machine("lefschetz", 4, "s1 s3")
    assert d["n"] == 4 and d["word"] == "s1 s3"
    assert d["mu_cycles"] == [[1, 2], [3, 4]]
    assert d["polynomial"] == [{"coeff": 1, "exp": [0, 0]}]
    assert d["classes"][0]["index"] == 1
    assert d["nielsen_lower_bound"] == 1
    assert d["paper_conformance"] == "differs"
    assert d["paper_polynomial"] == "1 + t1 - t2"
    assert d["oracle_agreement"] is True


def test_periodic_section():
    d = machine("periodic", 4, "s1 s3", p=2)
    per = d["periodic"]
    assert per["p"] == 2
    assert set(per) >= {"trace_polynomial", "M", "n_p", "raw_bound", "clamped_bound"}
    assert per["clamped_bound"] == max(0, per["raw_bound"])


def test_burau_machine():
    d = machine("burau", 3, "s1 s2")
    # product of the two single-variable Burau generator matrices, worked by hand
    assert d["burau"] == [["1 - t", "t - t^2", "t^2"], ["1", "0", "0"], ["0", "1", "0"]]


def test_perm_and_matrix_run():
    for cmd in ("perm", "matrix", "lefschetz"):
        status, out, err = run(CliConfig(cmd, 3, "s1 r2'"))
        assert status == 0 and out and not err


def test_text_report_has_caveat():
    _, out, _ = run(CliConfig("lefschetz", 4, "s1 s3"))
    assert "blow-up" in out
    assert "paper conformance: differs" in out


@pytest.mark.parametrize("word,code", [("s1 q2", 2), ("s5", 3), ("s0", 2)])
def test_error_exit_codes(word, code):
    status, out, err = run(CliConfig("lefschetz", 3, word))
    assert status == code
    assert out == "" and err


def test_usage_errors():
    assert run(CliConfig("periodic", 3, "s1"))[0] == 2
    assert run(CliConfig("periodic", 3, "s1", p=0))[0] == 2
    assert run(CliConfig("lefschetz", 3, "s1", p=2))[0] == 2
    assert run(CliConfig("lefschetz", 0, ""))[0] == 2


def test_main_argv(capsys):
    assert main(["lefschetz", "-n", "2", "s1", "--format", "machine"]) == 0
    assert json.loads(capsys.readouterr().out)["n"] == 2
    with pytest.raises(SystemExit):
        main(["periodic", "-n", "2", "s1"])


def test_verify_passes():
    status, out, _ = run(CliConfig("verify", 3, max_len=2, seed=1))
    assert status == 0
    assert "FAIL" not in out


def test_survey_footer():
    status, out, _ = run(CliConfig("survey", 3, max_len=2))
    assert status == 0
    assert out.splitlines()[-1].startswith("# 43 words")


def test_machine_output_deterministic():
    outs = {run(CliConfig("lefschetz", 5, "s1 r3 s4' s2", output_format="machine"))[1] for _ in range(3)}
    assert len(outs) == 1
