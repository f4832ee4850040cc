import json

import pytest

from meyer import cli, suites
from meyer.suites import SuiteResult


@pytest.fixture
def doc(tmp_path):
    def write(obj, name="m.json"):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(p)
    return write


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_phi_v_word(capsys):
    assert run(capsys, "phi-v", "--word", "t1^3", "--g", "2") == (0, "1\n", "")


def test_tau_files(capsys, doc):
    t = doc({"g": 1, "matrix": [[1, 1], [0, 1]]})
    assert run(capsys, "tau", "--g", "1", "--a", t, "--b", t)[:2] == (0, "1\n")


def test_block_document(capsys, doc):
    m = doc({"g": 2, "P": [[-1, 0], [1, 1]], "Q": [[2, -1], [-1, 1]], "S": [[-1, 1], [0, 1]]})
    assert run(capsys, "phi-v", "--matrix", m)[:2] == (0, "1\n")
    code, out, _ = run(capsys, "torus", "--matrix", m, "--format", "json")
    assert code == 0 and json.loads(out)["intersection_gram"] == [["2"]]


def test_phi_h_mu_diff(capsys):
    assert run(capsys, "phi-h", "--word", "t1^-1", "--g", "1")[:2] == (0, "-2/3\n")
    assert run(capsys, "mu", "--word", "s1 t1", "--g", "4")[:2] == (0, "-1\n")
    assert run(capsys, "diff", "--word", "t1", "--g", "4")[:2] == (0, "-4/9\n")


def test_text_and_json_agree(capsys):
    _, text, _ = run(capsys, "diff", "--word", "t1 s1^2", "--g", "3")
    _, raw, _ = run(capsys, "--format", "json", "diff", "--word", "t1 s1^2", "--g", "3")
    assert json.loads(raw)["difference"] == text.strip() == "1/7"


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--word", "t1^2", "--g", "1")
    assert code == 0 and out == "[1 2]\n[0 1]\n"
    _, raw, _ = run(capsys, "eval", "--word", "t1^2", "--g", "1", "--format", "json")
    assert json.loads(raw)["matrix"] == [[1, 2], [0, 1]]


def test_torus_text(capsys):
    code, out, _ = run(capsys, "torus", "--word", "s1", "--g", "2", "--h1-torsion")
    assert code == 0
    assert "signature: 1" in out and "h2_rank: 1" in out and "h1_torsion:" in out


def test_verify_main_theorem(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "main-theorem", "--g", "3", "--cases", "10")
    assert code == 0 and out.startswith("main-theorem g=3: PASS")


def test_verify_json_is_deterministic(capsys, monkeypatch):
    argv = ("verify", "--suite", "cocycle", "--g", "2", "--cases", "3", "--format", "json")
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first
    assert json.loads(first)["pass"] is True


def test_seed_env_override(capsys, monkeypatch):
    monkeypatch.setenv("MEYER_SEED", "7")
    out = run(capsys, "verify", "--suite", "bound", "--g", "1", "--cases", "2", "--format", "json")[1]
    assert json.loads(out)["seed"] == 7
    out = run(capsys, "--seed", "3", "verify", "--suite", "bound", "--g", "1", "--cases", "2",
              "--format", "json")[1]
    assert json.loads(out)["seed"] == 3
    monkeypatch.setenv("MEYER_SEED", "abc")
    assert run(capsys, "verify", "--suite", "bound", "--g", "1")[0] == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    def broken(g, seed=0, cases=0):
        res = SuiteResult("lemma44", g)
        res.add("deliberately false", False, "x")
        return res
    monkeypatch.setitem(suites.SUITES, "lemma44", broken)
    code, out, _ = run(capsys, "verify", "--suite", "lemma44", "--g", "2")
    assert code == 1 and "FAIL deliberately false" in out


@pytest.mark.parametrize("argv", [
    ("phi-h", "--word", "t1^^2", "--g", "2"),
    ("phi-v", "--word", "t2", "--g", "2"),
    ("eval", "--word", "s1", "--g", "1"),
    ("mu", "--word", "t3", "--g", "2"),
    ("verify", "--suite", "lemma41", "--g", "1"),
    ("verify", "--suite", "nope", "--g", "2"),
    ("phi-v", "--g", "2"),
    ("phi-h", "--word", "t1"),
])
def test_input_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.strip()


@pytest.mark.parametrize("content, fragment", [
    ("{not json", "not valid JSON"),
    ({"g": 1, "matrix": [[1, 1]]}, "2x2"),
    ({"g": 1, "matrix": [[1, 1.5], [0, 1]]}, "integers"),
    ({"g": 1, "matrix": [[2, 0], [0, 2]]}, "NotSymplectic"),
    ({"g": 1, "P": [[2]], "Q": [[0]], "S": [[1]]}, "NotUrSp"),
    ({"g": 0, "matrix": []}, "positive"),
    ({"g": 1}, "expected"),
])
def test_bad_documents(capsys, doc, content, fragment):
    path = doc(content)
    code, _, err = run(capsys, "tau", "--a", path, "--b", path)
    assert code == 2 and fragment in err
    assert len(err.strip().splitlines()) == 1


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "phi-v", "--matrix", str(tmp_path / "absent.json"))
    assert code == 2 and "cannot read" in err


def test_genus_mismatch_between_flag_and_document(capsys, doc):
    t = doc({"g": 1, "matrix": [[1, 1], [0, 1]]})
    assert run(capsys, "tau", "--g", "2", "--a", t, "--b", t)[0] == 2
