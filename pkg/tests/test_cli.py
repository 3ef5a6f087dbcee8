import json

import pytest

from groverqss.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_tables_1_csv(capsys):
    code, out, err = run_cli(capsys, "tables", "--which", "1", "--format", "csv")
    assert code == 0  # table 1 reproduces the publication exactly
    lines = out.splitlines()
    assert lines[1] == "1,110,0.781,110,110,0.945"
    diff = json.loads(err)
    assert diff["mismatching_rows"] == []


def test_tables_2_markdown_reports_typo(capsys):
    code, out, err = run_cli(capsys, "tables", "--which", "2", "--format", "markdown")
    assert code == 1  # one published-typo row in the diff
    assert "| 1 " in out and "0.945" in out
    diff = json.loads(err)
    assert [d["k"] for d in diff["mismatching_rows"]] == [46]


def test_tables_out_file(tmp_path, capsys):
    path = tmp_path / "t1.json"
    code, out, err = run_cli(
        capsys, "tables", "--which", "1", "--format", "json", "--out", str(path)
    )
    assert code == 0
    rows = json.loads(path.read_text())
    assert len(rows) == 64


def test_tables_which_3_usage_error(capsys):
    code, _, _ = run_cli(capsys, "tables", "--which", "3")
    assert code == 2


def test_protocol_honest(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"secret": "110011101", "seed": 5}))
    code, out, _ = run_cli(capsys, "protocol", str(cfg))
    assert code == 0
    doc = json.loads(out)
    assert doc["recovered_secret"] == "110011101"
    assert doc["verdict"] == "accept"


def test_protocol_liar(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(
        json.dumps(
            {
                "secret": "110011101",
                "seed": 5,
                "schedule": [
                    {"kind": "message"},
                    {"kind": "message", "liars": ["P1"]},
                    {"kind": "message"},
                ],
            }
        )
    )
    code, out, _ = run_cli(capsys, "protocol", str(cfg))
    assert code == 1
    doc = json.loads(out)
    assert doc["verdict"] == "reject"
    assert len(doc["rounds"]) == 2


def test_protocol_missing_file(capsys):
    code, _, _ = run_cli(capsys, "protocol", "/nonexistent/cfg.json")
    assert code == 2


def test_attack_intercept_wrong_mark_final(capsys):
    code, out, _ = run_cli(
        capsys,
        "attack", "intercept", "--k-true", "1", "--m", "110",
        "--k-guess", "9", "--M", "111",
    )
    assert code == 0
    doc = json.loads(out)
    final = dict(
        (s["label"], s["amplitudes"]) for s in doc["intermediate_states"]
    )["final"]
    # |000> coefficient of the published final state: (4+3i)/(4*sqrt8)
    assert final[0] == pytest.approx([0.353553390593, 0.265165042945], abs=1e-9)


def test_attack_resend(capsys):
    code, out, _ = run_cli(capsys, "attack", "resend")
    assert code == 0
    doc = json.loads(out)
    derived = {c["name"]: c["derived"] for c in doc["claims"]}
    assert derived["detection_message_round"] == 0.625
    assert derived["detection_cheat_round"] == 0.875
    assert derived["detection_average"] == 0.75


def test_attack_entangle(capsys):
    code, out, _ = run_cli(capsys, "attack", "entangle")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["intermediate_states"]) == 3
    (claim,) = doc["claims"]
    assert claim["derived"] == pytest.approx(13 / 32)
    assert claim["claimed"] == pytest.approx(5 / 32)


def test_attack_lie(capsys):
    code, out, _ = run_cli(capsys, "attack", "lie", "--m", "101", "--flips", "P1", "P2")
    assert code == 0
    doc = json.loads(out)
    assert doc["details"]["reconstructed"] == "011"


def test_attack_bad_params(capsys):
    code, _, _ = run_cli(capsys, "attack", "intercept", "--k-true", "99")
    assert code == 2


def test_sample_basic(capsys):
    code, out, _ = run_cli(
        capsys, "sample", "--k", "1", "--m", "110", "--shots", "8192", "--seed", "7"
    )
    assert code == 0
    doc = json.loads(out)
    p110 = next(o for o in doc["outcomes"] if o["label"] == "110")
    assert abs(p110["empirical_p"] - 121 / 128) < 0.01
    assert p110["exact_p_3dp"] == 0.945


def test_sample_zero_shots(capsys):
    code, _, _ = run_cli(capsys, "sample", "--shots", "0")
    assert code == 2


def test_sample_byte_identical(capsys):
    _, out1, _ = run_cli(capsys, "sample", "--shots", "512", "--seed", "3")
    _, out2, _ = run_cli(capsys, "sample", "--shots", "512", "--seed", "3")
    assert out1 == out2


def test_tables_byte_identical(capsys):
    _, out1, err1 = run_cli(capsys, "tables", "--which", "1", "--format", "markdown")
    _, out2, err2 = run_cli(capsys, "tables", "--which", "1", "--format", "markdown")
    assert out1 == out2 and err1 == err2
