import subprocess
import sys

import pytest

from hypercordial.cli import run


@pytest.fixture
def disjoint(tmp_path):
    p = tmp_path / "two_disjoint_edges.ht"
    p.write_text("4 2\n1 2\n3 4\n")
    return p


def test_gen_label_verify(tmp_path, capsys):
    ht, lab = tmp_path / "t.ht", tmp_path / "t.lab"
    assert run(["gen", "--seed", "7", "--edges", "5", "--size-min", "2", "--size-max", "3", "--out", str(ht)]) == 0
    assert run(["label", "--k", "3", "--in", str(ht), "--out", str(lab)]) == 0
    assert run(["verify", "--k", "3", "--in", str(ht), "--labels", str(lab)]) == 0
    assert "3-cordial: yes" in capsys.readouterr().out


def test_oracle_unsat(disjoint, capsys):
    assert run(["oracle", "--k", "2", "--in", str(disjoint)]) == 1
    assert "exhausted-unsat" in capsys.readouterr().out


def test_oracle_count(tmp_path, capsys):
    p = tmp_path / "p.ht"
    p.write_text("3 2\n1 2\n2 3\n")
    assert run(["oracle", "--k", "2", "--in", str(p), "--count"]) == 0
    out = capsys.readouterr().out
    assert "witness-found" in out and "count 4" in out


def test_oracle_indeterminate(disjoint, capsys):
    assert run(["oracle", "--k", "2", "--in", str(disjoint), "--budget", "1"]) == 0
    assert "indeterminate" in capsys.readouterr().out


def test_verify_all_zero(tmp_path, capsys):
    ht, lab = tmp_path / "p.ht", tmp_path / "z.lab"
    ht.write_text("3 2\n1 2\n2 3\n")
    lab.write_text("2\n1 0\n2 0\n3 0\n")
    assert run(["verify", "--k", "2", "--in", str(ht), "--labels", str(lab)]) == 1
    assert "vertex counts 0:3 1:0" in capsys.readouterr().out


def test_bad_input_is_usage_error(tmp_path, capsys):
    ht = tmp_path / "bad.ht"
    ht.write_text("2 1\n1 1\n")
    assert run(["label", "--k", "2", "--in", str(ht)]) == 2
    assert "line 2, column 3" in capsys.readouterr().err


def test_forest_is_usage_error(disjoint):
    assert run(["label", "--k", "2", "--in", str(disjoint)]) == 2


def test_missing_file(tmp_path):
    assert run(["oracle", "--k", "2", "--in", str(tmp_path / "nope.ht")]) == 2


def test_usage_errors():
    assert run([]) == 2
    assert run(["label", "--k", "4", "--in", "x"]) == 2
    assert run(["gen", "--seed", "1", "--edges", "0"]) == 2


def test_label_trace(tmp_path, capsys):
    ht = tmp_path / "s.ht"
    ht.write_text("5 4\n1 2\n1 3\n1 4\n1 5\n")
    assert run(["label", "--k", "2", "--in", str(ht), "--trace"]) == 0
    out = capsys.readouterr()
    assert "graph incidence" in out.out and "step 0" in out.err


def test_stress_reports_all_verified(capsys):
    assert run(["stress", "--k", "3", "--trials", "20", "--seed", "4", "--max-edges", "30"]) == 0
    assert "verified 20/20 trials for k=3" in capsys.readouterr().out


def test_stress_is_byte_stable(capsys):
    args = ["stress", "--k", "2", "--trials", "10", "--seed", "9", "--max-edges", "20"]
    run(args)
    first = capsys.readouterr().out
    run(args)
    assert capsys.readouterr().out == first


def test_probe(capsys):
    assert run(["probe", "--k", "4", "--trials", "20", "--seed", "1"]) == 0
    assert "exhausted-unsat=0" in capsys.readouterr().out


def test_module_entry_point(disjoint):
    proc = subprocess.run(
        [sys.executable, "-m", "hypercordial", "oracle", "--k", "2", "--in", str(disjoint)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1 and proc.stdout.startswith("exhausted-unsat")


def test_invariant_violation_exit(tmp_path, monkeypatch, capsys):
    from hypercordial import cli
    from hypercordial.errors import InvariantViolation
    from hypercordial.labeler import LabelerTrace

    def broken(T, k):
        raise InvariantViolation("forced", LabelerTrace(k=k, edge_count=T.m, case=0))

    monkeypatch.setattr(cli, "label", broken)
    ht = tmp_path / "p.ht"
    ht.write_text("3 2\n1 2\n2 3\n")
    assert run(["label", "--k", "2", "--in", str(ht)]) == 3
    err = capsys.readouterr().err
    assert "forced" in err and "k=2 m=2" in err


def test_parallel_stress_matches_serial(capsys):
    base = ["stress", "--k", "3", "--trials", "12", "--seed", "2", "--max-edges", "25"]
    run(base)
    serial = capsys.readouterr().out
    run(base + ["--jobs", "2"])
    assert capsys.readouterr().out == serial
