import json
from pathlib import Path

import pytest

from orientnet import config as config_module
from orientnet.cli import main
from orientnet.report import COLUMNS

PATH3 = "n 3\ne 0 1\ne 1 2\np 0 2\n"
STAR = "n 4\ne 0 1\ne 0 2\ne 0 3\np 1 2\np 2 3\np 3 1\n"


def _write(tmp_path: Path, name: str, text: str) -> str:
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def _rows(out: str):
    lines = [line for line in out.splitlines() if line and not line.startswith("#")]
    assert lines[0].split("\t") == list(COLUMNS)
    return [dict(zip(COLUMNS, line.split("\t"))) for line in lines[1:]]


def test_solve_path_reports_count(tmp_path, capsys):
    assert main(["solve-path", "--input", _write(tmp_path, "p.txt", PATH3)]) == 0
    (row,) = _rows(capsys.readouterr().out)
    assert row["solver"] == "path"
    assert row["count"] == "1"
    assert row["micros"] == "0"


def test_global_flags_before_the_command(tmp_path, capsys):
    assert main(["--format", "json", "solve-tree", "-i", _write(tmp_path, "s.txt", STAR)]) == 0
    (report,) = json.loads(capsys.readouterr().out)
    assert report["count"] == 1
    assert report["leaves"] == 3


def test_output_file(tmp_path):
    target = tmp_path / "out.tsv"
    assert main(["solve-tree", "-i", _write(tmp_path, "s.txt", STAR), "-o", str(target)]) == 0
    assert target.read_text().startswith("digest\t")


def test_precondition_failure_exits_2(tmp_path):
    assert main(["solve-path", "--input", _write(tmp_path, "s.txt", STAR)]) == 2


def test_validation_failure_exits_1(tmp_path):
    assert main(["solve-tree", "--input", _write(tmp_path, "bad.txt", "n 2\ne 0 5\n")]) == 1
    assert main(["solve-tree", "--input", str(tmp_path / "missing.txt")]) == 1


def test_usage_error_exits_64():
    with pytest.raises(SystemExit) as excinfo:
        main(["frobnicate"])
    assert excinfo.value.code == 64


def test_backbone_flags(tmp_path, capsys):
    tree = _write(tmp_path, "s.txt", STAR)
    assert main(["approx-backbone", "--derandomize", "--seed", "3", "-i", tree]) == 1
    assert main(["approx-backbone", "--derandomize", "-i", tree]) == 0
    (row,) = _rows(capsys.readouterr().out)
    assert row["solver"] == "backbone"
    assert row["backbones"] != "-"


def test_decide_and_kernelize(tmp_path, capsys):
    path = _write(tmp_path, "p.txt", "n 3\ne 0 1\ne 1 2\np 0 2\np 2 0\n")
    assert main(["decide", "--beta", "2", "-i", path]) == 0
    assert capsys.readouterr().out.splitlines()[1].split("\t")[3] == "false"
    assert main(["decide", "--beta", "1", "-i", path, "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["feasible"] is True
    assert main(["kernelize", "--beta", "2", "-i", path]) == 0
    assert "# conflict 0 1" in capsys.readouterr().out
    assert main(["kernelize", "--beta", "0", "-i", path]) == 1
    mixed = _write(tmp_path, "m.txt", "n 2\na 0 1\np 0 1\n")
    assert main(["decide", "--beta", "1", "-i", mixed]) == 2


def test_reduce_clique_then_fixed_oracle(tmp_path, capsys):
    reduced = tmp_path / "fig.txt"
    assert main(["reduce-clique", "--figure", "--verify", "-o", str(reduced)]) == 0
    assert "fp " in reduced.read_text()
    assert main(["oracle", "-i", str(reduced)]) == 0
    (row,) = _rows(capsys.readouterr().out)
    assert row["solver"] == "oracle-fixed"
    assert row["count"] == "3"


def test_gen_then_verify(tmp_path, capsys):
    inst = tmp_path / "tree.txt"
    assert main(["gen", "--shape", "tree", "--n", "7", "--pairs", "5", "--seed", "2", "-o", str(inst)]) == 0
    assert main(["verify", "-i", str(inst)]) == 0
    rows = _rows(capsys.readouterr().out)
    assert {r["solver"] for r in rows} >= {"tree", "tree-mixed", "mixed", "backbone"}
    assert all(r["optimum"] != "-" for r in rows)


def test_bench_is_deterministic(capsys):
    argv = ["bench", "--shapes", "path,tree", "--sizes", "5..6", "--seeds", "3", "--pairs", "3"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv + ["--threads", "2"]) == 0
    assert capsys.readouterr().out == first
    assert len(_rows(first)) > 12


def test_bench_rejects_unknown_shapes():
    with pytest.raises(SystemExit) as excinfo:
        main(["bench", "--shapes", "blob"])
    assert excinfo.value.code == 64


def test_config_show_reads_environment(monkeypatch, capsys):
    monkeypatch.setenv("ORIENTNET_THREADS", "3")
    monkeypatch.setattr(config_module, "_config", None)
    assert main(["config", "show"]) == 0
    assert "runtime.threads = 3" in capsys.readouterr().out
