import io
import json
import subprocess
import sys

import pytest

from graphcohom.cli import main
from graphcohom.combination import format_combination, parse_combination
from graphcohom.generators import line_generator, wheel_generator


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_cohomology_json(capsys):
    code, out, _ = run(["cohomology", "--n", "3", "--json"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["h_dim"] == 1 == data["expected"]
    code, out, _ = run(["cohomology", "--n", "2", "--json"], capsys)
    assert json.loads(out)["h_dim"] == 0


def test_cohomology_is_deterministic(capsys):
    first = run(["cohomology", "--n", "4", "--json"], capsys)[1]
    assert run(["cohomology", "--n", "4", "--json"], capsys)[1] == first


def test_cohomology_text_and_matrix(capsys, tmp_path):
    path = tmp_path / "m.txt"
    code, out, _ = run(["cohomology", "--n", "1", "--matrix", str(path)], capsys)
    assert code == 0 and "h_dim" in out
    lines = path.read_text().splitlines()
    assert lines and all(len(line.split()) == 3 for line in lines)


def test_cohomology_exclude_one(capsys):
    code, out, _ = run(["cohomology", "--n", "1", "--exclude-one", "--json"], capsys)
    assert json.loads(out)["expected"] == 0
    assert code == 1  # the loop class survives, so the count without R_1 is off by one


def test_resource_bound(capsys, monkeypatch):
    monkeypatch.setenv("GRAPHCOHOM_MAX_N", "2")
    code, _, err = run(["cohomology", "--n", "5"], capsys)
    assert code == 2 and "bound" in err


def test_gen_and_d_pipeline(capsys, monkeypatch):
    code, out, _ = run(["gen", "--wheel", "3"], capsys)
    assert parse_combination(out) == wheel_generator(3)
    code, out, _ = run(["d"], capsys, stdin=out, monkeypatch=monkeypatch)
    assert code == 0 and parse_combination(out).is_zero()
    gen = format_combination(line_generator(0))
    code, out, _ = run(["d", "--alt"], capsys, stdin=gen, monkeypatch=monkeypatch)
    assert parse_combination(out) == line_generator(1)


def test_gen_spec(capsys):
    code, out, _ = run(["gen", "--spec", '{"even_lines": {"0": 1}, "odd_lines": [1]}'], capsys)
    c = parse_combination(out)
    assert code == 0 and c.n == 3 and c
    code, _, err = run(["gen", "--spec", "not json"], capsys)
    assert code == 2


def test_d_rejects_nonsymmetric(capsys, tmp_path):
    path = tmp_path / "nonsym.txt"
    path.write_text("1 * graph n=2; edges = 2->1\n")
    code, _, err = run(["d", "--in", str(path)], capsys)
    assert code == 2 and "symmetric" in err
    code, out, _ = run(["d", "--in", str(path), "--allow-nonsymmetric"], capsys)
    assert code == 0


def test_d_file_output(capsys, tmp_path):
    src, dst = tmp_path / "in.txt", tmp_path / "out.txt"
    src.write_text(format_combination(line_generator(2)))
    assert run(["d", "--in", str(src), "--out", str(dst)], capsys)[0] == 0
    assert parse_combination(dst.read_text()) == parse_combination(format_combination(line_generator(3)))


def test_homotopy_and_order(capsys, monkeypatch):
    code, out, _ = run(["order", "--graph", "graph n=3; edges = 2->1, 3->2"], capsys)
    assert out.strip() == "[1+,1,0-]"
    code, out, _ = run(["homotopy"], capsys, stdin="1 * graph n=3; edges = 2->1, 3->2\n", monkeypatch=monkeypatch)
    assert out.strip() == "1 * graph n=2; edges = 2->1"
    code, _, _ = run(["order", "--graph", "nonsense"], capsys)
    assert code == 2


def test_oracle_command(capsys, tmp_path):
    path = tmp_path / "l0.txt"
    path.write_text(format_combination(line_generator(0)))
    code, out, _ = run(["oracle", "--delta", str(path), "--trials", "4", "--seed", "7", "--full-component"], capsys)
    assert code == 0
    assert json.loads(out) == {"agree_scalar": True, "agree_full": True, "trials": 4, "seed": 7}


def test_verify_suites(capsys):
    code, out, _ = run(["verify", "--suite", "signs", "--json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["suite"] == "signs"
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_missing_input_file(capsys):
    code, _, err = run(["d", "--in", "/nonexistent/file"], capsys)
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "graphcohom", "cohomology", "--n", "0", "--json"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["h_dim"] == 1
