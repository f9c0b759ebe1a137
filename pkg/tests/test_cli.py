from __future__ import annotations

import subprocess
import sys

import pytest

from fusionkit.cli import main
from fusionkit.formats import load
from fusionkit.fusion import FusionAlgebra, Hypergroup


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_pair_check_admissible(capsys):
    code, out, _ = run(capsys, "pair", "check", "S3", "--subgroup", "(12)")
    assert code == 0
    assert out.startswith("admissible: yes; certificates: ")
    assert "Lemma 3.11" in out


def test_pair_check_refusal(capsys):
    code, out, _ = run(capsys, "pair", "check", "S3", "--subgroup", "(123)")
    assert code == 1
    assert "admissible: no" in out and "witness:" in out


def test_fuse_then_equations(capsys, tmp_path):
    path = tmp_path / "z2.fkalg.json"
    assert run(capsys, "pair", "fuse", "Z2", "--subgroup", "e", "-o", str(path))[0] == 0
    assert isinstance(load(path), FusionAlgebra)
    code, out, _ = run(capsys, "algebra", "equations", str(path))
    assert code == 0 and "ρ0 ρ0 = γ0 + γ1" in out


def test_normalize_and_join(capsys, tmp_path):
    alg = tmp_path / "s3.fkalg.json"
    run(capsys, "pair", "fuse", "S3", "--subgroup", "G", "-o", str(alg))
    hyp = tmp_path / "s3.hyp.json"
    assert run(capsys, "algebra", "normalize", str(alg), "-o", str(hyp))[0] == 0
    assert isinstance(load(hyp), Hypergroup)
    joined = tmp_path / "joined.fkalg.json"
    assert run(capsys, "algebra", "join", str(alg), "-o", str(joined))[0] == 0
    assert len(load(joined)) == 7
    # non-integral dimensions are a domain refusal
    z2 = tmp_path / "z2.fkalg.json"
    run(capsys, "pair", "fuse", "Z2", "--subgroup", "e", "-o", str(z2))
    code, _, err = run(capsys, "algebra", "join", str(z2))
    assert code == 1 and "NonIntegralDimensions" in err


def test_group_and_table(capsys, tmp_path):
    path = tmp_path / "a4.fkgroup.json"
    assert run(capsys, "group", "A4", "-o", str(path))[0] == 0
    code, out, _ = run(capsys, "table", str(path))
    assert code == 0 and out.splitlines()[1].split() == ["size", "1", "3", "4", "4"]
    code, out, _ = run(capsys, "group", "Z3", "--format", "cayley")
    assert out == "3\n0 1 2\n1 2 0\n2 0 1\n"


def test_diagram_output_is_byte_stable(capsys, tmp_path):
    a, b = tmp_path / "a.dot", tmp_path / "b.dot"
    run(capsys, "diagram", "S4", "--subgroup", "(12)", "-o", str(a))
    run(capsys, "diagram", "S4", "--subgroup", "(12)", "-o", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_fixtures_run(capsys):
    code, out, _ = run(capsys, "fixtures", "run")
    assert code == 0
    assert "10/10 fixtures pass" in out
    assert run(capsys, "fixtures", "run", "--strict")[0] == 1
    assert run(capsys, "fixtures", "run", "--only", "Z2>e", "--strict")[0] == 0


def test_usage_and_parse_errors(capsys, tmp_path):
    assert run(capsys, "group", "Q8")[0] == 2
    assert run(capsys, "pair", "check", "S3", "--subgroup", "(19)")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema": "other"}')
    assert run(capsys, "algebra", "equations", str(bad))[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["pair"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["--eps-eq", "-1", "group", "Z2"])
    assert exc.value.code == 2


def test_tolerance_flags_are_scoped(capsys):
    from fusionkit import tolerances
    assert run(capsys, "--eps-eq", "1e-10", "--eps-int", "1e-7", "pair", "check", "Z4", "--subgroup", "2")[0] == 0
    assert tolerances.EPS_EQ == 1e-8 and tolerances.EPS_INT == 1e-6


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fusionkit", "pair", "check", "S3", "--subgroup", "(123)"],
                          capture_output=True, text=True)
    assert proc.returncode == 1
