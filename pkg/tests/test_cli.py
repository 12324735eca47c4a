import json
from pathlib import Path

import pytest

from opposition.cli import run

ROOT = Path(__file__).resolve().parents[1]
T3 = str(ROOT / "structures" / "t3.json")
ANTICHAIN = str(ROOT / "structures" / "antichain.json")


def test_check_t3(capsys):
    assert run(["check", T3]) == 0
    assert "Z = {h, 1}" in capsys.readouterr().out


def test_check_rejects_antichain(capsys):
    assert run(["check", ANTICHAIN]) == 1
    assert "zeros_nonempty  FAIL" in capsys.readouterr().out


def test_check_bad_input(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text('{"elements": ["a"], "neg": {"a": "zz"}}')
    assert run(["check", str(f)]) == 2
    assert run(["check", str(tmp_path / "missing.json")]) == 2
    f.write_text("{not json")
    assert run(["check", str(f)]) == 2


def test_usage_errors():
    assert run([]) == 2
    assert run(["sweep", "--max-size", "9"]) == 2
    assert run(["relations", "--structure", T3, "--s1", "Z", "--s2", "A"]) == 2


def test_sweep_square(capsys):
    assert run(["sweep", "--max-size", "3", "--shape", "square", "--forward"]) == 0
    assert "total violations=0" in capsys.readouterr().out


def test_sweep_json(tmp_path):
    out = tmp_path / "s.json"
    assert run(["sweep", "--max-size", "3", "--shape", "cube", "--json", str(out)]) == 1
    summary = json.loads(out.read_text())
    assert summary["ok"] is False
    assert {c["claim"] for c in summary["claims"] if c["violating_points"]} == {"contrary(a,e)", "subcontrary(i,o)"}


def test_diagram_cube_t3(capsys):
    assert run(["diagram", "--shape", "cube", "--structure", T3, "--forward"]) == 1
    out = capsys.readouterr().out
    bad = [ln for ln in out.splitlines() if "verdict=violated" in ln]
    assert len(bad) == 2 and all("witness=P=1,Q=0" in ln for ln in bad)


def test_diagram_point_and_dot(tmp_path, capsys):
    dot = tmp_path / "sq.dot"
    assert run(["diagram", "--shape", "square", "--structure", T3, "--p", "1", "--q", "h", "--dot", str(dot)]) == 0
    out = capsys.readouterr().out
    assert "VALUE A=False" in out and "VALUE I=True" in out
    first = dot.read_text()
    assert run(["diagram", "--shape", "square", "--structure", T3, "--p", "1", "--q", "h", "--dot", str(dot)]) == 0
    assert dot.read_text() == first and first.startswith("digraph square")


def test_diagram_on_non_member_is_input_error(capsys):
    assert run(["diagram", "--shape", "square", "--structure", ANTICHAIN]) == 2


def test_relations(capsys):
    assert run(["relations", "--structure", T3, "--s1", "A", "--s2", "I"]) == 0
    assert "relations=implies" in capsys.readouterr().out


def test_counterexample(capsys):
    assert run(["counterexample", "--structure", T3, "--claim", "A->I", "--no-forward"]) == 1
    assert "P=0 Q=0" in capsys.readouterr().out
    assert run(["counterexample", "--structure", T3, "--claim", "A->I"]) == 0
    assert run(["counterexample", "--structure", T3, "--claim", "A=>I"]) == 2


def test_enumerate(capsys):
    assert run(["enumerate", "--max-size", "4", "--iso"]) == 0
    assert "COUNT size=4 structures=11" in capsys.readouterr().out


@pytest.mark.parametrize("name", ["three-valued", "multiset", "sets", "prop-square"])
def test_instance_demos(name, capsys):
    code = run(["instance-demo", name])
    # the T3 cube carries the two rear-face violations
    assert code == (1 if name == "three-valued" else 0)


def test_instance_demo_sampled(capsys):
    assert run(["instance-demo", "matrix", "--samples", "100"]) == 0
    assert run(["instance-demo", "negation", "--samples", "1000"]) == 0
    assert "A=[[1]]" in capsys.readouterr().out
