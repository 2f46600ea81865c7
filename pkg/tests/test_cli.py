import json
from pathlib import Path

import pytest

from hyperent.cli import main
from hyperent.stateio import parse_state

HERE = Path(__file__).parent
FIXTURES = HERE / "fixtures"
GOLDEN = HERE / "golden"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("golden", sorted(GOLDEN.glob("*.json")), ids=lambda p: p.stem)
def test_golden(capsys, golden):
    stem, command = golden.stem.rsplit(".", 1)
    code, out, _ = run(capsys, command, "--json", FIXTURES / f"{stem}.state")
    assert code == 0
    assert json.loads(out) == json.loads(golden.read_text())


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("q3_*.state")) + sorted(FIXTURES.glob("t322_*.state")), ids=lambda p: p.stem)
def test_golden_class_matches_fixture_name(path):
    data = json.loads((GOLDEN / f"{path.stem}.classify.json").read_text())
    assert data["class"].lower() == path.stem.split("_", 1)[1]


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", FIXTURES / "q3_ghz.state")
    assert code == 0
    assert out.strip() == "GHZ dim=7 ranks=2,2,2 pattern={1,2,3} Det=1"
    code, out, _ = run(capsys, "classify", FIXTURES / "q4_ghz.state")
    assert out.startswith("DEG4 dim=14") and "note: coarse class" in out


def test_hyperdet_parallel_flag(capsys):
    _, serial, _ = run(capsys, "hyperdet", FIXTURES / "q4_gen_1235.state")
    _, parallel, _ = run(capsys, "hyperdet", "--parallel", FIXTURES / "q4_gen_1235.state")
    assert serial == parallel == "Det=2431260562500 degree=24 nonzero\n"


def test_ranks_separability_measure(capsys):
    assert run(capsys, "ranks", FIXTURES / "q3_b1.state")[1] == "ranks=1,2,2\n"
    assert run(capsys, "separability", FIXTURES / "q3_b1.state")[1] == "pattern={1}{2,3}\n"
    code, out, _ = run(capsys, "measure", "--json", FIXTURES / "q3_ghz.state")
    assert json.loads(out)["squared"] == "16"
    assert run(capsys, "measure", FIXTURES / "bell.state")[1].startswith("C^2=4 ")
    assert run(capsys, "measure", FIXTURES / "t322_ghz.state")[0] == 5


def test_apply(capsys, tmp_path):
    out_file = tmp_path / "out.state"
    code, _, _ = run(capsys, "apply", FIXTURES / "q3_ghz.state", "--op", FIXTURES / "merge_party3.op", "-o", out_file)
    assert code == 0
    assert run(capsys, "classify", out_file)[1].startswith("B3 ")
    code, _, err = run(
        capsys, "apply", FIXTURES / "q3_ghz.state", "--op", FIXTURES / "merge_party3.op", "--check-invertible"
    )
    assert code == 7 and "singular" in err
    code, out, _ = run(capsys, "apply", "--json", FIXTURES / "q3_w.state", "--op", FIXTURES / "invertible.op")
    data = json.loads(out)
    assert data["invertible"] is True
    assert run(capsys, "classify", "--json", FIXTURES / "q3_w.state")[0] == 0
    assert parse_state(data["state"]).dims == (2, 2, 2)


def test_convertible_and_order(capsys):
    assert run(capsys, "convertible", "GHZ", "B2", "--format", 2, 2, 2) == (0, "YES\n", "")
    assert run(capsys, "convertible", "GHZ", "W", "--format", 2, 2, 2)[:2] == (1, "NO\n")
    assert run(capsys, "convertible", "GHZ", "FOO", "--format", 2, 2, 2)[0] == 8
    code, out, _ = run(capsys, "order", "--json", "--format", 2, 2, 2)
    assert len(json.loads(out)["edges"]) == 9
    assert run(capsys, "order", "--dot", "--format", 3, 2, 2)[1].startswith("digraph")


def test_random_is_deterministic(capsys, tmp_path):
    a = run(capsys, "random", "--format", 2, 2, 2, 2, "--seed", 9)[1]
    b = run(capsys, "random", "--format", 2, 2, 2, 2, "--seed", 9)[1]
    assert a == b and a.startswith("format: 2 2 2 2")


def test_check_critical(capsys):
    code, out, _ = run(capsys, "check-critical", FIXTURES / "q3_w.state", "--point", FIXTURES / "w3_critical.point")
    assert code == 0
    assert out.splitlines() == ["critical=yes F=0", "hessian_det=0 chart_hessian_det=2"]
    code, out, _ = run(capsys, "check-critical", FIXTURES / "q3_ghz.state", "--point", FIXTURES / "w3_critical.point")
    assert out.strip() == "critical=no F=1"


def test_invariance_check(capsys):
    code, out, _ = run(capsys, "invariance-check", FIXTURES / "t322_gen322.state", "--seed", 1, "--trials", 5)
    assert code == 0 and out.startswith("PASS class=GEN322")


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "classify", tmp_path / "missing.state")[0] == 3
    bad = tmp_path / "bad.state"
    bad.write_text("format: 2 2\n0 0 : 1/0\n")
    code, _, err = run(capsys, "classify", bad)
    assert code == 4 and "line 2" in err
    big = tmp_path / "big.state"
    big.write_text("format: 4 2 2\n0 0 0 : 1\n")
    assert run(capsys, "hyperdet", big)[0] == 6
    zero = tmp_path / "zero.state"
    zero.write_text("format: 2 2 2\n")
    assert run(capsys, "classify", zero)[0] == 8
    with pytest.raises(SystemExit) as info:
        main(["classify"])
    assert info.value.code == 2
