from __future__ import annotations

import json
import os
from pathlib import Path

import pytest

from conjzoo.algfile import parse_alg
from conjzoo.cli import main

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"
UPDATE = os.environ.get("CONJZOO_UPDATE_GOLDEN") == "1"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def check_golden(name: str, text: str):
    path = GOLDEN / name
    if UPDATE:
        path.write_text(text)
    assert path.read_text() == text


# each golden case: file name, argv
GOLDEN_CASES = [
    ("adem_sq2sq3.json", ["adem", "Sq2 Sq3", "--json"]),
    ("realizable_op2.json", ["realizable", DATA / "op2.alg", "--json"]),
    ("realizable_y.json", ["realizable", DATA / "y.alg", "--json"]),
    ("realizable_z.json", ["realizable", DATA / "z.alg", "--json"]),
    ("realizable_cp2.json", ["realizable", DATA / "cp2.alg", "--json"]),
    ("check_broken.json", ["check", DATA / "broken.alg", "--json"]),
    ("wu_cp2.json", ["wu", DATA / "cp2.alg", "--json"]),
    ("sw_z.json", ["sw", DATA / "z.alg", "--json"]),
    ("present_d8.json", ["present", DATA / "d8.txt", "--json"]),
    ("realize4_cp2.json", ["realize4", DATA / "cp2_form.json", "--json"]),
    ("catalog_list.json", ["catalog", "list", "--json"]),
    ("double_rp2.alg", ["double", DATA / "rp2.alg", "--name", "CP2"]),
    ("halve_y.alg", ["halve", DATA / "y.alg", "--name", "Z"]),
    ("cd_fixed_3.json", ["cd", "fixed", "3", "--json"]),
    ("jordan_stratum.json", ["jordan", "stratum", DATA / "sphere_point.txt", "--json"]),
    ("rules.json", ["rules", "--json"]),
]


@pytest.mark.parametrize("name, argv", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_golden(capsys, name, argv):
    code, out, _ = run(capsys, *argv)
    check_golden(name, out)
    expected_code = 1 if name == "check_broken.json" else 0
    assert code == expected_code
    if name.endswith(".json"):
        json.loads(out)


def test_adem_text(capsys):
    assert run(capsys, "adem", "Sq1 Sq2") == (0, "Sq3\n", "")


def test_adem_rightmost(capsys):
    assert run(capsys, "adem", "Sq2 Sq2 Sq2", "--strategy", "rightmost")[1] == run(capsys, "adem", "Sq2 Sq2 Sq2")[1]


def test_adem_parse_error(capsys):
    code, _, err = run(capsys, "adem", "Sq1 + Sqq")
    assert code == 1 and ":1:7:" in err


def test_realizable_op2_verdict(capsys):
    code, out, _ = run(capsys, "realizable", DATA / "op2.alg", "--json")
    data = json.loads(out)
    assert code == 0
    assert set(data) == {"algebra", "verdict", "rule", "evidence", "trail"}
    assert data["verdict"] == "NonRealizable" and data["rule"] == "HopfOne"


def test_check_broken(capsys):
    code, out, _ = run(capsys, "check", DATA / "broken.alg")
    assert code == 1 and "[sq-degree]" in out


def test_check_typo(capsys):
    code, _, err = run(capsys, "check", DATA / "typo.alg")
    assert code == 1 and "typo.alg:7:7: unknown label 'w'" in err


def test_check_valid(capsys):
    assert run(capsys, "check", DATA / "y.alg")[0] == 0


def test_polynomial_input(capsys):
    code, out, _ = run(capsys, "check", DATA / "dold11.alg")
    assert code == 0 and "valid" in out


def test_double_round_trip(capsys, tmp_path):
    target = tmp_path / "cp2.alg"
    assert run(capsys, "double", DATA / "rp2.alg", "-o", target)[0] == 0
    text = target.read_text()
    assert parse_alg(text).name == "double(RP2)"
    back = tmp_path / "rp2.alg"
    assert run(capsys, "halve", target, "--name", "RP2", "-o", back)[0] == 0
    assert back.read_text() == (DATA / "rp2.alg").read_text()


def test_halve_refuses_odd(capsys):
    code, _, err = run(capsys, "halve", DATA / "z.alg")
    assert code == 1 and "odd degree" in err


def test_wu_refuses_non_manifold(capsys):
    code, _, err = run(capsys, "wu", DATA / "broken.alg")
    assert code == 1


def test_present_errors(capsys):
    code, _, err = run(capsys, "present", DATA / "torus.txt")
    assert code == 1 and "x y x' y'" in err
    code, out, _ = run(capsys, "present", DATA / "rp2.txt")
    assert code == 0 and "Betti numbers mod 2: (1, 1, 1)" in out


def test_realize4_text(capsys):
    code, out, _ = run(capsys, "realize4", DATA / "s2xs2_form.json")
    assert code == 0 and "attached along W12" in out and "compatible" in out


def test_jordan(capsys):
    code, out, _ = run(capsys, "jordan", "check", DATA / "sphere_point.txt")
    assert code == 0 and "in projective plane: yes" in out and "tau fixed: no" in out
    code, _, err = run(capsys, "jordan", "stratum", DATA / "not_projector.txt")
    assert code == 1 and "projector" in err


@pytest.mark.parametrize(
    "argv, out",
    [
        (["cd", "mul", "e1", "e2"], "-e3\n"),
        (["cd", "mul", "e1", "e2", "--level", "3"], "-e3\n"),
        (["cd", "tau", "1 + e1 + e2 + e3", "--level", "2"], "1 - e1 + e2 - e3\n"),
        (["cd", "conj", "e3"], "-e3\n"),
        (["cd", "inv", "2*e1"], "-1/2*e1\n"),
        (["cd", "norm", "1 + e7"], "2\n"),
        (["cd", "add", "1", "e1"], "1 + e1\n"),
    ],
)
def test_cd(capsys, argv, out):
    assert run(capsys, *argv) == (0, out, "")


def test_cd_table(capsys):
    code, out, _ = run(capsys, "cd", "table", "3")
    assert code == 0 and len(out.splitlines()) == 9


def test_cd_errors(capsys):
    assert run(capsys, "cd", "inv", "0")[0] == 1
    assert run(capsys, "cd", "table", "4")[0] == 2
    assert run(capsys, "cd", "fixed", "0")[0] == 2
    assert run(capsys, "cd", "mul", "e9", "1")[0] == 1


def test_catalog_verify(capsys):
    code, out, _ = run(capsys, "catalog", "verify", "all")
    assert code == 0 and out.rstrip().endswith("passed")
    code, out, _ = run(capsys, "catalog", "verify", "OP2", "-v", "--json")
    data = json.loads(out)
    assert code == 0 and data["pass"]


def test_catalog_unknown(capsys):
    code, _, err = run(capsys, "catalog", "verify", "KP2")
    assert code == 2 and "unknown catalog entry" in err


def test_catalog_show(capsys):
    code, out, _ = run(capsys, "catalog", "show", "OP2")
    assert code == 0 and out == (DATA / "op2.alg").read_text()


def test_props(capsys):
    code, out, _ = run(capsys, "props", "lines", "--samples", "20", "--seed", "7")
    assert code == 0 and out.count("PASS") == 4
    assert run(capsys, "props", "lines", "--samples", "20", "--seed", "7")[1] == out


@pytest.mark.parametrize(
    "argv",
    [[], ["frobnicate"], ["adem"], ["check"], ["adem", "Sq1", "--bogus"], ["props", "--samples", "0"]],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_missing_file(capsys):
    code, _, err = run(capsys, "check", DATA / "nope.alg")
    assert code == 2 and "cannot read" in err


def test_decomposable(capsys):
    assert run(capsys, "decomposable", "3")[1] == "Sq1 Sq2 = Sq3\n"
    assert run(capsys, "decomposable", "8")[1] == "Sq8 is indecomposable\n"
