import csv
import io
import json
import subprocess
import sys

import pytest

from prymweil.cli import main
from prymweil.symprod import poincare_sym


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_compute_z3():
    code, text = run("compute", "--group", "3", "--genus", "2")
    assert code == 0
    rep = json.loads(text)
    assert rep["genus_ledger"]["prym_dim"] == 2
    assert rep["betti"]["W"] == [1, 4, 9, 4, 1]
    assert rep["cycles"]["u_dimension"] == 2
    assert rep["cycles"]["u_basis"][0]["vectors"] == [["2", "-1", "-1"], ["-1", "2", "-1"]]


def test_compute_klein_four():
    code, text = run("compute", "--group", "2,2", "--genus", "3")
    rep = json.loads(text)
    assert rep["algebra_split"]["nontrivial_part"] == "Q^3"
    assert rep["genus_ledger"]["prym_dim"] == 6
    assert rep["betti"]["W"][4] == 31 + 3
    assert rep["betti"]["sym_h"][4] == 31


def test_compute_normalizes_factors():
    rep = json.loads(run("compute", "--group", "2,3", "--genus", "2")[1])
    assert rep["group"]["invariant_factors"] == [6]
    assert rep["input"]["group_factors"] == [2, 3]


def no_floats(x):
    if isinstance(x, float):
        return False
    if isinstance(x, dict):
        return all(no_floats(v) for v in x.values())
    if isinstance(x, list):
        return all(no_floats(v) for v in x)
    return True


@pytest.mark.parametrize("group", ["3", "2,2", "4", "6", "2,4", "5"])
def test_json_round_trip_and_exactness(group):
    from prymweil.report import build_report, to_json

    rep = build_report([int(x) for x in group.split(",")], 3)
    text = to_json(rep)
    assert json.loads(text) == rep
    assert to_json(json.loads(text)) == text
    assert no_floats(rep)


def test_text_format():
    code, text = run("compute", "--group", "3", "--genus", "2", "--format", "text")
    assert code == 0 and "prym_dim = 2" in text and "1,4,9,4,1" in text


def test_bad_genus(capsys):
    code, _ = run("compute", "--group", "3", "--genus", "1")
    assert code == 2
    assert "g(C') >= 2" in capsys.readouterr().err


def test_bad_factor(capsys):
    assert run("compute", "--group", "1,3", "--genus", "2")[0] == 2
    assert run("compute", "--group", "x", "--genus", "2")[0] == 2


def test_verify_smoke():
    code, text = run("verify", "--max-order", "2", "--max-genus", "2")
    assert code == 0 and text.startswith("PASS")


def test_verify_mutation_fails_naming_property():
    code, text = run("verify", "--max-order", "3", "--max-genus", "2", "--mutate")
    assert code != 0
    assert "FAIL [G=Z/3, g'=2] is_hodge_space" in text


def test_table_betti():
    code, text = run("table", "--kind", "betti", "--genus", "2", "--max-degree", "4")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0][:3] == ["g", "d", "b0"]
    for row in rows[1:]:
        d = int(row[1])
        P = poincare_sym(d, 2)
        assert [int(x) for x in row[2:]] == [P.betti(n) for n in range(len(row) - 2)]
    assert len(rows) == 6


def test_table_dims():
    code, text = run("table", "--kind", "dims", "--max-order", "8", "--max-genus", "3")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["group", "order", "base_genus", "total_genus", "prym_dim", "dim_U"]
    for r in rows[1:]:
        n, g, gC, p, u = map(int, r[1:])
        assert gC == n * (g - 1) + 1 and p == (n - 1) * (g - 1) and u == n - 1


def test_table_idempotents():
    code, text = run("table", "--kind", "idempotents", "--group", "4")
    rows = list(csv.reader(io.StringIO(text)))
    assert len(rows) == 4
    assert rows[3][3:] == ["1/2", "0", "-1/2", "0"]


def test_table_unknown_kind():
    assert run("table", "--kind", "nope")[0] == 2


def test_module_entry_point_deterministic():
    cmd = [sys.executable, "-m", "prymweil", "compute", "--group", "2,2", "--genus", "3"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and len(a) > 0
