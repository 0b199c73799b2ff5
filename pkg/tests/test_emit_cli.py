import csv
import io
from fractions import Fraction
import json
import subprocess
import sys

import pytest

from mckay import cli, emit
from mckay.operators import op_E
from mckay.product import odot_table
from mckay.reference_tables import parse_latex_symfunc, reference_table, table_mismatches
from mckay.symfunc import SymFunc, p, s


def run(*argv):
    buf = io.StringIO()
    code = cli.main(list(argv), out=buf)
    return code, buf.getvalue()


def test_op_gamma_json():
    code, out = run("op", "--name", "Gamma", "--n", "2", "--basis", "p", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["order"] == [[1, 1], [2]]
    assert data["matrix"] == [["1", "0"], ["1/2", "-1/2"]]


def test_op_latex_and_csv():
    _, out = run("op", "--name", "E", "--n", "2")
    assert out == "\\begin{pmatrix}\n2 & 0 \\\\\n2 & 2 \\\\\n\\end{pmatrix}\n"
    _, out = run("op", "--name", "D", "--n", "2", "--format", "csv")
    assert list(csv.reader(io.StringIO(out))) == [["", "p_{1,1}", "p_2"], ["p_{1,1}", "2", "0"], ["p_2", "-1", "2"]]


def test_table_latex_n3_schur_matches_reference():
    _, out = run("table", "--n", "3", "--basis", "s")
    rows = [line for line in out.splitlines() if line.startswith("s_")]
    cells = [r.rstrip(" \\").split(" & ")[1:] for r in rows]
    ref = reference_table(3, "s")
    order = emit.display_order(3, "s")
    for i, lam in enumerate(order):
        for j, mu in enumerate(order):
            assert parse_latex_symfunc(cells[i][j], 3, "s") == ref[(lam, mu)]


def test_table_json_round_trip():
    _, out = run("table", "--n", "2", "--format", "json")
    data = json.loads(out)
    assert data["A"] == 4 and data["basis"] == "p"
    table = odot_table(2, "p")
    for cell in data["cells"]:
        assert SymFunc.from_json(cell["value"]) == table[cell["row"], cell["col"]]


def test_table_csv():
    _, out = run("table", "--n", "2", "--format", "csv")
    assert list(csv.reader(io.StringIO(out))) == [
        ["row", "col", "value"],
        ["1,1", "1,1", "2p_{1,1}-2p_2"],
        ["1,1", "2", "2p_2"],
        ["2", "1,1", "2p_2"],
        ["2", "2", "0"],
    ]


def test_macdonald_and_adams_text():
    _, out = run("macdonald", "--n", "2", "--A", "3")
    assert out.splitlines()[1:] == ["H~_2 = (1) s_2 + (t^3) s_1,1", "H~_1,1 = (1) s_2 + (t) s_1,1"]
    code, out = run("adams", "--n", "2", "--j-max", "2", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and all(r["equal"] for r in rows)
    _, out = run("adams", "--n", "1", "--j-max", "1")
    assert out.splitlines()[1] == "n=1 j=1: EQUAL"


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "--n", "0"],
        ["table", "--n", "9"],
        ["op", "--name", "E", "--n", "3", "--A", "3"],
        ["op", "--name", "X", "--n", "2"],
        ["table", "--n", "2", "--basis", "m"],
    ],
)
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv, out=io.StringIO())
    assert exc.value.code == 2


def test_max_n_env(monkeypatch):
    monkeypatch.setenv("MCKAY_MAX_N", "2")
    with pytest.raises(SystemExit):
        cli.main(["table", "--n", "3"], out=io.StringIO())
    monkeypatch.setenv("MCKAY_MAX_N", "lots")
    with pytest.raises(SystemExit):
        cli.main(["table", "--n", "2"], out=io.StringIO())
    monkeypatch.setenv("MCKAY_MAX_N", "8")
    assert cli.check_config(cli.Config(n=8)).n == 8


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "mckay", "op", "--name", "E", "--n", "1", "--format", "json"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["matrix"] == [["1"]]


def test_latex_rendering():
    assert emit.latex_symfunc(p(1, 1) * 2 - p(2) * 2) == "2p_{1,1}-2p_2"
    assert emit.latex_symfunc(s(2) * -1 + s(1, 1) * 2) == "-s_2+2s_{1,1}"
    assert emit.latex_symfunc(SymFunc.zero(2, "p")) == "0"
    half = p(2) * Fraction(-1, 2)
    assert emit.latex_symfunc(half) == "-\\frac{1}{2}p_2"
    assert emit.latex_label("p", (12,)) == "p_{12}"


def test_operator_rows_display_order():
    order, rows = emit.operator_rows(op_E(2))
    assert order == [(1, 1), (2,)]
    assert rows == [[2, 0], [2, 2]]


def test_parser():
    f = parse_latex_symfunc("2p_{1,1}-2p_2", 2, "p")
    assert f == p(1, 1) * 2 - p(2) * 2
    assert parse_latex_symfunc("s_{2}", 2, "s") == s(2)
    assert parse_latex_symfunc("-\\frac{3}{2}p_{2}", 2, "p") == p(2) * Fraction(-3, 2)
    assert parse_latex_symfunc("p_2+p_2", 2, "p") == p(2) * 2
    for bad in ("2q_2", "p_2 junk", "s_2"):
        with pytest.raises(ValueError):
            parse_latex_symfunc(bad, 2, "p")


@pytest.mark.parametrize("n,basis", [(2, "p"), (2, "s"), (3, "p"), (3, "s"), (4, "s")])
def test_reference_tables_clean(n, basis):
    assert table_mismatches(odot_table(n, basis)) == []


def test_latex_table_round_trips_through_parser():
    for basis in ("p", "s"):
        table = odot_table(4, basis)
        out = emit.latex_table(table)
        rows = [line for line in out.splitlines() if line.startswith(basis + "_")]
        order = emit.display_order(4, basis)
        for i, lam in enumerate(order):
            cells = rows[i].rstrip(" \\").split(" & ")[1:]
            for j, mu in enumerate(order):
                assert parse_latex_symfunc(cells[j], 4, basis) == table[lam, mu]


def test_verify_exit_zero_and_reports_misprint():
    code, out = run("verify", "--max-n", "4")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    names = [c["name"] for c in data["reported"]]
    assert "published table misprint n=4" in names
    assert all(c["passed"] for c in data["hard"])


def test_verify_unlisted_mismatch_is_hard(monkeypatch):
    from mckay import verify

    monkeypatch.setattr(verify, "ERRATA", {})
    bad, errata = verify.table_mismatches_with_errata(4, "p")
    assert [tuple(map(tuple, b)) for b in bad] == [((2, 2), (2, 2))] and errata == []
