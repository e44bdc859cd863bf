import json

import pytest

from sympbranch.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    records = [json.loads(line) for line in out.splitlines() if line]
    return code, records


def test_domres_guiding_example(capsys):
    code, records = run(capsys, "domres", "--n", "3",
                        "--lambda", "4,3,2,1", "--mu", "3,2,1")
    assert code == 0
    assert len(records) == 3
    assert all(r["mu"] == [3, 2, 1] for r in records)


def test_domres_small(capsys):
    code, records = run(capsys, "domres", "--n", "2", "--lambda", "2,1")
    assert code == 0
    assert len(records) == 2


def test_domres_empty(capsys):
    code, records = run(capsys, "domres", "--n", "1", "--lambda", "")
    assert code == 0
    assert len(records) == 1
    assert records[0]["tableau"] == {"rows": []}


def test_domres_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["domres", "--n", "2", "--lambda", "1,2"])
    assert exc.value.code == 1


def test_branch_all(capsys):
    code, records = run(capsys, "branch", "--n", "2", "--lambda", "2,1",
                        "--method", "all")
    assert code == 0
    table = {(tuple(r["mu"]), r["method"]): r["multiplicity"] for r in records}
    assert table[((2, 1), "paths")] == 1
    assert table[((1,), "sundaram")] == 1
    assert table[((2, 1), "character")] == 1


def test_branch_single_method(capsys):
    code, records = run(capsys, "branch", "--n", "1", "--lambda", "1",
                        "--method", "paths")
    assert code == 0
    assert records == [{"n": 1, "lambda": [1], "method": "paths",
                        "mu": [1], "multiplicity": 1}]


def test_burge_round_trip(capsys):
    code, records = run(capsys, "burge", "--top", "6,10", "--bottom", "1,3")
    assert code == 0
    assert records[0]["tableau"] == {"rows": [[1, 3], [6, 10]]}
    assert records[0]["round_trip"] is True


def test_polytope_domres(capsys):
    code, records = run(capsys, "polytope", "--kind", "domres", "--n", "2",
                        "--lambda", "2,1", "--mu", "1", "--points")
    assert code == 0
    assert records[0]["ineqs"]
    # one element of domres((2,1), (1)) for n=2
    assert len(records[0]["points"]) == 1


def test_verify_trivial(capsys):
    code, records = run(capsys, "verify", "--n-values", "2", "--max-size", "0")
    assert code == 0
    assert records[-1]["ok"] is True


def test_verify_injected_fault(capsys):
    code, records = run(capsys, "verify", "--n-values", "2", "--max-size", "2",
                        "--inject-fault")
    assert code == 2
    assert records[-1]["ok"] is False


def test_verify_characters(capsys):
    code, records = run(capsys, "verify-characters", "--n", "2",
                        "--max-size", "3")
    assert code == 0
    assert all(r["agree"] for r in records if "agree" in r)


def test_verify_bijection(capsys):
    code, records = run(capsys, "verify-bijection", "--n", "2",
                        "--max-size", "3")
    assert code == 0
    assert any("phi" in r for r in records)


def test_csv_output(capsys):
    code = main(["branch", "--n", "1", "--lambda", "1", "--format", "csv"])
    out = capsys.readouterr().out
    assert code == 0
    header, row = [line for line in out.splitlines() if line][:2]
    assert "multiplicity" in header
    assert "1" in row
