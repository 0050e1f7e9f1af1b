import json

import pytest

from gainforest.cli import main
from gainforest.formats import to_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_sets(capsys):
    code, out, _ = run(capsys, "count", "--n", "3", "--a", "1", "--b", "1", "--sets")
    assert code == 0 and json.loads(out)["count"] == 7
    assert json.loads(run(capsys, "count", "--n", "2", "--sets")[1])["count"] == 2


def test_count_per_corner(capsys):
    code, out, _ = run(capsys, "count", "--n", "3", "--a", "1", "--b", "1", "--trees", "--per-corner")
    assert code == 0 and json.loads(out) == {"2": 1, "3": 2}


def test_count_csv_flag_before_or_after(capsys):
    _, before, _ = run(capsys, "--csv", "count", "--n", "3", "--trees", "--per-corner")
    _, after, _ = run(capsys, "count", "--n", "3", "--trees", "--per-corner", "--csv")
    assert before == after == "key,count\n2,1\n3,2\n"


def test_count_seed_order(capsys):
    assert json.loads(run(capsys, "count", "--n", "3", "--sets", "--seed-order", "2,0,1")[1])["count"] == 7
    assert run(capsys, "count", "--n", "3", "--sets", "--seed-order", "0,0,1")[0] == 2


def test_count_rejects_large_n(capsys):
    code, _, err = run(capsys, "count", "--n", "8", "--sets")
    assert code == 2 and "out of range" in err


def test_usage_error_exit_code(capsys):
    assert run(capsys, "count")[0] == 2
    assert run(capsys, "enumerate", "nonsense", "--n", "2")[0] == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "lbs", "--n", "2")
    assert code == 0 and len(out.splitlines()) == 2
    assert run(capsys, "enumerate", "llbs", "--n", "3", "--count-only")[1].strip() == "3"
    assert run(capsys, "enumerate", "slks", "--n", "2", "--kappa", "3", "--count-only")[1].strip() == "3"
    assert run(capsys, "enumerate", "nbc-sets", "--n", "3", "--count-only")[1].strip() == "7"
    assert run(capsys, "enumerate", "coloured-descent", "--n", "3", "--count-only")[1].strip() == "3"


def test_enumerate_output_is_deterministic(capsys):
    first = run(capsys, "enumerate", "llks", "--n", "3", "--kappa", "3")[1]
    assert first == run(capsys, "enumerate", "llks", "--n", "3", "--kappa", "3")[1]


def test_map_with_trace(capsys, tmp_path, fig_llbs, fig_nbc):
    src = tmp_path / "tree.json"
    src.write_text(json.dumps(to_json(fig_llbs)))
    code, out, _ = run(capsys, "map", "--from", "llbs", "--to", "nbc", "--kappa", "2", "--input", str(src), "--trace")
    payload = json.loads(out)
    assert code == 0 and payload["result"] == to_json(fig_nbc)
    assert payload["trace"]["special_vertex"] == 3
    back = tmp_path / "nbc.json"
    back.write_text(json.dumps(payload["result"]))
    code, out, _ = run(capsys, "map", "--from", "nbc", "--to", "llbs", "--input", str(back))
    assert code == 0 and json.loads(out)["result"] == to_json(fig_llbs)


def test_map_unknown_pair(capsys, tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{}")
    assert run(capsys, "map", "--from", "lbs", "--to", "rlbs", "--input", str(p))[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "--suite", "linial", "--n-max", "4"),
        ("verify", "--suite", "oracle", "--n-max", "3"),
        ("verify", "--suite", "coloured", "--n-max", "3", "--kappa", "2"),
    ],
)
def test_verify_examples(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 0 and "PASS" in err
    assert json.loads(out)["passed"]


def test_verify_linial_table(capsys):
    _, out, _ = run(capsys, "verify", "--suite", "linial", "--n-max", "4")
    rows = [r for r in json.loads(out)["records"] if r["identity"] == "NBC sets = LBS"]
    assert [(r["left"], r["right"]) for r in rows] == [(1, 1), (2, 2), (7, 7), (36, 36)]
    assert all(r["lhs"] == "nbc-enumeration" and r["rhs"] == "tree-enumeration" for r in rows)


def test_verify_oracle_regions(capsys):
    _, out, _ = run(capsys, "verify", "--suite", "oracle", "--n-max", "3")
    rows = [r for r in json.loads(out)["records"] if r["identity"] == "regions K^[1,1] = NBC sets"]
    assert [r["left"] for r in rows] == [1, 2, 7]


def test_verify_writes_file(capsys, tmp_path):
    out = tmp_path / "rep.csv"
    assert run(capsys, "--csv", "verify", "--suite", "decomposition", "--n-max", "3", "--out", str(out))[0] == 0
    assert out.read_text().startswith("identity,key,left,right,lhs,rhs,pass")


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "4", "--a", "1", "--b", "1")
    data = json.loads(out)
    assert code == 0 and data["regions"] == 36 and data["chi"] == [1, -6, 15, -14, 0] and "formula" in data
    assert json.loads(run(capsys, "oracle", "--n", "2", "--formula")[1]) == {"formula": "1"}


def test_export_dot(capsys, tmp_path, fig_llbs):
    p = tmp_path / "t.json"
    p.write_text(json.dumps(to_json(fig_llbs)))
    code, out, _ = run(capsys, "export-dot", "--input", str(p))
    assert code == 0 and out.startswith("digraph")
