import json

import pytest

from varietycodes import commands
from varietycodes.catalog import catalog, lookup
from varietycodes.cli import main
from varietycodes.evaluation import minimal_sets


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_describe_text(capsys):
    code, out, _ = run(capsys, "describe", "--label", "U14")
    assert code == 0
    assert "(0,2)x1, (3,1)x3" in out
    assert "k           13" in out


def test_describe_structured(capsys):
    code, out, _ = run(capsys, "describe", "--label", "E2", "--format", "structured")
    doc = json.loads(out)
    assert code == 0
    assert (doc["n"], doc["classical_dimension"], doc["k"]) == (49, 5, 39)


def test_describe_self_orthogonality_failure(tmp_path, capsys):
    path = tmp_path / "zero.txt"
    path.write_text("p = 2\nr = 2\ns = 2\nN = [3]\nU = [0]\n")
    code, out, _ = run(capsys, "describe", "--spec", str(path), "--format", "structured")
    doc = json.loads(out)
    assert code == 1
    assert doc["self_orthogonality_witness"]["orbit"]["representative"] == [0]


def test_describe_flags_non_closed_sets(tmp_path, capsys):
    path = tmp_path / "open.json"
    path.write_text(json.dumps({"p": 2, "r": 11, "s": 1, "N": [23], "U": [1, 2]}))
    code, out, _ = run(capsys, "describe", "--spec", str(path))
    assert code == 0
    assert "not orbit-closed" in out


@pytest.mark.parametrize("argv", [
    ["describe"],
    ["describe", "--label", "nope"],
    ["describe", "--spec", "/nonexistent/file"],
    ["frobnicate"],
    ["gv", "2", "0", "2", "2"],
    ["search", "-p", "2", "-r", "2", "-s", "2", "-N", "3", "--orbit-cap", "1"],
    ["table", "--filter", "colour=red"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_verify_exact_and_refuted(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "--label", "U31")
    assert code == 0 and "Exact(d=5)" in out
    path = tmp_path / "u31.txt"
    path.write_text("p = 3\nr = 5\ns = 1\nN = [11]\nU = [1, 3, 9, 5, 4]\nexpected = n=11 k=1 d=6 q=3\n")
    code, out, _ = run(capsys, "verify", "--spec", str(path))
    assert code == 1 and "Refuted" in out


def test_verify_lower_bound(capsys):
    code, out, _ = run(capsys, "verify", "--label", "U1", "--wmax", "3", "--format", "structured")
    doc = json.loads(out)
    assert code == 0
    assert doc["distance"]["status"] == "lower_bound"
    assert doc["distance"]["work"] == 1_333_500


def test_verify_mismatch_exit_1(capsys):
    code, _, _ = run(capsys, "verify", "--label", "U2", "--wmax", "0")
    assert code == 1


def test_table_effort_zero(capsys):
    code, out, _ = run(capsys, "table", "--wmax", "0", "--format", "structured")
    doc = json.loads(out)
    assert len(doc["rows"]) == 40
    assert doc["seconds"] < 10
    bad = [r["label"] for r in doc["rows"] if not r["nkq_match"]]
    assert bad == ["U2", "U22"]
    assert all(r["gv_match"] and r["self_orthogonal"] for r in doc["rows"])
    assert code == 1


def test_table_filter(capsys):
    code, out, _ = run(capsys, "table", "--wmax", "0", "--filter", "q=4", "--format", "structured")
    labels = [r["label"] for r in json.loads(out)["rows"]]
    assert labels == ["E1"] + [f"U{i}" for i in range(14, 23)]
    accept = commands.parse_filter("flag=GV,n<100")
    assert [e.label for e in catalog() if accept(e)] == ["U5", "U26", "U31"]


def test_table_with_distance(capsys):
    code, out, _ = run(capsys, "table", "--filter", "label=U14")
    assert code == 0 and "Exact(d=3)" in out


def test_gv_command(capsys):
    code, out, _ = run(capsys, "gv", "23", "1", "7", "2")
    assert code == 0
    assert "ExceedsGV" in out and "8,388,609" in out and "32,994,558" in out
    code, out, _ = run(capsys, "gv", "147", "127", "3", "2", "--format", "structured")
    assert json.loads(out)["verdict"] == "GuaranteedByGV"
    code, out, _ = run(capsys, "gv", "10", "0", "3", "2")
    assert code == 0 and "Unsupported" in out


def test_search_z23(capsys):
    code, out, _ = run(capsys, "search", "-p", "2", "-r", "11", "-s", "1", "-N", "23",
                       "--format", "structured")
    doc = json.loads(out)
    assert code == 0
    top = doc["candidates"][0]
    assert (top["k"], top["d_bound"], top["d_exact"]) == (1, 7, True)
    assert any(c["U"] == [list(u) for u in lookup("U5").spec.U] for c in doc["candidates"])


def test_search_z11_and_trivial():
    doc = commands.search(3, 5, 1, (11,)).doc
    assert [c["orbits"] for c in doc["candidates"]][:2] == [[[1]], [[2]]]
    doc = commands.search(2, 11, 1, (23,), k_min=23, d_min=1).doc
    assert [c["U"] for c in doc["candidates"]] == [[]]


def test_search_is_deterministic():
    a = commands.search(2, 6, 2, (7, 3), k_min=10).doc
    b = commands.search(2, 6, 2, (7, 3), k_min=10).doc
    assert a == b
    keys = [(-c["d_bound"], -c["k"]) for c in a["candidates"]]
    assert keys == sorted(keys)


@pytest.mark.parametrize("label", [e.label for e in catalog()
                                   if len(minimal_sets(e.spec)) <= commands.SEARCH_ORBIT_CAP])
def test_search_contains_catalog_sets(label):
    e = lookup(label)
    s = e.spec
    doc = commands.search(s.p, s.r, s.s, s.N, k_min=e.expected.k, w_max=1, enum_cap=1).doc
    assert [list(u) for u in s.U] in [c["U"] for c in doc["candidates"]]
