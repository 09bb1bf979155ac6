import json

import pytest

from subgrs import cli
from subgrs import theory as th
from subgrs.family import EvalConfig, sub_grs
from subgrs.field import field_make
from subgrs.code import is_self_dual


def run(argv, tmp_path, name="out.jsonl"):
    path = tmp_path / name
    code = cli.main(argv + ["--out", str(path)])
    text = path.read_text() if path.exists() else ""
    return code, text


def records(text):
    return [json.loads(line) for line in text.splitlines() if line]


def test_parse_range_and_elements():
    assert cli.parse_range("4..7,9") == [4, 5, 6, 7, 9]
    F9 = field_make(3, 2)
    assert cli.parse_element(F9, "1:2") == F9([1, 2])
    assert cli.parse_element(field_make(7), "-1") == 6
    g = F9.primitive_element()
    assert cli.parse_element(F9, "g^3") == g**3


def test_classify_sub_grs_gf7(tmp_path):
    code, text = run(["classify", "--field", "7", "--n", "4", "--k", "2", "--r", "1",
                      "--source", "all-subsets"], tmp_path)
    recs = records(text)
    assert code == 0 and len(recs) == 35
    assert {r["category"] for r in recs} <= {"NMDS", "MDS"}
    assert all(r["oracle_agrees"] for r in recs)


def test_classify_grs_all_mds(tmp_path):
    code, text = run(["classify", "--field", "7", "--n", "5", "--k", "3", "--family", "grs",
                      "--source", "random", "--seed", "3", "--count", "10"], tmp_path)
    assert code == 0
    assert {r["category"] for r in records(text)} == {"MDS"}


def test_classify_empty_range(tmp_path):
    code, text = run(["classify", "--field", "7", "--n", "4", "--k", "5..4", "--r", "1",
                      "--source", "all-subsets"], tmp_path)
    assert code == 0 and text == ""


def test_audit_agrees_and_is_deterministic(tmp_path):
    argv = ["audit", "--field", "13", "--n", "6..8", "--source", "random", "--seed", "11",
            "--count", "20", "--theorem", "moments,mds,nmds,midrange", "--trials", "20"]
    c1, t1 = run(argv, tmp_path, "a.jsonl")
    c2, t2 = run(argv, tmp_path, "b.jsonl")
    assert c1 == c2 == 0 and t1 == t2
    summary = records(t1)[-1]
    assert summary["summary"] and not any(summary["disagreements"].values())


def test_audit_workers_match_serial(tmp_path):
    argv = ["audit", "--field", "11", "--n", "5..6", "--source", "random", "--seed", "5",
            "--count", "8", "--theorem", "mds,dual-1,dual-2"]
    _, serial = run(argv, tmp_path, "s.jsonl")
    _, pooled = run(argv + ["--workers", "3"], tmp_path, "p.jsonl")
    assert serial == pooled


def test_audit_dual2_case_coverage(tmp_path):
    code, text = run(["audit", "--field", "11", "--n", "5..6", "--source", "all-subsets",
                      "--theorem", "dual-2", "--require-cases", "1,2,3,4,5"], tmp_path)
    summary = records(text)[-1]
    assert code == 0, summary
    assert summary["missing_cases"] == []
    code, _ = run(["audit", "--field", "7", "--n", "5", "--source", "all-subsets", "--limit", "1",
                   "--theorem", "dual-2", "--require-cases", "1,2,3,4,5"], tmp_path)
    assert code == 2


def test_audit_disagreement_exits_2(tmp_path, monkeypatch):
    real = th.sub_grs_is_mds

    def wrong(a, k, r):
        v = real(a, k, r)
        return th.MdsVerdict(not v.is_mds, v.witness, v.condition)

    monkeypatch.setattr(th, "sub_grs_is_mds", wrong)
    code, text = run(["audit", "--field", "7", "--n", "4", "--source", "all-subsets",
                      "--theorem", "mds"], tmp_path)
    assert code == 2
    assert records(text)[-1]["disagreements"]["mds-sub-grs"] > 0


def test_search_witnesses_validate(tmp_path):
    code, text = run(["search", "--field", "13", "--n", "8", "--source", "random", "--seed", "2",
                      "--count", "200", "--theorem", "selfdual-1"], tmp_path)
    assert code == 0
    F = field_make(13)
    hits = [r for r in records(text) if r.get("witness")]
    for r in hits:
        cfg = EvalConfig.of(F, [F(p) for p in r["points"]], [F(v) for v in r["witness"]])
        assert is_self_dual(sub_grs(cfg, 4, 1))


def test_search_cyclic_subgroup_nonempty(tmp_path):
    code, text = run(["search", "--field", "17", "--n", "8", "--source", "cyclic-subgroup",
                      "--theorem", "selfdual-k1"], tmp_path)
    recs = records(text)
    assert code == 0 and recs and recs[0]["self_dual"]
    assert recs[0]["witness"] == [[1], [3], [8], [7], [4], [5], [2], [6]]


def test_dual_command(tmp_path):
    code, text = run(["dual", "--field", "7", "--points", "0,1,2,4", "--k", "2", "--r", "1"], tmp_path)
    rec = records(text)[0]
    assert code == 0 and rec["equal"] and rec["theorem"] == "dual-1"
    code, text = run(["dual", "--field", "13", "--points", "0,1,2,3,4,5,6", "--k", "3", "--r", "2"], tmp_path)
    rec = records(text)[0]
    assert code == 0 and rec["equal"] and rec["case"] in range(1, 6)
    code, text = run(["dual", "--field", "13", "--points", "0,1,2,3,4,5,6,7", "--k", "5", "--r", "2",
                      "--family", "grs"], tmp_path)
    rec = records(text)[0]
    assert code == 0 and "equal" not in rec and "dual_generator" in rec


def test_tables_and_csv(tmp_path):
    code, text = run(["tables", "--field", "7", "--n", "5", "--k", "4", "--r", "2",
                      "--family", "sub_egrs", "--source", "all-subsets", "--format", "csv"], tmp_path, "t.csv")
    assert code == 0
    lines = text.splitlines()
    assert "," in lines[0] and len(lines) >= 2


@pytest.mark.parametrize("argv", [
    ["classify", "--field", "6", "--n", "4", "--k", "2", "--r", "1", "--source", "all-subsets"],
    ["classify", "--field", "7", "--n", "4", "--k", "2", "--r", "1", "--source", "random"],
    ["audit", "--field", "7", "--n", "4", "--source", "all-subsets", "--theorem", "bogus"],
    ["classify", "--field", "7", "--points", "1,1,2,3", "--k", "2", "--r", "1"],
    ["frobnicate"],
])
def test_usage_errors_exit_1(argv, capsys):
    assert cli.main(argv) == 1
