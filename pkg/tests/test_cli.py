"""End-to-end runs of the `chroma` command-line front end (in-process)."""

import json

import pytest

from chroma import graphio
from chroma.cli import main
from chroma.groups import ElementSet, make_group


def invoke(tmp_path, capsys, command, cfg, out=None):
    """Write cfg to a file, run `chroma command --config file`, parse stdout."""
    path = tmp_path / f"{command}-config.json"
    path.write_text(json.dumps(cfg))
    argv = [command, "--config", str(path)]
    if out is not None:
        argv += ["--out", str(out)]
    code = main(argv)
    captured = capsys.readouterr()
    report = None
    text = (out.read_text() if out is not None else captured.out).strip()
    if text:
        report = json.loads(text)
    return code, report, captured.err


def test_classify_report(tmp_path, capsys):
    code, rep, _ = invoke(tmp_path, capsys, "classify", {"equation": "[1, 1, -1]"})
    assert code == 0
    res = rep["results"]
    assert res["k"] == 3
    assert res["roth"] is False
    assert res["chi_vanishing"] is False
    assert res["rt"] is True
    assert res["witness_subset"] == [1, 2]
    assert rep["command"] == "classify"
    assert "timing" in rep


def test_kneser_chi_bound(tmp_path, capsys):
    code, rep, _ = invoke(tmp_path, capsys, "kneser",
                          {"n": 125, "k": 5, "m": 4, "action": "chi-bound"})
    assert code == 0
    assert rep["results"]["chi_bound"] == "1"
    assert rep["results"]["chi_bound_ceil"] == 1


def test_kneser_exact_chi(tmp_path, capsys):
    code, rep, _ = invoke(tmp_path, capsys, "kneser",
                          {"n": 5, "k": 2, "m": 1, "action": "chi",
                           "budget": "30s"})
    assert code == 0
    res = rep["results"]
    assert res["vertices"] == 10
    assert res["chi_exact"] is True
    assert res["chi"] == 3


def test_kneser_infeasible_params(tmp_path, capsys):
    code, _, err = invoke(tmp_path, capsys, "kneser",
                          {"n": 5, "k": 3, "m": 1, "action": "count"})
    assert code == 1
    assert "error" in err


def test_cayley_exact_chi_and_alpha(tmp_path, capsys):
    base = {"group": "Z(13)", "connection": [1, 5]}
    code, rep, _ = invoke(tmp_path, capsys, "cayley", {**base, "action": "chi"})
    assert code == 0
    assert rep["results"]["edges"] == 26
    assert rep["results"]["chi_exact"] is True
    assert rep["results"]["chi"] == 4
    code, rep, _ = invoke(tmp_path, capsys, "cayley", {**base, "action": "alpha"})
    assert code == 0
    assert rep["results"]["alpha_exact"] is True
    assert rep["results"]["alpha"] == 4


def test_cayley_greedy_bracket(tmp_path, capsys):
    code, rep, _ = invoke(tmp_path, capsys, "cayley",
                          {"group": "Z(13)", "connection": [1, 5],
                           "action": "greedy"})
    assert code == 0
    res = rep["results"]
    assert 2 <= res["clique_lower"] <= res["greedy_colors"]
    assert len(res["clique"]) == res["clique_lower"]


def test_cayley_export_files(tmp_path, capsys):
    dimacs = tmp_path / "cycle.dimacs"
    cnf = tmp_path / "cycle.cnf"
    code, rep, _ = invoke(tmp_path, capsys, "cayley",
                          {"group": "Z(5)", "connection": [1],
                           "action": "export", "dimacs": str(dimacs),
                           "cnf": str(cnf), "cnf_colors": 3})
    assert code == 0
    assert dimacs.read_text().splitlines()[0] == "p edge 5 5"
    graph = graphio.read_dimacs(str(dimacs))
    assert graph.n == 5 and graph.edge_count() == 5
    header = next(line for line in cnf.read_text().splitlines()
                  if line.startswith("p cnf"))
    assert header.split()[2] == "15"  # 5 vertices x 3 colors
    assert rep["results"]["dimacs"] == str(dimacs)


def test_cayley_export_needs_a_path(tmp_path, capsys):
    code, _, err = invoke(tmp_path, capsys, "cayley",
                          {"group": "Z(5)", "connection": [1],
                           "action": "export"})
    assert code == 1
    assert "export" in err


def test_construct_pinned_thresholds(tmp_path, capsys):
    code, rep, _ = invoke(tmp_path, capsys, "construct",
                          {"equation": "[1,-1,1]", "q": 5, "primes": [11, 13],
                           "p": 431, "core_threshold": "37/20",
                           "extension_threshold": "1/12"})
    assert code == 0
    res = rep["results"]
    assert res["m"] == 143
    assert res["core_size"] == 2
    assert res["extension_size"] == 1
    assert res["core_threshold"] == "37/20"
    conds = res["scale_conditions"]
    assert sum(conds.values()) == 9 and len(conds) == 11


def test_construct_auto_prime(tmp_path, capsys):
    # auto picks the first prime past (sum|c|)^2 (sum|c| + 1) m = 9*4*143
    code, rep, _ = invoke(tmp_path, capsys, "construct",
                          {"equation": "[1,-1,1]", "q": 5, "primes": [11, 13],
                           "p": "auto"})
    assert code == 0
    assert rep["results"]["p"] == 5153


def test_bohr_color_cycle_with_csv(tmp_path, capsys):
    csv = tmp_path / "colors.csv"
    code, rep, _ = invoke(tmp_path, capsys, "bohr-color",
                          {"p": 101, "equation": "[1,1,-1,-1]",
                           "set": {"indices": [1]}, "colors_out": str(csv)})
    assert code == 0
    res = rep["results"]
    assert res["set_size"] == 1
    assert res["colors_used"] == 3
    assert res["proper"] is True
    lines = csv.read_text().splitlines()
    assert lines[0] == "vertex,color"
    assert len(lines) == 102
    colors = [int(line.split(",")[1]) for line in lines[1:]]
    assert set(colors) == {0, 1, 2}


def test_bohr_color_rle_input(tmp_path, capsys):
    bits = tmp_path / "set.bits"
    ElementSet.from_indices(make_group([101]), [1, 5, 30]).save(str(bits))
    code, rep, _ = invoke(tmp_path, capsys, "bohr-color",
                          {"p": 101, "equation": "[1,1,-1,-1]",
                           "set": {"rle": str(bits)}})
    assert code == 0
    assert rep["results"]["set_size"] == 3
    assert rep["results"]["proper"] is True
    # a set over the wrong field is rejected before any work happens
    code, _, err = invoke(tmp_path, capsys, "bohr-color",
                          {"p": 11, "equation": "[1,1,-1,-1]",
                           "set": {"rle": str(bits)}})
    assert code == 1
    assert "expected Z(11)" in err


def test_bohr_color_deterministic_reports(tmp_path, capsys):
    cfg = {"p": 101, "equation": "[1,1,-1,-1]",
           "set": {"random_density": 0.3}, "seed": 9}
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    code1, rep1, _ = invoke(tmp_path, capsys, "bohr-color", cfg, out=out1)
    code2, rep2, _ = invoke(tmp_path, capsys, "bohr-color", cfg, out=out2)
    assert code1 == code2 == 0
    rep1.pop("timing"), rep2.pop("timing")
    assert rep1 == rep2


def test_indep_set_exact_with_csv(tmp_path, capsys):
    csv = tmp_path / "members.csv"
    code, rep, _ = invoke(tmp_path, capsys, "indep-set",
                          {"p": 3, "n": 6, "radius_sq": 6, "csv": str(csv)})
    assert code == 0
    res = rep["results"]
    assert res["exact"] is True
    assert res["count"] == 1
    assert res["degenerate"] is False
    lines = csv.read_text().splitlines()
    assert lines[0] == "x0,x1,x2,x3,x4,x5"
    assert len(lines) == 2


def test_indep_set_binary_variant(tmp_path, capsys):
    code, rep, _ = invoke(tmp_path, capsys, "indep-set", {"p": 2, "n": 9})
    assert code == 0
    assert rep["results"]["count"] == 10
    assert rep["results"]["exact"] is True


def test_certify_lift_pinned_small(tmp_path, capsys):
    code, rep, _ = invoke(tmp_path, capsys, "certify-lift",
                          {"equation": "[1,-1,1]", "q": 5, "primes": [11, 13],
                           "p": 431, "core_threshold": "37/20",
                           "extension_threshold": "1/12"})
    assert code == 2  # one certificate fails: reported as a finding
    res = rep["results"]
    assert res["all_passed"] is False
    outcome = {c["name"]: c["passed"] for c in res["certificates"]}
    assert outcome == {
        "core-solution-free": True,
        "induced-subgraph-match": False,
        "extension-in-lift": True,
        "no-mixed-solutions": True,
    }
    failing = next(c for c in res["certificates"]
                   if c["name"] == "induced-subgraph-match")
    assert failing["witness"] == [0, 75]  # 75 = 143 - 68 wraps mod m only
    assert res["counts"] == {"core_lifted": 2, "core_m": 2,
                             "extension_lifted": 1, "extension_m": 1,
                             "full_lifted": 3}


def test_certify_lift_golden(tmp_path, capsys):
    code, rep, _ = invoke(tmp_path, capsys, "certify-lift", {"golden": True})
    assert code == 2
    res = rep["results"]
    outcome = {c["name"]: c["passed"] for c in res["certificates"]}
    assert outcome["core-solution-free"] is True
    assert outcome["induced-subgraph-match"] is False
    assert outcome["extension-in-lift"] is True
    assert outcome["no-mixed-solutions"] is True
    failing = next(c for c in res["certificates"]
                   if c["name"] == "induced-subgraph-match")
    assert failing["witness"] == [0, 76]
    assert res["counts"]["full_lifted"] == 165
    assert res["interval"] == [93633, 124843]


def test_certify_lift_needs_params_or_golden(tmp_path, capsys):
    code, _, err = invoke(tmp_path, capsys, "certify-lift", {"q": 5})
    assert code == 1
    assert "golden" in err


def test_schema_rejects_unknown_fields(tmp_path, capsys):
    code, _, err = invoke(tmp_path, capsys, "classify",
                          {"equation": "[1,1,-1]", "typo_field": 1})
    assert code == 1
    assert "failed validation" in err


def test_schema_rejects_missing_required(tmp_path, capsys):
    code, _, err = invoke(tmp_path, capsys, "kneser", {"n": 5, "k": 2, "m": 1})
    assert code == 1
    assert "failed validation" in err


def test_schema_rejects_wrong_types(tmp_path, capsys):
    code, _, err = invoke(tmp_path, capsys, "kneser",
                          {"n": "five", "k": 2, "m": 1, "action": "count"})
    assert code == 1
    assert "failed validation" in err


def test_bad_json_config(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{ not json")
    assert main(["classify", "--config", str(path)]) == 1
    assert "not valid JSON" in capsys.readouterr().err


def test_missing_config_file(tmp_path, capsys):
    assert main(["classify", "--config", str(tmp_path / "absent.json")]) == 1
    assert "cannot read config" in capsys.readouterr().err


def test_bad_budget_string(tmp_path, capsys):
    code, _, err = invoke(tmp_path, capsys, "cayley",
                          {"group": "Z(13)", "connection": [1],
                           "action": "chi", "budget": "fast"})
    assert code == 1
    assert "bad budget" in err


def test_unknown_command_rejected(tmp_path, capsys):
    with pytest.raises(SystemExit):
        main(["frobnicate", "--config", "x.json"])


def test_cache_dir_redirects_relative_artifacts(tmp_path, capsys, monkeypatch):
    cache = tmp_path / "cache"
    monkeypatch.setenv("CHROMA_CACHE_DIR", str(cache))
    monkeypatch.chdir(tmp_path)
    code, rep, _ = invoke(tmp_path, capsys, "cayley",
                          {"group": "Z(5)", "connection": [1],
                           "action": "export", "dimacs": "rel.dimacs"})
    assert code == 0
    assert (cache / "rel.dimacs").exists()
    assert rep["results"]["dimacs"] == str(cache / "rel.dimacs")


def test_out_flag_writes_report_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, rep, _ = invoke(tmp_path, capsys, "classify",
                          {"equation": "[1,1,-1]"}, out=out)
    assert code == 0
    assert rep["results"]["rt"] is True
    assert capsys.readouterr().out == ""
