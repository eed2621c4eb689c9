import json

import pytest

from lcl_landscape import cli
from lcl_landscape.graph_core import (
    complete_bipartite,
    complete_graph,
    format_graph,
    generate_T,
    parse_graph,
    path_graph,
)
from lcl_landscape.turing import build_counter_machine, format_machine


def _write(tmp_path, name, g):
    p = tmp_path / name
    p.write_text(format_graph(g))
    return str(p)


# -- classify ----------------------------------------------------------------------

def test_classify_path(tmp_path, capsys):
    f = _write(tmp_path, "p4.txt", path_graph(4))
    assert cli.main(["classify", f]) == 0
    assert capsys.readouterr().out == "bucket=A(0) witness=p4:1\n"


def test_classify_nonplanar(tmp_path, capsys):
    a = _write(tmp_path, "k5.txt", complete_graph(5))
    b = _write(tmp_path, "k33.txt", complete_bipartite(3, 3))
    assert cli.main(["classify", a, b]) == 0
    assert capsys.readouterr().out.startswith("bucket=C")


def test_classify_empty_warns(capsys):
    assert cli.main(["classify"]) == 0
    out = capsys.readouterr()
    assert out.out == "bucket=ALL witness=-\n" and "warning:" in out.err


def test_classify_bad_file(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("n 3\nedge 0 9\n")
    assert cli.main(["classify", str(bad)]) == 2
    assert capsys.readouterr().err.startswith("error:")
    assert cli.main(["classify", str(tmp_path / "missing.txt")]) == 2


# -- trees and widths ---------------------------------------------------------------

def test_gen_tree_round_trips(capsys):
    assert cli.main(["gen-tree", "2", "3"]) == 0
    g = parse_graph(capsys.readouterr().out)
    assert g == generate_T(2, 3).tree


def test_gen_tree_rejects(capsys):
    assert cli.main(["gen-tree", "0", "3"]) == 2


def test_pathwidth(capsys, tmp_path):
    out = tmp_path / "pd.txt"
    assert cli.main(["pathwidth", "2", "3", "--exhaustive", "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert text.startswith("width=2 ") and "valid=yes" in text and "width-1 exists=no" in text
    assert out.read_text().strip()


def test_growth(capsys):
    assert cli.main(["growth", "--tree", "2", "6", "--radius", "4"]) == 0
    out = capsys.readouterr()
    assert out.out.splitlines()[0] == "d,count,bound" and "exponent=" in out.err


def test_growth_needs_input(capsys):
    assert cli.main(["growth"]) == 2


# -- machines -----------------------------------------------------------------------

def test_tm_profile(capsys):
    assert cli.main(["tm-profile", "--machine", "counter:2", "--s-max", "5"]) == 0
    assert capsys.readouterr().out == "s,T\n1,5\n2,12\n3,27\n4,58\n5,121\n"


def test_tm_profile_from_file(tmp_path, capsys):
    f = tmp_path / "m.txt"
    f.write_text(format_machine(build_counter_machine(2)))
    assert cli.main(["tm-profile", "--machine", str(f), "--s-max", "3"]) == 0
    assert capsys.readouterr().out.endswith("3,27\n")


def test_tm_profile_incomplete(capsys):
    assert cli.main(["tm-profile", "--s-max", "10", "--step-cap", "100"]) == 1
    assert capsys.readouterr().out.endswith("4,58\n")


def test_tm_profile_violation(capsys):
    assert cli.main(["tm-profile", "--machine", "immediate", "--s-max", "4"]) == 1
    assert "violation:" in capsys.readouterr().err


def test_bad_machine_spec(capsys):
    assert cli.main(["tm-profile", "--machine", "tape:3"]) == 2


# -- construction -------------------------------------------------------------------

def test_build_check_solve(tmp_path, capsys):
    f = tmp_path / "inst.txt"
    assert cli.main(["build-instance", "4", "--out", str(f)]) == 0
    g = parse_graph(f.read_text())
    assert g.n == 4 + 15 + 4 * (12 + 4)
    assert cli.main(["check", str(f)]) == 0
    assert capsys.readouterr().err.strip() == "violations=0"
    assert cli.main(["solve", str(f)]) == 0
    out = capsys.readouterr()
    assert "verified=yes" in out.err and out.out.startswith("node 0 ")


def test_build_instance_rejects_short_path(capsys):
    assert cli.main(["build-instance", "2"]) == 2


def test_check_reports_violations(tmp_path, capsys):
    from lcl_landscape.lcl_construct import build_instance, corrupt

    g = corrupt(build_instance(4, 3), "break-face")
    f = _write(tmp_path, "broken.txt", g)
    assert cli.main(["check", f]) == 1
    lines = capsys.readouterr().out.splitlines()
    assert lines and any(" m-face-" in ln for ln in lines)


def test_experiment(capsys):
    assert cli.main(["experiment", "--s-min", "3", "--s-max", "4"]) == 0
    rows = capsys.readouterr().out.splitlines()
    assert rows[0] == "s,n,max_round,T,bound,verified"
    assert [r.split(",")[0] for r in rows[1:]] == ["3", "4"]
    assert all(r.endswith(",yes") for r in rows[1:])


def test_experiment_rejects_short_path(capsys):
    assert cli.main(["experiment", "--s-min", "2"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_certify(capsys):
    assert cli.main(["certify-lb", "4"]) == 0
    assert capsys.readouterr().out.endswith("certificate: PASS\n")
    assert cli.main(["certify-lb", "4", "--height", "10"]) == 1
    assert capsys.readouterr().out.endswith("certificate: FAIL\n")


def test_record_appends_json(tmp_path, capsys):
    rec = tmp_path / "runs.jsonl"
    assert cli.main(["gen-tree", "1", "3", "--seed", "7", "--record", str(rec)]) == 0
    assert cli.main(["tm-profile", "--s-max", "2", "--record", str(rec)]) == 0
    entries = [json.loads(x) for x in rec.read_text().splitlines()]
    assert [e["command"] for e in entries] == ["gen-tree", "tm-profile"]
    assert entries[0]["seed"] == 7 and entries[0]["parameters"]["k"] == 1
    assert entries[1]["outputs"]["exit"] == 0


def test_unknown_subcommand():
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2
