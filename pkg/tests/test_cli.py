"""Command line: exit codes, outputs, bundled data and the table runner."""

import json

import pytest

from lagfill.cli import (
    InputError,
    NOT_REPRODUCIBLE,
    RunConfig,
    build_report,
    load_table,
    main,
    make_parser,
    parse_table,
    read_input,
    run_table,
)
from lagfill.diagram import diagram_from_text


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_classify_trefoil_file(capsys):
    assert run(capsys, "classify", "trefoil.pd") == (0, "Positive\n", "")


def test_classify_inline_and_named(capsys):
    rc, out, _ = run(capsys, "classify", "braid 3: 1 2 1 2 1 2 1 2")
    assert (rc, out) == (0, "Positive\n")
    rc, out, _ = run(capsys, "classify", "10_145", "--json")
    obj = json.loads(out)
    assert obj["classification"] == "AlmostPositiveP2"
    assert obj["partners"]


def test_fill_p2(capsys):
    rc, out, err = run(capsys, "fill", "--mode", "p2", "10_145_p2.pd")
    assert rc == 0
    cert = json.loads(out)
    assert cert["metadata"]["genus"] == 2
    assert cert["metadata"]["exact"] is True
    assert "genus 2" in err


def test_verify_round_trip(capsys, tmp_path):
    _, out, _ = run(capsys, "fill", "8_19")
    path = tmp_path / "cert.json"
    path.write_text(out)
    rc, out, _ = run(capsys, "verify", str(path), "--json")
    assert rc == 0
    assert json.loads(out)["genus"] == 3
    data = json.loads(path.read_text())
    data["moves"][3]["index"] += 50
    path.write_text(json.dumps(data))
    rc, out, _ = run(capsys, "verify", str(path), "--json")
    assert rc == 2
    assert json.loads(out)["step"] == 3


def test_exit_codes(capsys, tmp_path):
    garbage = tmp_path / "garbage.txt"
    garbage.write_text("this is not a knot\n")
    rc, _, err = run(capsys, "homfly", str(garbage))
    assert rc == 1 and "input error" in err
    assert run(capsys, "homfly", "no_such_knot")[0] == 1
    assert run(capsys, "classify")[0] == 1
    # no layout for a diagram that is not almost positive
    assert run(capsys, "front", "4_1")[0] == 2
    # fillings are not generated from P1 layouts
    assert run(capsys, "fill", "10_145_p1")[0] == 2
    assert run(capsys, "homfly", "10_145", "--budget", "5")[0] == 2
    with pytest.raises(SystemExit):
        main(["frobnicate", "3_1"])


def test_front_and_ruling(capsys):
    rc, out, _ = run(capsys, "front", "3_1", "--json", "--dump-mondrian")
    obj = json.loads(out)
    assert (rc, obj["tb"], obj["rot"]) == (0, 1, 0)
    assert obj["mondrian"]["mode"] == "PositiveMode"
    rc, out, _ = run(capsys, "ruling", "10_145", "--json")
    assert rc == 0 and json.loads(out)["found"] is True


def test_homfly_text(capsys):
    rc, out, _ = run(capsys, "homfly", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
    assert rc == 0
    assert out.splitlines() == [
        "1*v^-2*z^2 + 2*v^-2*z^0 - 1*v^-4*z^0",
        "max_deg_v: -2",
        "mfw_tb_bound: 1",
    ]


def test_json_output_is_deterministic(capsys):
    first = run(capsys, "genus", "10_145", "--json")
    second = run(capsys, "genus", "10_145", "--json")
    assert first == second
    a = json.dumps(build_report("x", diagram_from_text("braid 3: 1 2 1 2 1 2 1 2")).to_json(), sort_keys=True)
    b = json.dumps(build_report("x", diagram_from_text("braid 3: 1 2 1 2 1 2 1 2")).to_json(), sort_keys=True)
    assert a == b


def test_data_dir_override(monkeypatch, tmp_path, capsys):
    (tmp_path / "knots.txt").write_text("mine | braid 2: 1 1 1 | g3=1 | external-table\n")
    monkeypatch.setenv("LAGFILL_DATA", str(tmp_path))
    assert [r.name for r in load_table()] == ["mine"]
    assert run(capsys, "classify", "mine")[:2] == (0, "Positive\n")
    assert run(capsys, "classify", "3_1")[0] == 1


def test_table_parsing():
    recs = parse_table("# comment\nk | braid 2: 1 1 1 | g3=1 table1_LF=Yes | Table1\n")
    assert recs[0].expected == {"g3": 1, "table1_LF": "Yes"}
    assert recs[0].sources == ("Table1",)
    with pytest.raises(InputError, match="source tag"):
        parse_table("k | braid 2: 1 1 1 | g3=1 |\n")
    with pytest.raises(InputError):
        parse_table("k | braid 2: 1 1 1\n")
    with pytest.raises(InputError):
        parse_table("k | braid 2: 1 1 1 | g3 | Table1\n")


def test_every_bundled_record_has_a_source(records):
    for rec in records.values():
        assert rec.sources, rec.name
        _, d, expected = read_input(rec.name)
        assert expected == rec.expected


def test_absent_expectations_are_untested():
    rep = build_report("t", diagram_from_text("braid 2: 1 1 1"), {})
    assert rep.checks["g3"] == "untested"
    assert rep.checks["sigma"] == "untested"
    assert rep.verdict() == "pass"  # the sharpness and Chantraine checks still run
    rep = build_report("t", diagram_from_text("braid 2: 1 1 1"), {"g3": 2})
    assert rep.checks["g3"] == "fail"
    assert rep.verdict() == "fail"


def test_missing_presentation_is_skipped():
    recs = parse_table("8_20 | - | table1_LF=No | Table1\n")
    assert run_table(recs) == ["skipped: no bundled diagram"]


def test_full_table(capsys):
    rc, out, _ = run(capsys, "table", "--json")
    data = json.loads(out)
    assert rc == 0
    assert data["summary"]["fail"] == 0
    assert data["note"] == NOT_REPRODUCIBLE
    names = [r["name"] for r in data["rows"]]
    assert names == [r.name for r in load_table()]
    no_rows = [r for r in data["rows"] if r["report"]["expected"].get("table1_LF") == "No"]
    assert no_rows
    assert all(r["checks"]["LF"].startswith("expectation-only") for r in no_rows)


def test_parallel_table_keeps_record_order():
    recs = load_table()[:6]
    serial = [r.to_json() for r in run_table(recs)]
    parallel = [r.to_json() for r in run_table(recs, jobs=2)]
    assert serial == parallel


def test_run_config(capsys):
    assert RunConfig() == RunConfig.from_args(make_parser().parse_args(["table"]))
    with pytest.raises(InputError):
        RunConfig(jobs=0)
    with pytest.raises(InputError):
        RunConfig(mode="p3")
    assert run(capsys, "ruling", "10_145", "--ruling-cap", "3")[0] == 2
    assert run(capsys, "table", "--jobs", "0")[0] == 1
