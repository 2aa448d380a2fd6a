import csv
import io
import json
from pathlib import Path

import pytest

from canonvdw.coloring import Coloring, random_coloring
from canonvdw.harness import (
    OUTPUT_DIR_ENV,
    ExperimentConfig,
    default_window,
    emit_report,
    proof_pipeline,
    render_report,
    scaling_study,
)
from canonvdw.patterns import PatternFamily, XDomain
from canonvdw.polynomial import parse_poly

GOLDEN = Path(__file__).parent / "golden"
Y2 = parse_poly("y^2")
Y_2Y = PatternFamily.parse("y;2*y")


def test_scaling_examples():
    assert scaling_study(Y2, 4, [2]) == [{"n": 2, "moment": 6, "ratio": 1.5, "status": "ok"}]
    assert scaling_study(Y2, 2, [5]) == [{"n": 5, "moment": 5, "ratio": 5.0, "status": "ok"}]
    with pytest.raises(ValueError):
        scaling_study(Y2, 4, [5, 5])
    with pytest.raises(ValueError):
        scaling_study(Y2, 4, [])


def test_scaling_skips_oversized_rows():
    rows = scaling_study(Y2, 8, [10, 1000], max_length=10_000)
    assert rows[0]["status"] == "ok"
    assert rows[1] == {"n": 1000, "moment": None, "ratio": None, "status": "skipped"}


def test_scaling_matches_golden():
    golden = json.loads((GOLDEN / "scaling.json").read_text())
    rows = scaling_study(Y2, 8, [25, 50, 100])
    assert [str(r["moment"]) for r in rows] == [golden["moments"][k] for k in ("25", "50", "100")]


def test_pipeline_uniform_and_distinct():
    rep = proof_pipeline(Coloring.uniform(4), Y_2Y, dom=XDomain.POS)
    assert rep["verdict"] == {"rainbow": False, "non_rainbow_lt_total": False, "mono_witness": True}
    assert rep["scan"]["mono"] == rep["scan"]["total"] == 2
    fam = PatternFamily.parse("y;2*y;y^2")
    rep = proof_pipeline(Coloring.distinct(50), fam, epsilon=0.1)
    assert rep["scan"]["non_rainbow"] == rep["scan"]["degenerate"] > 0
    assert rep["verdict"]["density_le_epsilon"]
    with pytest.raises(ValueError):
        proof_pipeline(Coloring.uniform(4), PatternFamily.parse("y"))


def test_default_window():
    fam = PatternFamily.parse("y;2*y;y^2")
    assert default_window(fam, 10_000) == 10_000  # n = 100, so n^2 = N
    assert default_window(fam, 50) == 49
    assert default_window(Y_2Y, 10) == 9


def test_pipeline_golden():
    golden = json.loads((GOLDEN / "pipeline.json").read_text())
    c = random_coloring(10_000, 100, 1)
    rep = proof_pipeline(c, PatternFamily.parse("y;2*y;y^2"), 100)
    assert json.loads(json.dumps(rep)) == golden
    assert rep["union_bound"] >= rep["scan"]["non_rainbow"]


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig("x", fmt="xml")
    with pytest.raises(ValueError):
        ExperimentConfig("x", grid=[3, 2])
    assert "out" not in ExperimentConfig("x", out="a.json").as_dict()


def test_csv_empty_table_has_header_only():
    cfg = ExperimentConfig("scaling", fmt="csv")
    assert render_report(cfg, [], ["n", "moment"]) == "n,moment\n"


def test_csv_flattens_nested_rows():
    cfg = ExperimentConfig("pipeline", fmt="csv")
    text = render_report(cfg, [{"a": {"b": 1, "c": [1, 2]}, "f": 0.1, "t": True, "z": None}])
    rows = list(csv.reader(io.StringIO(text)))
    assert rows == [["a.b", "a.c", "f", "t", "z"], ["1", "1 2", "0.1", "true", ""]]
    assert "\r" not in text


def test_report_is_deterministic_and_round_trips(tmp_path):
    rows = scaling_study(Y2, 4, [2, 3, 5])
    cfg = ExperimentConfig("scaling", family="y^2", grid=[2, 3, 5], out=str(tmp_path / "r.json"))
    a = emit_report(cfg, rows)
    b = emit_report(cfg, rows)
    assert a == b == (tmp_path / "r.json").read_text()
    back = json.loads(a)
    assert back["rows"] == rows and back["config"]["grid"] == [2, 3, 5]


def test_output_dir_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path / "outdir"))
    cfg = ExperimentConfig("scaling", fmt="csv", out="sub/r.csv")
    emit_report(cfg, [{"n": 1}])
    assert (tmp_path / "outdir" / "sub" / "r.csv").read_text() == "n\n1\n"


def test_unwritable_output_raises(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    cfg = ExperimentConfig("scaling", out=str(blocker / "r.json"))
    with pytest.raises(OSError):
        emit_report(cfg, [])
