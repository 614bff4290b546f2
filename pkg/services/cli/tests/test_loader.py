import pytest

from gdconj_cli.loader import ConfigError, build_pair, load_config, load_fixture, parse_config
from gdconj_cli.output import format_cell, render_csv

PAIR = """
label = "tiny"
[f.0.0]
kind = "affine"
slope = "1/2"
[f.0.1]
kind = "affine"
slope = "1/2"
intercept = "1/2"
[f.1.0]
kind = "affine"
slope = "1/2"
[f.1.1]
kind = "affine"
slope = "1/2"
intercept = "1/2"
[g.0.0]
kind = "expr"
formula = "x/2"
[g.0.1]
kind = "affine"
slope = "1/2"
intercept = "1/2"
[g.1.0]
kind = "lf"
a = 1
b = 0
c = 0
d = 2
[g.1.1]
kind = "affine"
slope = "1/2"
intercept = "1/2"
"""


def test_parse_mixed_kinds():
    pair = build_pair(parse_config(PAIR))
    assert pair.label == "tiny"
    assert pair.g.map(0, 0).kind == "expr"
    assert pair.g.map(1, 0).kind == "lf"
    assert pair.valid


def test_missing_field_names_the_key():
    with pytest.raises(ConfigError, match=r"f\.1\.1"):
        parse_config(PAIR.replace('slope = "1/2"\nintercept = "1/2"\n[g.0.0]', 'intercept = "1/2"\n[g.0.0]'))


def test_bad_formula_names_the_key():
    with pytest.raises(ConfigError, match=r"g\.0\.0"):
        build_pair(parse_config(PAIR.replace('formula = "x/2"', 'formula = "x/*2"')))


def test_unknown_fixture_and_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_fixture("ex-missing")
    with pytest.raises(ConfigError):
        load_config(tmp_path / "absent.toml")


def test_csv_cells():
    assert format_cell(None) == ""
    assert format_cell(True) == "true"
    assert format_cell(0.1) == "0.10000000000000001"
    assert render_csv(["a", "b"], [[1, False]]) == "a,b\n1,false\n"


def test_emit_curve_csv(tmp_path):
    from gdconj_cli.output import emit_curve_csv
    from gdconj_solver import sample_curve

    out = tmp_path / "phi1.csv"
    emit_curve_csv(sample_curve(build_pair(load_fixture("ex-lf-smooth")), 1, 1), str(out))
    lines = out.read_text().splitlines()
    assert lines[0] == "x,phi"
    rows = [tuple(float(v) for v in line.split(",")) for line in lines[1:]]
    assert rows == [(0.0, 0.0), (0.5, 0.4), (1.0, 1.0)]
