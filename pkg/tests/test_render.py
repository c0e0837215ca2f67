"""CSV and SVG rendering: exact header, stable bytes, valid markup."""

from __future__ import annotations

import xml.etree.ElementTree as ET

import pytest

from borrowrisk.model import NatureConfig
from borrowrisk.render import CSV_HEADER, figure_svg, fmt_sig, sweep_csv
from borrowrisk.risk import sweep


@pytest.fixture()
def rows():
    return sweep(NatureConfig(3.0), 1.0, 100.0, 20)


def test_fmt_sig_rounds_to_ten_significant_digits():
    assert fmt_sig(0.30853753872598694) == "0.3085375387"
    assert fmt_sig(1.2183762746508966) == "1.218376275"
    assert fmt_sig(1.0) == "1"
    assert fmt_sig(100.0) == "100"


def test_csv_header_and_shape(rows):
    text = sweep_csv(rows)
    assert "\r" not in text
    assert text.endswith("\n") and not text.endswith("\n\n")
    lines = text.splitlines()
    assert lines[0] == "s,risk_joint,risk_marginal,ratio"
    assert len(lines) == len(rows) + 1


def test_csv_is_deterministic(rows):
    assert sweep_csv(rows) == sweep_csv(rows)


def test_csv_mc_column_blank_except_overlay_rows(rows):
    text = sweep_csv(rows, mc_ratio={0: 1.25, 19: 0.99})
    lines = text.splitlines()
    assert lines[0] == CSV_HEADER + ",mc_ratio"
    assert lines[1].endswith(",1.25")
    assert lines[20].endswith(",0.99")
    assert lines[2].endswith(",")


def test_csv_comment_lines_precede_header(rows):
    text = sweep_csv(rows, comments=["alpha", "beta"])
    lines = text.splitlines()
    assert lines[0] == "# alpha"
    assert lines[1] == "# beta"
    assert lines[2] == CSV_HEADER


def test_svg_parses_and_is_self_contained(rows):
    svg = figure_svg(rows, mc_ratio={0: 1.2}, comments=["params: sigma=3"])
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    assert "href" not in svg
    assert "<image" not in svg and "<script" not in svg
    assert ">s<" in svg
    assert ">risk ratio<" in svg
    assert 'id="ratio-one"' in svg
    assert "params: sigma=3" in svg


def test_svg_polyline_covers_every_row(rows):
    svg = figure_svg(rows)
    root = ET.fromstring(svg)
    polylines = [el for el in root.iter() if el.tag.endswith("polyline")]
    assert len(polylines) == 1
    assert len(polylines[0].attrib["points"].split()) == len(rows)


def test_svg_draws_one_circle_per_overlay_point(rows):
    svg = figure_svg(rows, mc_ratio={0: 1.2, 5: 1.0, 19: 0.99})
    root = ET.fromstring(svg)
    circles = [el for el in root.iter() if el.tag.endswith("circle")]
    assert len(circles) == 3


def test_svg_requires_at_least_two_rows(rows):
    with pytest.raises(ValueError):
        figure_svg(rows[:1])
