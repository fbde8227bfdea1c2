import xml.etree.ElementTree as ET

import numpy as np
import pytest

from arc_miner.clustering import ClusterSummary
from arc_miner.plots import render_arcs, render_scree


def make_summary(cluster_id=0, n=5, sd_scale=0.2, label="Rags to riches"):
    mean = np.linspace(-1, 1, 100)
    sd = np.full(100, sd_scale)
    half = 2.576 * sd / np.sqrt(n)
    return ClusterSummary(
        cluster_id=cluster_id,
        n=n,
        mean=mean,
        sd=sd,
        ci_low=mean - half,
        ci_high=mean + half,
        label=label,
    )


class TestRenderArcs:
    def test_single_panel_well_formed(self):
        svg = render_arcs([make_summary()])
        root = ET.fromstring(svg)
        assert root.tag.endswith("svg")

    def test_seven_panels_in_cluster_order(self):
        summaries = [make_summary(cluster_id=i) for i in reversed(range(7))]
        svg = render_arcs(summaries)
        positions = [svg.index(f"cluster {i + 1} ") for i in range(7)]
        assert positions == sorted(positions)

    def test_zero_sd_bands_collapse_onto_mean(self):
        s = make_summary(sd_scale=0.0)
        svg = render_arcs([s])
        root = ET.fromstring(svg)
        ns = {"s": "http://www.w3.org/2000/svg"}
        lines = root.findall(".//s:polyline", ns)
        # mean, both SD bands, and both CI bands share identical points
        points = {ln.get("points") for ln in lines if ln.get("stroke") in ("#111111", "#c53030", "#2b6cb0")}
        points.discard(None)
        assert len({p for p in points}) <= 2  # band polylines + zero axis line

    def test_no_external_references(self):
        svg = render_arcs([make_summary()])
        assert "http" not in svg.replace("http://www.w3.org/2000/svg", "")

    def test_deterministic(self):
        assert render_arcs([make_summary()]) == render_arcs([make_summary()])

    def test_label_escaped(self):
        svg = render_arcs([make_summary(label="a & <b>")])
        ET.fromstring(svg)  # still well-formed


class TestRenderScree:
    def test_marker_per_point(self):
        curve = [(k, 100.0 / k) for k in range(1, 31)]
        svg = render_scree(curve)
        root = ET.fromstring(svg)
        ns = {"s": "http://www.w3.org/2000/svg"}
        markers = [c for c in root.findall(".//s:circle", ns) if c.get("r") == "3"]
        assert len(markers) == 30

    def test_well_formed(self):
        ET.fromstring(render_scree([(1, 10.0), (2, 4.0), (3, 3.5)]))

    def test_elbow_annotated(self):
        # constructed curve with a sharp bend at k = 7
        curve = [(k, 1000.0 - 120 * min(k, 7) + 2 * k) for k in range(1, 15)]
        svg = render_scree(curve)
        assert "elbow k=7" in svg
