import math
import re
import xml.etree.ElementTree as ET

import pytest

from raga_tonnetz.embed import Embedding, solve_embedding
from raga_tonnetz.render import LabelMode, RenderOptions, render_tonnetz_svg
from raga_tonnetz.swara import parse_pitch_set
from raga_tonnetz.tonnetz import LatticePoint

NS = {"s": "http://www.w3.org/2000/svg"}


def canon(notes):
    return solve_embedding(parse_pitch_set(notes)).canonical


def tree(svg):
    return ET.fromstring(svg.encode("utf-8"))


def by_class(root, cls):
    return [e for e in root.iter() if e.get("class") == cls]


def test_major_triad_has_three_edges():
    root = tree(render_tonnetz_svg(canon("S G P")))
    assert len(by_class(root, "placed-edge")) == 3
    assert len(by_class(root, "note")) == 3


@pytest.mark.parametrize("name, notes, top", [("Bhairav", "S r G m P d N", True), ("Multani", "S r g M P d N", False)])
def test_note_positions_relative_to_axis(name, notes, top):
    root = tree(render_tonnetz_svg(canon(notes)))
    (axis,) = by_class(root, "axis")
    ay = float(axis.get("y1"))
    ys = [float(c.get("cy")) for c in by_class(root, "note")]
    above = sum(y < ay - 1e-6 for y in ys)
    below = sum(y > ay + 1e-6 for y in ys)
    assert (above > below) is top and above != below


def test_byte_identical():
    e = canon("S R G m P D N")
    assert render_tonnetz_svg(e, title="Bilawal") == render_tonnetz_svg(e, title="Bilawal")


def test_positions_follow_geometry():
    e = Embedding.from_mapping({0: LatticePoint(0, 0), 7: LatticePoint(1, 0), 4: LatticePoint(0, 1), 9: LatticePoint(-1, 1)})
    opts = RenderOptions(scale=50, margin=10)
    notes = {int(c.get("data-pc")): (float(c.get("cx")), float(c.get("cy"))) for c in by_class(tree(render_tonnetz_svg(e, opts)), "note")}
    sx, sy = notes[0]
    for pc, p in e.items:
        x, y = notes[pc]
        assert x - sx == pytest.approx((p.u + p.v / 2) * 50, abs=0.01)
        assert sy - y == pytest.approx(p.v * math.sqrt(3) / 2 * 50, abs=0.01)


def test_everything_inside_viewbox():
    root = tree(render_tonnetz_svg(canon("S r G m M P d N"), RenderOptions(margin=0)))
    x0, y0, w, h = map(float, root.get("viewBox").split())
    for c in root.iter():
        if c.tag.endswith("circle"):
            cx, cy, r = (float(c.get(k)) for k in ("cx", "cy", "r"))
            assert x0 <= cx - r and cx + r <= x0 + w
            assert y0 <= cy - r and cy + r <= y0 + h


def test_options():
    e = canon("S R G P D")
    bare = render_tonnetz_svg(e, RenderOptions(show_background=False))
    assert "lattice-edge" not in bare and "lattice-node" not in bare
    pcs = render_tonnetz_svg(e, RenderOptions(label_mode=LabelMode.PITCH_CLASS))
    labels = [t.text for t in by_class(tree(pcs), "note-label")]
    assert sorted(labels, key=int) == ["0", "2", "4", "7", "9"]
    with pytest.raises(ValueError):
        RenderOptions(scale=0)
    with pytest.raises(ValueError):
        RenderOptions(margin=-1)


def test_title_escaped():
    svg = render_tonnetz_svg(canon("S R G P D"), title="a < b & c")
    assert "<title>a &lt; b &amp; c</title>" in svg
    assert not re.search(r"-0\.00", svg)
