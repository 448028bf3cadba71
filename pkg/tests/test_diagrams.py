import xml.etree.ElementTree as ET

from weavesym.classify import classify
from weavesym.design import Design
from weavesym.diagrams import color_diagram_svg, design_svg, layer_diagram_svg
from weavesym.weave import gen_twill

SVG = "{http://www.w3.org/2000/svg}"
TWILL = gen_twill(2, 2, 1)
REFERENCE = Design.from_strings(["#..#", "#.#.", ".##.", "#.#."])


def parse(svg_text):
    return ET.fromstring(svg_text)


def glyphs(root, shape):
    return [el for el in root.iter(f"{SVG}{shape}") if el.get("data-kind")]


def test_design_svg_draws_cells():
    root = parse(design_svg(TWILL))
    cells = [el for el in root.iter(f"{SVG}rect") if el.get("class") == "cell"]
    assert len(cells) == TWILL.black_count
    assert root.get("width") == str(4 * 24)


def test_design_svg_repeats():
    root = parse(design_svg(TWILL, repeats=(2, 2)))
    cells = [el for el in root.iter(f"{SVG}rect") if el.get("class") == "cell"]
    assert len(cells) == 4 * TWILL.black_count


def test_color_diagram_sides_and_colors():
    root = parse(color_diagram_svg(classify(TWILL)))
    lines = glyphs(root, "line")
    assert lines, "expected mirror and glide lines"
    for el in lines:
        css = el.get("class")
        assert css.split()[-1] in ("s1", "s2")
        stroke = el.get("stroke")
        if "s1" in css.split():
            assert stroke == "#c8281e"
        elif "s2" in css.split():
            assert stroke == "#1e50c8"


def test_color_diagram_rot2_points():
    root = parse(color_diagram_svg(classify(TWILL)))
    pts = glyphs(root, "ellipse")
    assert pts
    assert all(el.get("data-kind") == "rotation2" for el in pts)
    # centre coordinates are recorded in half units
    for el in pts:
        x2, y2 = int(el.get("data-x2")), int(el.get("data-y2"))
        assert 0 <= x2 < 16 and 0 <= y2 < 16
        assert float(el.get("cx")) == x2 * 12


def test_color_diagram_mirror_and_glide_split():
    # the twill's anti-diagonal family carries pure mirrors, the
    # diagonal family only glides
    root = parse(color_diagram_svg(classify(TWILL)))
    kinds = {el.get("data-kind") for el in glyphs(root, "line")
             if el.get("data-vector") is None}
    assert kinds == {"mirror", "glide"}


def test_layer_diagram_lifted_kinds():
    root = parse(layer_diagram_svg(classify(TWILL)))
    kinds = {el.get("data-kind") for el in glyphs(root, "line")}
    kinds |= {el.get("data-kind") for el in glyphs(root, "ellipse")}
    kinds |= {el.get("data-kind") for el in glyphs(root, "circle")}
    assert "axis2-normal" in kinds
    assert "inversion-center" in kinds
    assert "screw2-inplane" in kinds
    assert "glide-plane-normal" in kinds
    assert "axis2-inplane" in kinds
    assert "mirror-plane-normal" not in kinds


def test_layer_diagram_swap_translation_arrow():
    root = parse(layer_diagram_svg(classify(TWILL)))
    arrows = [el for el in root.iter(f"{SVG}line")
              if el.get("data-kind") == "glide-plane-parallel"]
    assert len(arrows) == 1
    assert arrows[0].get("data-vector") == "2,0"


def test_reference_layer_diagram():
    root = parse(layer_diagram_svg(classify(REFERENCE)))
    kinds = {el.get("data-kind") for el in root.iter() if el.get("data-kind")}
    assert kinds == {"mirror-plane-normal", "axis2-inplane", "inversion-center",
                     "glide-plane-normal", "screw2-inplane"}


def test_fourfold_glyphs():
    root = parse(color_diagram_svg(classify(Design.from_strings(["#.", ".#"]))))
    squares = [el for el in root.iter(f"{SVG}rect")
               if el.get("data-kind") == "rotation4"]
    assert squares


def test_mirror_lines_land_on_axis():
    cls = classify(REFERENCE)
    root = parse(layer_diagram_svg(cls))
    for el in root.iter(f"{SVG}line"):
        if el.get("data-kind") != "mirror-plane-normal":
            continue
        # horizontal mirrors only, at the recorded half-unit offset
        y1, y2 = float(el.get("y1")), float(el.get("y2"))
        assert y1 == y2 == int(el.get("data-offset2")) * 12
