"""Coxeter diagrams: edges, subdiagram types, polygons, emitters."""

import textwrap

import pytest

import corpus
from vinberg import diagram
from vinberg.forms import Form


# ---------------------------------------------------------------------------
# edges and component types

def test_edge_kinds_on_rank2_chamber(search):
    form = Form(5, 2)
    roots = search(5, 2).roots
    doc = diagram.diagram_json(form, roots)
    kinds = {(e["i"], e["j"]): e["kind"] for e in doc["edges"]}
    assert kinds == {
        (0, 1): "double",       # angle pi/4
        (0, 2): "divergent",
        (1, 3): "divergent",
        (2, 3): "parallel",     # the A~1 ideal-vertex pair
    }


def gram_diagram(gram):
    return diagram.diagram_from_gram(gram)


def test_elliptic_path_types():
    # A3: simple chain
    a3 = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
    d = gram_diagram(a3)
    assert diagram.classify_component(d, (0, 1, 2)) == "A3"
    # B3/C3 realization: chain with one double bond (cos^2 = 1/2)
    b3 = [[2, -1, 0], [-1, 2, -2], [0, -2, 4]]
    d = gram_diagram(b3)
    assert diagram.classify_component(d, (0, 1, 2)) in ("B3", "C3")


def test_affine_types():
    # A~1: parallel pair
    a1t = [[2, -2], [-2, 2]]
    d = gram_diagram(a1t)
    assert diagram.classify_component(d, (0, 1)) == "A~1"
    # A~2: triangle of simple bonds
    a2t = [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    d = gram_diagram(a2t)
    assert diagram.classify_component(d, (0, 1, 2)) == "A~2"


def test_type_rank_and_affinity():
    assert diagram.type_rank("A3") == 3
    assert diagram.type_rank("B~3") == 3
    assert diagram.is_affine_type("A~1")
    assert not diagram.is_affine_type("A1")


def test_affine_sets_of_full_rank(search):
    form = Form(5, 5)
    roots = search(5, 5).roots
    types = diagram.maximal_affine_types(form, roots)
    assert types == corpus.EXPECTED_P5_AFFINE_TYPES[5]


# ---------------------------------------------------------------------------
# polygons (n = 2)

def test_polygon_cycle_structure(search):
    form = Form(5, 2)
    roots = search(5, 2).roots
    cyc = diagram.polygon_cycle(form, roots)
    k = len(roots)
    assert sorted(cyc["sides"]) == list(range(k))
    assert len(cyc["vertices"]) == k


@pytest.mark.parametrize("p", [13, 17, 19, 23])
def test_polygon_sequences_match_frozen(search, p):
    form = Form(p, 2)
    roots = search(p, 2).roots
    seq = diagram.polygon_sequence(form, roots)
    expect = corpus.EXPECTED_POLYGONS[p]
    assert diagram.canonical_cycle(seq) == \
        diagram.canonical_cycle(expect["sequence"])
    # cycle_period returns the smallest self-rotation shift; the symbol's
    # repetition exponent is length / shift
    exponent = len(seq) // diagram.cycle_period(seq)
    assert exponent == expect["period"]


def test_polygon_sequence_rotation_invariant(search):
    form = Form(19, 2)
    roots = search(19, 2).roots
    base = diagram.canonical_cycle(diagram.polygon_sequence(form, roots))
    for shift in range(1, len(roots)):
        rotated = roots[shift:] + roots[:shift]
        seq = diagram.polygon_sequence(form, rotated)
        assert diagram.canonical_cycle(seq) == base


def test_cycle_period_basics():
    # smallest rotation shift fixing the cycle
    assert diagram.cycle_period([(2, 4), (1, 2)] * 3) == 2
    assert diagram.cycle_period([(2, 4), (1, 2), (3, 2)]) == 3


# ---------------------------------------------------------------------------
# emitters

GOLDEN_DOT_5_2 = textwrap.dedent("""\
    graph walls {
      node [shape=circle];
      1;
      2;
      3;
      4;
      1 -- 2 [color="black:invis:black"];
      1 -- 3 [style=dashed];
      2 -- 4 [style=dashed];
      3 -- 4 [penwidth=3];
    }""")


def test_dot_golden(search):
    form = Form(5, 2)
    roots = search(5, 2).roots
    assert diagram.diagram_dot(form, roots).strip() == GOLDEN_DOT_5_2


def test_tikz_contains_all_walls_and_styles(search):
    form = Form(5, 2)
    roots = search(5, 2).roots
    out = diagram.diagram_tikz(form, roots)
    assert out.startswith(r"\begin{tikzpicture}")
    assert out.rstrip().endswith(r"\end{tikzpicture}")
    for i in range(1, 5):
        assert f"(w{i})" in out
    assert r"\draw[double bond] (w1) -- (w2);" in out
    assert r"\draw[heavy] (w3) -- (w4);" in out


def test_diagram_json_is_deterministic(search):
    form = Form(11, 3)
    roots = search(11, 3).roots
    assert diagram.diagram_json(form, roots) == diagram.diagram_json(form, roots)
    doc = diagram.diagram_json(form, roots)
    assert [n["index"] for n in doc["nodes"]] == list(range(len(roots)))
    for e in doc["edges"]:
        assert e["i"] < e["j"]
