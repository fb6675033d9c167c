import json

import pytest

from lenslink import testkit
from lenslink.diagram import (Diagram, DiagramError, Edge, LensSpace, ParseError,
                              components, crossing_sign, epsilon_signs, faces,
                              interior_faces, mirror, outer_face, overpasses,
                              parse_diagram, renumber, require_valid,
                              reverse_component, serialize, validate)


def test_lens_space_invariants():
    LensSpace(4, 1)
    LensSpace(1, 0)
    with pytest.raises(DiagramError):
        LensSpace(4, 2)
    with pytest.raises(DiagramError):
        LensSpace(3, 3)


def test_smallest_valid_diagram():
    text = json.dumps({"p": 4, "q": 1, "crossings": [],
                       "edges": [{"id": 0, "tail": None, "head": None}],
                       "boundary": []})
    d = parse_diagram(text)
    assert validate(d) == []
    assert len(components(d)) == 1
    assert d.t == 0


def test_parse_rejects_non_coprime():
    text = json.dumps({"p": 4, "q": 2, "crossings": [], "edges": [], "boundary": []})
    with pytest.raises(ParseError, match="gcd"):
        parse_diagram(text)


def test_parse_reports_position():
    with pytest.raises(ParseError, match="line"):
        parse_diagram("{not json")


def test_parse_duplicate_and_dangling():
    base = {"p": 2, "q": 1, "crossings": [{"id": 0}, {"id": 0}],
            "edges": [], "boundary": []}
    with pytest.raises(ParseError, match="duplicate"):
        parse_diagram(json.dumps(base))
    base = {"p": 2, "q": 1, "crossings": [],
            "edges": [{"id": 0, "tail": ["C", 5, 0], "head": None}],
            "boundary": []}
    with pytest.raises(ParseError):
        parse_diagram(json.dumps(base))


def test_trefoil_valid_and_faces():
    d = testkit.trefoil()
    assert validate(d) == []
    assert len(d.crossings) == 3
    assert len(d.edges) == 6
    # V - E + F = 2 on the sphere; 5 faces for the standard trefoil diagram
    assert len(faces(d)) == 5
    assert len(components(d)) == 1
    assert all(crossing_sign(d, c) == 1 for c in d.crossings)


def test_mirror_negates_signs():
    d = testkit.trefoil()
    m = mirror(d)
    assert validate(m) == []
    assert all(crossing_sign(m, c) == -1 for c in m.crossings)


def test_figure_eight_signs():
    d = testkit.figure_eight()
    assert validate(d) == []
    signs = sorted(crossing_sign(d, c) for c in d.crossings)
    assert signs == [-1, -1, 1, 1]


def test_face_count_oracle_connected():
    # interior faces of the capped disk: F = E - V + 1 for a connected map
    d = testkit.trefoil()
    v = len(d.crossings)
    e = len(d.edges)
    assert len(faces(d)) - 1 == e - v + 1


def test_core_knot():
    d = testkit.core_knot(LensSpace(5, 2))
    assert validate(d) == []
    assert d.t == 1
    assert len(components(d)) == 1
    assert epsilon_signs(d) == [1]
    f = faces(d)
    assert outer_face(d) is not None
    assert len(interior_faces(d)) == len(f) - 1


def test_epsilon_flips_on_reversal():
    d = testkit.core_knot(LensSpace(5, 2))
    r = require_valid(reverse_component(d, [0]))
    assert epsilon_signs(r) == [-1]


def test_boundary_conventions_enforced():
    # -1 listed first violates the basepoint convention
    d = Diagram(LensSpace(3, 1), [], [Edge(0, ("B", -1, 1), ("B", 1, 1))],
                [(-1, 1), (1, 1)])
    codes = {v.code for v in validate(d)}
    assert "labels" in codes


def test_orientation_violation_detected():
    # both ends of the arc are tails: the strand cannot continue through +-1
    d = Diagram(LensSpace(3, 1), [], [Edge(0, ("B", 1, 1), ("B", -1, 1))],
                [(1, 1), (-1, 1)])
    assert validate(d) == []
    bad = Diagram(LensSpace(3, 1), [],
                  [Edge(0, ("B", 1, 1), None), Edge(1, ("B", -1, 1), None)],
                  [(1, 1), (-1, 1)])
    # free-loop mixing aside, endpoints None on one side only is structural
    codes = {v.code for v in validate(bad)}
    assert codes  # some violation reported


def test_realizability_violation():
    # interleaved chord pattern impossible in L(3,1)
    edges = [Edge(0, ("B", 1, 1), ("B", -1, 1)), Edge(1, ("B", 1, 2), ("B", -1, 2))]
    d = Diagram(LensSpace(3, 1), [], edges, [(1, 1), (-1, 2), (1, 2), (-1, 1)])
    codes = {v.code for v in validate(d)}
    assert "realizability" in codes


def test_planarity_violation():
    # two crossings wired into a torus-like map: Euler characteristic != 2
    edges = [
        Edge(0, ("C", 0, 2), ("C", 1, 1)),
        Edge(1, ("C", 1, 3), ("C", 0, 1)),
        Edge(2, ("C", 0, 0), ("C", 1, 0)),
        Edge(3, ("C", 1, 2), ("C", 0, 3)),
    ]
    d = Diagram(LensSpace(1, 0), [0, 1], edges, [])
    codes = {v.code for v in validate(d)}
    assert "planarity" in codes


def test_serialize_roundtrip():
    for d in [testkit.trefoil(), testkit.core_knot(LensSpace(4, 1)),
              testkit.circles(2), testkit.parallel_chords(LensSpace(5, 2))]:
        d2 = parse_diagram(serialize(d))
        assert validate(d2) == []
        assert testkit.diagrams_isomorphic(renumber(d), renumber(d2))


def test_components_partition():
    d = testkit.hopf_link()
    comps = components(d)
    assert len(comps) == 2
    assert sum(len(c.edge_ids) for c in comps) == len(d.edges)


def test_two_circles():
    d = testkit.circles(2, LensSpace(4, 1))
    assert validate(d) == []
    assert len(components(d)) == 2


def test_overpasses_trefoil():
    d = testkit.trefoil()
    ops = overpasses(d)
    assert len(ops) == 3
    assert all(not o.is_circle for o in ops)
    assert all(len(o.edge_ids) == 2 for o in ops)


def test_overpasses_circle_and_core():
    d = testkit.circle()
    assert overpasses(d)[0].is_circle
    core = testkit.core_knot(LensSpace(3, 1))
    ops = overpasses(core)
    assert len(ops) == 1
    assert ops[0].boundary_ends() == [(1, 1), (-1, 1)]


def test_connected_sum_components():
    base = testkit.core_knot(LensSpace(4, 1))
    s = testkit.connected_sum_local(base, testkit.trefoil())
    assert validate(s) == []
    assert len(components(s)) == 1
    assert len(s.crossings) == 3
    two = testkit.connected_sum_local(testkit.hopf_link(), testkit.trefoil())
    assert len(components(two)) == 2


def test_embed_local():
    d = testkit.embed_local(testkit.trefoil(), LensSpace(4, 1))
    assert validate(d) == []
    assert d.space.p == 4
    with pytest.raises(DiagramError):
        testkit.embed_local(testkit.core_knot(LensSpace(3, 1)), LensSpace(4, 1))
