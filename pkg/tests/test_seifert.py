from hypothesis import given

from mfwsharp.diagram import parse_braid
from mfwsharp.seifert import SeifertStructure, diagram_stats, lone_crossings

from conftest import closures


def test_torus35_structure(named):
    S = SeifertStructure(named["torus35"])
    assert S.count == 3
    assert sorted(S.edge_multiplicity.values()) == [5, 5]
    middle = [c for c in range(3) if len(S.neighbors[c]) == 2]
    assert len(middle) == 1 and S.nested(middle[0])


def test_hopf_structure(named):
    S = SeifertStructure(named["hopf"])
    assert S.count == 2
    assert list(S.edge_multiplicity.values()) == [2]
    assert all(S.innermost(c) for c in range(2))


def test_stats_examples(named):
    t = diagram_stats(named["torus35"])
    assert t.is_positive and t.lone_crossings == () and t.has_nested
    u = diagram_stats(named["unknot_b"])
    assert u.is_positive and sorted(u.lone_crossings) == [0, 1]
    h = diagram_stats(named["hopf"])
    assert h.is_positive and h.lone_crossings == () and not h.has_nested


def test_first_strand_is_loose_on_the_right():
    D = parse_braid("3: 2 1 2")
    S = SeifertStructure(D)
    # the first strand meets one crossing, the third strand two
    first = next(c for c, cyc in enumerate(S.circles) if len(cyc) == 1)
    last = next(c for c, cyc in enumerate(S.circles) if len(cyc) == 2)
    assert S.loose_right(first) and not S.loose_left(first)
    assert S.loose_left(last) and not S.loose_right(last)


@given(closures(max_strands=5))
def test_graph_is_bipartite(D):
    assert SeifertStructure(D).is_bipartite


@given(closures(max_strands=5))
def test_sides_partition_the_other_circles(D):
    S = SeifertStructure(D)
    for c in range(len(S.circles)):
        same_piece = {o for o in range(len(S.circles)) if o != c and S.piece_of_circle[o] == S.piece_of_circle[c]}
        assert S.left_set(c) | S.right_set(c) == same_piece
        assert not S.left_set(c) & S.right_set(c)
        assert S.innermost(c) == (S.loose_left(c) or S.loose_right(c))


@given(closures(max_strands=5))
def test_connected_braids_have_two_loose_ends(D):
    S = SeifertStructure(D)
    if len(D.pieces) == 1 and len(S.circles) > 1:
        assert sum(S.innermost(c) for c in range(len(S.circles))) == 2


@given(closures(max_strands=5))
def test_lone_crossings_have_multiplicity_one(D):
    S = SeifertStructure(D)
    for c in lone_crossings(S):
        assert S.shared_crossings(*S.crossing_circles[c]) == 1
