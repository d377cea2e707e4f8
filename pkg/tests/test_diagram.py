import pytest
from hypothesis import given

from mfwsharp.diagram import (
    DiagramError,
    canonical,
    diagrams_isomorphic,
    disjoint_union,
    flip_crossing,
    mirror,
    parse_braid,
    parse_pd,
    relabel,
    remove_trivial_components,
    serialize_pd,
    smooth_crossing,
    zero_crossing,
)
from mfwsharp.moves import apply_artin, artin_sites
from mfwsharp.seifert import SeifertStructure

from conftest import closures


@pytest.mark.parametrize(
    "text, cr, w, s",
    [("2: 1 1", 2, 2, 2), ("3: 1 2 1 2 1 2 1 2 1 2", 10, 10, 3), ("3: 1 2", 2, 2, 3)],
)
def test_braid_counts(text, cr, w, s):
    D = parse_braid(text)
    assert (D.crossing_count, D.writhe, SeifertStructure(D).count) == (cr, w, s)


def test_unknot_b_is_one_component():
    assert parse_braid("3: 1 2").component_count == 1


@pytest.mark.parametrize("bad", ["", "x: 1", "2: 2", "2: 0", "3: 1 y"])
def test_malformed_braids(bad):
    with pytest.raises(DiagramError):
        parse_braid(bad)


def test_pd_roundtrip_hopf():
    doc = serialize_pd(parse_braid("2: 1 1"))
    assert len(doc["crossings"]) == 2
    assert len({a for c in doc["crossings"] for a in c["arcs"]}) == 4
    assert diagrams_isomorphic(parse_pd(doc), parse_braid("2: 1 1"))


def test_pd_trivial_only():
    D = parse_pd({"crossings": [], "trivial_components": 3})
    assert D.component_count == 3 and D.crossing_count == 0


def test_pd_rejects_torus_gluing():
    # one crossing whose strands close up on a torus rather than a sphere
    doc = {"crossings": [{"sign": 1, "arcs": [1, 2, 1, 2]}], "trivial_components": 0}
    with pytest.raises(DiagramError, match="non-spherical embedding"):
        parse_pd(doc)


def test_pd_rejects_empty():
    with pytest.raises(DiagramError):
        parse_pd({"crossings": []})


def test_mirror_basics(named):
    assert mirror(zero_crossing(2)) == zero_crossing(2)
    m = mirror(named["torus35"])
    assert m.writhe == -10 and not m.is_positive


def test_smooth_and_flip_hopf(named):
    H = named["hopf"]
    for c in range(2):
        U = smooth_crossing(H, c)
        assert (U.crossing_count, U.writhe, U.component_count) == (1, 1, 1)
        assert SeifertStructure(U).count == 2
        assert flip_crossing(H, c).writhe == 0


def test_smoothing_a_kink_leaves_two_circles(named):
    kink = smooth_crossing(named["hopf"], 0)
    U = smooth_crossing(kink, 0)
    assert U.crossing_count == 0 and U.trivial_components == 2


def test_isomorphism_examples(named):
    H = named["hopf"]
    assert diagrams_isomorphic(H, H)
    assert not diagrams_isomorphic(H, mirror(H))
    a, b = parse_braid("3: 1 2 1"), parse_braid("3: 2 1 2")
    assert not diagrams_isomorphic(a, b)
    assert diagrams_isomorphic(apply_artin(a, artin_sites(a)[0][0]), b)


def test_remove_trivial(named):
    assert remove_trivial_components(zero_crossing(3)).component_count == 0
    H = named["hopf"]
    assert remove_trivial_components(disjoint_union(H, zero_crossing(1))) == H


@given(closures())
def test_sphere_euler_characteristic(D):
    for chi in D.euler_characteristics():
        assert chi == 2


@given(closures())
def test_canonical_ignores_labels(D):
    shift = {a: 3 * a + 7 for a in D.ends}
    assert canonical(relabel(D, shift)).key == canonical(D).key


@given(closures())
def test_canonical_is_idempotent(D):
    C = canonical(D).diagram
    assert canonical(C).diagram == C


@given(closures())
def test_double_mirror(D):
    assert mirror(mirror(D)) == D
