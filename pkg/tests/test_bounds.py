import pytest
from hypothesis import given

from mfwsharp.bounds import bounds_report, positive_equalities_check
from mfwsharp.diagram import DiagramError, disjoint_union, mirror, zero_crossing

from conftest import closures


def test_torus35(named):
    r = bounds_report(named["torus35"])
    assert (r.deg_z_max, r.deg_a_min, r.deg_a_max) == (8, 8, 12)
    assert r.braid_index_lower == 3 and r.crossing_number.lhs == 10
    for name in ("U", "L", "R", "LR", "MFW"):
        assert r.bounds()[name].sharp
    assert r.self_linking == 7 and r.canonical_genus_doubled == 8


def test_unknot_b(named):
    r = bounds_report(named["unknot_b"])
    assert (r.right.lhs, r.right.rhs) == (0, 4) and not r.right.sharp


def test_hopf(named):
    r = bounds_report(named["hopf"])
    assert r.right.sharp and r.left.sharp and r.upper.sharp
    assert (r.deg_a_max, r.deg_a_min, r.deg_z_max) == (3, 1, 1)


def test_extra_circle_keeps_right_sharpness(named):
    H = named["hopf"]
    assert bounds_report(disjoint_union(H, zero_crossing(1))).right.sharp == bounds_report(H).right.sharp


def test_positive_check(named):
    for key in ("torus35", "hopf", "trefoil"):
        assert positive_equalities_check(named[key]).ok
    with pytest.raises(DiagramError):
        positive_equalities_check(named["figure_eight"])


def test_json_shape(named):
    doc = bounds_report(named["torus35"]).to_json()
    assert set(doc["bounds"]) == {"U", "L", "R", "LR", "MFW", "U_prime"}
    assert doc["bounds"]["MFW"]["sharp"] is True


@given(closures(max_len=9))
def test_all_bounds_hold(D):
    r = bounds_report(D, "oracle")
    assert r.all_hold
    assert r.crossing_number.sharp == (r.upper.sharp and r.left.sharp and r.right.sharp)


@given(closures(max_len=9, positive=True))
def test_positive_equalities(D):
    assert positive_equalities_check(D, "oracle").ok


@given(closures(max_len=8))
def test_mirror_swaps_left_and_right(D):
    r, m = bounds_report(D, "oracle"), bounds_report(mirror(D), "oracle")
    assert r.right.sharp == m.left.sharp
    assert r.deg_a_max == -m.deg_a_min
