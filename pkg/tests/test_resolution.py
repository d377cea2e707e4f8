import random

import pytest
from hypothesis import given

from mfwsharp.diagram import braid_closure, flip_crossing, mirror, parse_braid, smooth_crossing, zero_crossing
from mfwsharp.laurent import A, A_INV, Z, LaurentPoly2, unlink
from mfwsharp.resolution import (
    HomflyOracle,
    homfly,
    homfly_coherent,
    homfly_oracle,
    iter_coherent_leaves,
    leaf_highest_a_test,
    leaf_term,
    maximal_coherent_path,
)
from mfwsharp.seifert import SeifertStructure

from conftest import braid_words, closures

HOPF = A * Z + LaurentPoly2({(1, -1): 1, (3, -1): -1})
TREFOIL = 2 * A**2 + A**2 * Z**2 - A**4


def test_small_values(named):
    assert homfly_oracle(parse_braid("2: 1")) == LaurentPoly2.one()
    assert homfly_oracle(named["hopf"]) == HOPF
    assert homfly_oracle(named["trefoil"]) == TREFOIL
    assert homfly_coherent(named["trefoil"]) == TREFOIL


def test_mirror_trefoil(named):
    want = 2 * A_INV**2 + A_INV**2 * Z**2 - A_INV**4
    assert homfly_oracle(mirror(named["trefoil"])) == want == TREFOIL.substitute_mirror()


@pytest.mark.parametrize("n", range(1, 6))
def test_unlinks(n):
    assert homfly_coherent(zero_crossing(n)) == homfly_oracle(zero_crossing(n)) == unlink(n)


def test_engine_both_raises_nothing_on_agreement(named):
    assert homfly(named["figure_eight"], "both") == homfly_oracle(named["figure_eight"])
    with pytest.raises(ValueError):
        homfly(named["hopf"], "nope")


def test_empty_diagram_rejected():
    with pytest.raises(ValueError):
        homfly_oracle(zero_crossing(0))


def test_cache_cap_is_respected(named):
    ev = HomflyOracle(cache_cap=3)
    ev(named["torus35"])
    assert len(ev.memo) <= 3


@given(closures())
def test_skein_relation(D):
    # a^-1 P(D+) - a P(D-) = z P(D0) at a random crossing
    c = random.Random(D.crossing_count).randrange(D.crossing_count)
    plus = D if D.crossings[c].sign > 0 else flip_crossing(D, c)
    minus = flip_crossing(plus, c)
    assert A_INV * homfly_oracle(plus) - A * homfly_oracle(minus) == Z * homfly_oracle(smooth_crossing(plus, c))


@given(braid_words(max_strands=3, max_len=6))
def test_markov_stabilisation(nw):
    n, word = nw
    base = homfly_oracle(braid_closure(n, word))
    assert homfly_oracle(braid_closure(n + 1, word + [n])) == base
    assert homfly_oracle(braid_closure(n + 1, word + [-n])) == base


def test_artin_relation_invariance():
    assert homfly_oracle(parse_braid("3: 1 2 1")) == homfly_oracle(parse_braid("3: 2 1 2"))


@given(closures(max_len=7))
def test_engines_agree(D):
    assert homfly_coherent(D) == homfly_oracle(D)


@given(closures(max_len=7))
def test_point_policy_does_not_matter(D):
    assert homfly_coherent(D, "first") == homfly_coherent(D, "last")


@given(closures(max_len=7))
def test_leaves_are_unlinks(D):
    for leaf in iter_coherent_leaves(D):
        assert homfly_oracle(leaf.diagram) == unlink(leaf.components)


@given(closures(max_len=8))
def test_leaf_degree_criterion(D):
    S = SeifertStructure(D)
    for leaf in iter_coherent_leaves(D):
        assert leaf_highest_a_test(D, leaf, S) == leaf.has_simple_components()


@given(closures(max_len=8, positive=True))
def test_top_degree_signs_agree_for_positive(D):
    P = homfly_oracle(D)
    top = D.writhe + SeifertStructure(D).count - 1
    coeffs = P.a_coefficient(top).values()
    assert len({c > 0 for c in coeffs}) <= 1


def test_hopf_tree(named):
    H = named["hopf"]
    leaves = list(iter_coherent_leaves(H))
    shapes = sorted((lf.components, lf.diagram.crossing_count, lf.smoothed) for lf in leaves)
    assert shapes == [(1, 1, 1), (2, 2, 0)]
    passing = [lf for lf in leaves if leaf_highest_a_test(H, lf)]
    assert [lf.components for lf in passing] == [2]
    assert passing[0].has_simple_components()


def test_torus35_top_coefficient_from_passing_leaves(named):
    D = named["torus35"]
    S = SeifertStructure(D)
    total = LaurentPoly2()
    for leaf in iter_coherent_leaves(D):
        if leaf_highest_a_test(D, leaf, S):
            total = total + leaf_term(D, leaf)
    assert total.a_coefficient(12) == {2: 1, 0: 2}


def test_closed_path_on_unlinked_circle():
    D = parse_braid("2: 1 -1")
    x = next(iter(D.ends))
    assert maximal_coherent_path(D, x, True).closed or maximal_coherent_path(D, x, False).closed


def test_hopf_path_stops_at_a_crossing(named):
    H = named["hopf"]
    for x in H.ends:
        for rule in (True, False):
            res = maximal_coherent_path(H, x, rule)
            assert res.closed or res.violation in (0, 1)
