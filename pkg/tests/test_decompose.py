import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mfwsharp.castle import find_appropriate_point
from mfwsharp.decompose import (
    MoveScript,
    NotSharp,
    ScriptConfig,
    artin_normalize,
    artin_potential,
    decompose_no_nested,
    decompose_positive,
    is_r_sharp,
    random_move_script,
    replay,
    verify,
)
from mfwsharp.diagram import DiagramError, diagrams_isomorphic, parse_braid, zero_crossing
from mfwsharp.moves import Shackle, double_regions, undo_double_region
from mfwsharp.resolution import homfly_coherent
from mfwsharp.seifert import SeifertStructure, lone_crossings

from conftest import closures


def _types(script):
    return [m.to_json()["type"] for m in script.moves]


def test_hopf(named):
    cert = decompose_positive(named["hopf"])
    assert _types(cert.script) == ["shackle"]
    assert verify(cert.script, named["hopf"])


def test_unknot_b(named):
    for shortcut in (True, False):
        cert = decompose_positive(named["unknot_b"], shortcut=shortcut)
        assert cert.verdict == NotSharp(0, 4)


def test_torus35(named):
    D = named["torus35"]
    cert = decompose_positive(D)
    assert cert.decomposable
    assert diagrams_isomorphic(replay(cert.script), D)
    counts = cert.script.counts()
    assert 2 * counts["shackle"] + counts["double"] == 10


def test_full_twist_script(named):
    cert = decompose_positive(named["full_twist3"])
    assert cert.script.counts() == {"shackle": 3, "double": 0, "artin": 1}


def test_rejects_non_positive(named):
    with pytest.raises(DiagramError):
        decompose_positive(named["figure_eight"])


def test_replay_basics(named):
    assert replay(MoveScript(2)) == zero_crossing(2)
    script = decompose_positive(named["torus35"]).script
    shorter = MoveScript(script.start_circles, script.moves[:-1])
    assert not verify(shorter, named["torus35"])


def test_script_json_roundtrip(named):
    script = decompose_positive(named["torus35"]).script
    assert MoveScript.from_json(script.to_json()) == script
    with pytest.raises(DiagramError):
        MoveScript.from_json({"moves": []})


def test_normalisation_examples():
    D = parse_braid("3: 2 1 2")
    S = SeifertStructure(D)
    end = next(c for c in range(3) if S.loose_right(c))
    E, _, trace = artin_normalize(D, S.circles[end][0])
    assert [m.direction for m in trace.moves] == ["a"]
    assert diagrams_isomorphic(E, parse_braid("3: 1 2 1"))
    _, _, again = artin_normalize(E, find_appropriate_point(E))
    assert again.moves == [] or again.potentials[-1] < again.potentials[0]


def test_normalised_torus35_has_double_region(named):
    D = named["torus35"]
    assert double_regions(D) == []
    E, _, _ = artin_normalize(D, find_appropriate_point(D))
    assert double_regions(E)


def test_no_nested_examples(named):
    assert _types(decompose_no_nested(named["hopf"])) == ["shackle"]
    star = replay(MoveScript(3, (Shackle(None, None), Shackle(None, 0))))
    assert _types(decompose_no_nested(star)) == ["shackle", "shackle"]
    assert _types(decompose_no_nested(named["trefoil"])) == ["shackle", "double"]
    with pytest.raises(DiagramError):
        decompose_no_nested(named["torus35"])
    with pytest.raises(DiagramError):
        decompose_no_nested(named["unknot_b"])


@given(st.integers(0, 10_000))
def test_generated_diagrams_are_decomposable(seed):
    script, D = random_move_script(random.Random(seed), ScriptConfig())
    assert verify(script, D)
    cert = decompose_positive(D)
    assert cert.decomposable and verify(cert.script, D)


@given(closures(max_strands=4, max_len=9, positive=True))
def test_verdict_matches_other_engine(D):
    cert = decompose_positive(D, shortcut=False)
    assert cert.decomposable == is_r_sharp(D, homfly_coherent)
    if cert.decomposable:
        assert verify(cert.script, D)
    else:
        assert cert.verdict.deg_a_max < cert.verdict.bound


@given(closures(max_strands=4, max_len=9, positive=True))
def test_potential_drops_by_one(D):
    x = find_appropriate_point(D)
    if x is None:
        return
    _, _, trace = artin_normalize(D, x)
    p = trace.potentials
    assert all(a - b == 1 for a, b in zip(p, p[1:]))
    assert len(trace.moves) <= p[0]
    assert p[0] == artin_potential(D, x)


@given(st.integers(0, 10_000))
def test_sharp_resolution_lifts(seed):
    # if either resolution of a double region is sharp, so is the diagram
    _, D = random_move_script(random.Random(seed), ScriptConfig(artin_probability=0.5))
    for x, z in double_regions(D):
        V, _ = undo_double_region(D, x, z, keep_one=False)
        D0, _ = undo_double_region(D, x, z, keep_one=True)
        if is_r_sharp(V) or is_r_sharp(D0):
            assert is_r_sharp(D)


@given(st.integers(0, 10_000))
def test_no_nested_scripts(seed):
    _, D = random_move_script(random.Random(seed), ScriptConfig(artin_probability=0.0, max_start_circles=4))
    S = SeifertStructure(D)
    if D.crossing_count == 0 or lone_crossings(S) or any(S.nested(c) for c in range(len(S.circles))):
        return
    script = decompose_no_nested(D)
    assert script.counts()["artin"] == 0
    assert verify(script, D)
