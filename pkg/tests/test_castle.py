import pytest
from hypothesis import given

from mfwsharp.castle import (
    CastleError,
    build_castle,
    candidate_base_points,
    find_appropriate_point,
)
from mfwsharp.diagram import zero_crossing
from mfwsharp.seifert import SeifertStructure

from conftest import closures


def _end_circle_point(D):
    S = SeifertStructure(D)
    return S, next(a for a in candidate_base_points(D, S) if a is not None)


def test_zero_crossing_castle():
    C = build_castle(zero_crossing(1), None)
    assert len(C.floors) == 1 and C.ladders == []


def test_hopf_castle(named):
    D = named["hopf"]
    S, x = _end_circle_point(D)
    C = build_castle(D, x, S)
    assert len(C.floors) == 2 and len(C.ladders) == 2
    assert len(C.braces) == 1 and not C.has_traps()
    assert C.towers() == [(0, 1)]


def test_torus35_castle(named):
    D = named["torus35"]
    S, x = _end_circle_point(D)
    C = build_castle(D, x, S)
    assert [F.level for F in C.floors] == [0, 1, 2]
    # the middle floor runs from the first to the last crossing shared with the base circle,
    # so it misses one crossing with the far circle
    assert len(C.ladders) == 9
    assert len(C.braces) == 7 and not C.has_traps()
    (tower,) = C.towers()
    assert len(tower) == 3 and C.tower_is_coherent(tower)


def test_candidates(named):
    assert len(candidate_base_points(named["hopf"])) == 4
    assert candidate_base_points(zero_crossing(1)) == [None]
    assert len(candidate_base_points(named["torus35"])) == 10


def test_appropriate_points_on_braids(named):
    H = named["hopf"]
    assert find_appropriate_point(H) == candidate_base_points(H)[0]
    D = named["torus35"]
    S = SeifertStructure(D)
    assert S.innermost(S.circle_of[find_appropriate_point(D, S)])


def test_nested_base_is_rejected(named):
    D = named["torus35"]
    S = SeifertStructure(D)
    middle = next(c for c in range(3) if S.nested(c))
    with pytest.raises(CastleError):
        build_castle(D, S.circles[middle][0], S)


def test_trap_fixture(trap_star):
    D = trap_star
    S = SeifertStructure(D)
    first = candidate_base_points(D, S)[0]
    C = build_castle(D, first, S)
    assert C.has_traps()
    trap = next(b for b in C.braces if b.is_trap)
    trapped_circles = {C.floors[f].circle for f in trap.trapped_floors}
    y = find_appropriate_point(D, S)
    assert y != first
    assert S.circle_of[y] in trapped_circles
    assert not build_castle(D, y, S).has_traps()


def test_neighbor_order_does_not_matter(trap_star, named):
    for D in (trap_star, named["torus35"], named["full_twist3"]):
        S = SeifertStructure(D)
        for x in candidate_base_points(D, S):
            a = build_castle(D, x, S, "ascending")
            b = build_castle(D, x, S, "descending")
            assert set(a.floors) == set(b.floors)


@given(closures(max_strands=5, max_len=10))
def test_castle_invariants(D):
    D = D if D.crossing_count else zero_crossing(1)
    S = SeifertStructure(D)
    for x in candidate_base_points(D, S):
        C = build_castle(D, x, S)
        assert sum(F.level == 0 for F in C.floors) == 1
        for ld in C.ladders:
            assert (C.floors[ld.upper].level - C.floors[ld.lower].level) % 2 == 1
        if not C.has_traps():
            assert all(C.tower_is_coherent(t) for t in C.towers())
            assert all(v == 1 for v in C.lower_neighbor_counts().values())
