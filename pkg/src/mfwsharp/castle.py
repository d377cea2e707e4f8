"""Castles grown from a base point: floors, ladders, braces and traps.

A point is addressed by an arc label and sits just after the crossing at the
tail of that arc.  ``None`` addresses a point on a zero-crossing circle.

A floor is a run of consecutive arcs on one Seifert circle.  It is stored as
``(circle, start, length, level)``: the arc at ``start`` carries the floor's
first point and the floor covers the ``length`` crossings at the heads of
arcs ``start, start+1, ...`` along the circle.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from .diagram import LinkDiagram
from .seifert import SeifertStructure, flood_faces


class CastleError(ValueError):
    pass


class LemmaViolation(RuntimeError):
    """An existence guarantee failed; this signals a bug, not bad input."""


@dataclass(frozen=True)
class Floor:
    circle: int | None
    start: int
    length: int
    level: int

    def offset(self, S: SeifertStructure, c: int) -> int | None:
        """Offset of crossing ``c`` along this floor, or None if not covered."""
        m = len(S.circles[self.circle])
        off = (S.crossing_position(self.circle, c) - self.start) % m
        return off if off < self.length else None

    def arcs(self, S: SeifertStructure) -> list[int]:
        cyc = S.circles[self.circle]
        m = len(cyc)
        n = min(self.length + 1, m)
        return [cyc[(self.start + i) % m] for i in range(n)]


@dataclass(frozen=True)
class Ladder:
    crossing: int
    lower: int  # floor index with the smaller level
    upper: int


@dataclass(frozen=True)
class Brace:
    lower: int
    upper: int
    s1: int
    s2: int
    lower_segment: tuple[int, ...]
    upper_segment: tuple[int, ...]
    inside: frozenset[int] = field(repr=False)
    trapped_floors: tuple[int, ...]

    @property
    def is_trap(self) -> bool:
        return bool(self.trapped_floors)


@dataclass
class Castle:
    diagram: LinkDiagram
    seifert: SeifertStructure
    base: int | None
    floors: list[Floor]
    ladders: list[Ladder]

    # ------------------------------------------------------------------
    @cached_property
    def _floor_pairs(self) -> dict[tuple[int, int], list[int]]:
        pairs: dict[tuple[int, int], list[int]] = defaultdict(list)
        for ld in self.ladders:
            pairs[(ld.lower, ld.upper)].append(ld.crossing)
        return pairs

    @cached_property
    def piece_faces(self) -> frozenset[int]:
        D = self.diagram
        if self.base is None:
            return frozenset()
        c0 = D.head(self.base)[0]
        piece = next(p for p in D.pieces if c0 in p)
        return frozenset(D.face_of[(c, j)] for c in piece for j in range(4))

    def common_ladders(self, lower: int, upper: int) -> list[int]:
        """Ladders shared by two floors, ordered along the lower one."""
        S = self.seifert
        F = self.floors[lower]
        cs = self._floor_pairs.get((lower, upper), [])
        return sorted(set(cs), key=lambda c: F.offset(S, c))

    def _segment(self, fi: int, c1: int, c2: int) -> tuple[int, ...]:
        S = self.seifert
        F = self.floors[fi]
        o1, o2 = sorted((F.offset(S, c1), F.offset(S, c2)))
        cyc = S.circles[F.circle]
        m = len(cyc)
        return tuple(cyc[(F.start + o) % m] for o in range(o1 + 1, o2 + 1))

    @cached_property
    def braces(self) -> list[Brace]:
        D = self.diagram
        S = self.seifert
        out = []
        if self.base is None:
            return out
        floor_arcs = [set(F.arcs(S)) for F in self.floors]
        for (lo, up) in sorted(self._floor_pairs):
            order = self.common_ladders(lo, up)
            for s1, s2 in zip(order, order[1:]):
                seg_lo = self._segment(lo, s1, s2)
                seg_up = self._segment(up, s1, s2)
                barrier = set(seg_lo) | set(seg_up)
                if self.base in barrier:
                    raise LemmaViolation("base point lies on a brace")
                outside = flood_faces(D, {D.left_face(self.base)}, barrier)
                inside = self.piece_faces - outside
                trapped = tuple(
                    fi
                    for fi, arcs in enumerate(floor_arcs)
                    if any(a not in barrier and D.left_face(a) in inside for a in arcs)
                )
                out.append(Brace(lo, up, s1, s2, seg_lo, seg_up, frozenset(inside), trapped))
        return out

    def has_traps(self) -> bool:
        return any(b.is_trap for b in self.braces)

    # ------------------------------------------------------------------
    @cached_property
    def floor_neighbors(self) -> dict[int, set[int]]:
        nb: dict[int, set[int]] = defaultdict(set)
        for ld in self.ladders:
            nb[ld.lower].add(ld.upper)
            nb[ld.upper].add(ld.lower)
        return nb

    def towers(self) -> list[tuple[int, ...]]:
        """Floor sequences of levels 0, 1, ..., m ending at a floor with no higher neighbour."""
        if not self.floors:
            return []
        out = []

        def walk(path):
            k = len(path)
            ups = sorted(f for f in self.floor_neighbors[path[-1]] if self.floors[f].level == k)
            if not ups:
                out.append(tuple(path))
                return
            for f in ups:
                walk(path + [f])

        walk([0])
        return out

    def tower_is_coherent(self, tower: tuple[int, ...]) -> bool:
        S = self.seifert
        circles = [self.floors[f].circle for f in tower]
        if None in circles:
            return True
        return all(S.coherent(a, b) for i, a in enumerate(circles) for b in circles[i + 1 :])

    def lower_neighbor_counts(self) -> dict[int, int]:
        """For each floor of level >= 1, how many floors one level down it shares ladders with."""
        out = {}
        for fi, F in enumerate(self.floors):
            if F.level == 0:
                continue
            out[fi] = sum(1 for g in self.floor_neighbors[fi] if self.floors[g].level == F.level - 1)
        return out

    def to_json(self) -> dict:
        return {
            "base_arc": self.base,
            "floors": [
                {"circle": F.circle, "start": F.start, "length": F.length, "level": F.level}
                for F in self.floors
            ],
            "ladders": [{"crossing": l.crossing, "floors": [l.lower, l.upper]} for l in self.ladders],
            "braces": [
                {
                    "floors": [b.lower, b.upper],
                    "ladders": [b.s1, b.s2],
                    "trap": b.is_trap,
                    "trapped_floors": list(b.trapped_floors),
                }
                for b in self.braces
            ],
            "has_traps": self.has_traps(),
            "towers": [list(t) for t in self.towers()],
        }

    def to_dot(self) -> str:
        lines = ["graph castle {"]
        for fi, F in enumerate(self.floors):
            lines.append(f'  f{fi} [label="C{F.circle} L{F.level}"];')
        for (lo, up), cs in sorted(self._floor_pairs.items()):
            lines.append(f'  f{lo} -- f{up} [label="{len(cs)}"];')
        lines.append("}")
        return "\n".join(lines)


def build_castle(
    D: LinkDiagram,
    base: int | None,
    S: SeifertStructure | None = None,
    neighbor_order: str = "ascending",
) -> Castle:
    """Grow the castle of ``D`` from the point at the tail of arc ``base``.

    ``neighbor_order`` permutes the order in which neighbouring circles are
    visited; the resulting floor set should not depend on it.
    """
    S = S or SeifertStructure(D)
    if base is None or D.crossing_count == 0:
        return Castle(D, S, None, [Floor(None, 0, 0, 0)], [])
    if base not in S.circle_of:
        raise CastleError(f"unknown arc {base}")
    C = S.circle_of[base]
    if not S.innermost(C):
        raise CastleError("base point is not innermost")
    floors = [Floor(C, S.position[base], len(S.circles[C]), 0)]
    lowest = {C: 0}
    current = [0]
    k = 1
    while current:
        new: list[Floor] = []
        for fi in current:
            F = floors[fi]
            cyc = S.circles[F.circle]
            m = len(cyc)
            mutual: dict[int, list[int]] = defaultdict(list)
            for off in range(F.length):
                c = D.head(cyc[(F.start + off) % m])[0]
                l, r = S.crossing_circles[c]
                mutual[r if l == F.circle else l].append(c)
            others = sorted(mutual, reverse=(neighbor_order == "descending"))
            for other in others:
                if lowest.get(other, k) < k:
                    continue
                cs = mutual[other]
                st = S.crossing_position(other, cs[0])
                en = S.crossing_position(other, cs[-1])
                mo = len(S.circles[other])
                fl = Floor(other, st, (en - st) % mo + 1, k)
                if fl not in floors and fl not in new:
                    new.append(fl)
        new.sort(key=lambda f: (f.circle, f.start, f.length))
        current = []
        for fl in new:
            lowest.setdefault(fl.circle, k)
            current.append(len(floors))
            floors.append(fl)
        k += 1
    by_circle: dict[int, list[int]] = defaultdict(list)
    for fi, F in enumerate(floors):
        by_circle[F.circle].append(fi)
    ladders = []
    for c, (l, r) in enumerate(S.crossing_circles):
        for fa in by_circle.get(l, []):
            if floors[fa].offset(S, c) is None:
                continue
            for fb in by_circle.get(r, []):
                if floors[fb].offset(S, c) is None:
                    continue
                lo, up = (fa, fb) if (floors[fa].level, fa) < (floors[fb].level, fb) else (fb, fa)
                ladders.append(Ladder(c, lo, up))
    return Castle(D, S, base, floors, ladders)


def candidate_base_points(D: LinkDiagram, S: SeifertStructure | None = None) -> list[int | None]:
    """One point per arc of every innermost circle, then one per zero-crossing circle."""
    if D.component_count == 0:
        raise CastleError("empty diagram")
    S = S or SeifertStructure(D)
    out: list[int | None] = []
    for ci, cyc in enumerate(S.circles):
        if S.innermost(ci):
            out.extend(cyc)
    out.extend([None] * D.trivial_components)
    return out


def iter_appropriate_points(D: LinkDiagram, S: SeifertStructure | None = None) -> Iterator[int | None]:
    S = S or SeifertStructure(D)
    for x in candidate_base_points(D, S):
        if not build_castle(D, x, S).has_traps():
            yield x


def _circles_inside(D: LinkDiagram, S: SeifertStructure, brace: Brace, floors: list[Floor]) -> list[int]:
    skip = {floors[brace.lower].circle, floors[brace.upper].circle}
    return [
        ci
        for ci, cyc in enumerate(S.circles)
        if ci not in skip and S.innermost(ci) and all(D.left_face(a) in brace.inside for a in cyc)
    ]


def find_appropriate_point(D: LinkDiagram, S: SeifertStructure | None = None) -> int | None:
    """An innermost point whose castle has no traps.

    Starts from the first candidate.  When its castle has a trap, the search
    moves to innermost circles inside the trap, which shrinks the part of the
    diagram outside the trap; a plain scan of all candidates is the fallback.
    """
    S = S or SeifertStructure(D)
    cands = candidate_base_points(D, S)
    x = cands[0]
    seen = set()
    while x not in seen:
        seen.add(x)
        castle = build_castle(D, x, S)
        trap = next((b for b in castle.braces if b.is_trap), None)
        if trap is None:
            return x
        inner = [a for ci in _circles_inside(D, S, trap, castle.floors) for a in S.circles[ci]]
        if not inner:
            break
        free = next((a for a in inner if not build_castle(D, a, S).has_traps()), None)
        if free is not None:
            return free
        x = inner[0]
    for x in iter_appropriate_points(D, S):
        return x
    raise LemmaViolation("no appropriate point found")
