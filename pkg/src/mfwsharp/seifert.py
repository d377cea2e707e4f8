"""Seifert circles, the Seifert graph, and which circles lie on which side.

Side-sets are computed per connected piece of the projection.  A circle's
left side is flood-filled over faces starting from the faces on the left of
its arcs, never crossing the circle itself.  Zero-crossing circles are not
placed anywhere and so never appear in a side-set.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import cached_property

from .diagram import FRAME, LinkDiagram


@dataclass(frozen=True)
class DiagramStats:
    crossing_count: int
    writhe: int
    seifert_circle_count: int
    component_count: int
    is_positive: bool
    lone_crossings: tuple[int, ...]
    has_nested: bool
    isthmuses: tuple[int, ...]


class SeifertStructure:
    """Seifert data of a diagram; circles are indexed in order of their least arc."""

    def __init__(self, D: LinkDiagram):
        self.diagram = D
        seen: set[int] = set()
        circles = []
        for a in D.arcs:
            if a in seen:
                continue
            cyc = [a]
            seen.add(a)
            b = D.seifert_next(a)
            while b != a:
                cyc.append(b)
                seen.add(b)
                b = D.seifert_next(b)
            circles.append(tuple(cyc))
        self.circles: list[tuple[int, ...]] = circles
        self.circle_of: dict[int, int] = {}
        self.position: dict[int, int] = {}
        for ci, cyc in enumerate(circles):
            for i, a in enumerate(cyc):
                self.circle_of[a] = ci
                self.position[a] = i
        # crossing -> (left circle, right circle) in the local braid frame
        self.crossing_circles: list[tuple[int, int]] = []
        for cr in D.crossings:
            f = FRAME[cr.sign]
            self.crossing_circles.append(
                (self.circle_of[cr.arcs[f["BL"]]], self.circle_of[cr.arcs[f["BR"]]])
            )

    @property
    def count(self) -> int:
        """Seifert circle count, zero-crossing circles included."""
        return len(self.circles) + self.diagram.trivial_components

    # ------------------------------------------------------------------
    # Seifert graph
    @cached_property
    def edge_multiplicity(self) -> Counter:
        return Counter(frozenset(p) for p in self.crossing_circles)

    @cached_property
    def neighbors(self) -> list[set[int]]:
        out: list[set[int]] = [set() for _ in self.circles]
        for l, r in self.crossing_circles:
            out[l].add(r)
            out[r].add(l)
        return out

    def shared_crossings(self, c1: int, c2: int) -> int:
        return self.edge_multiplicity.get(frozenset((c1, c2)), 0)

    def is_bipartite(self) -> bool:
        color: dict[int, int] = {}
        for s in range(len(self.circles)):
            if s in color:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for w in self.neighbors[v]:
                    if w not in color:
                        color[w] = 1 - color[v]
                        stack.append(w)
                    elif color[w] == color[v]:
                        return False
        return True

    def distances_from(self, src: int) -> dict[int, int]:
        dist = {src: 0}
        frontier = [src]
        while frontier:
            nxt = []
            for v in frontier:
                for w in sorted(self.neighbors[v]):
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            frontier = nxt
        return dist

    def crossing_position(self, circle: int, c: int) -> int:
        """Index on ``circle`` of the arc whose head is crossing ``c``."""
        cr = self.diagram.crossings[c]
        f = FRAME[cr.sign]
        l, r = self.crossing_circles[c]
        if circle == l:
            return self.position[cr.arcs[f["BL"]]]
        if circle == r:
            return self.position[cr.arcs[f["BR"]]]
        raise ValueError(f"crossing {c} is not on circle {circle}")

    def circle_crossings(self, circle: int) -> list[int]:
        """Crossings met along ``circle`` starting at its first arc."""
        D = self.diagram
        return [D.head(a)[0] for a in self.circles[circle]]

    # ------------------------------------------------------------------
    # sides
    @cached_property
    def piece_of_circle(self) -> list[int]:
        piece_of_crossing = {}
        for pi, piece in enumerate(self.diagram.pieces):
            for c in piece:
                piece_of_crossing[c] = pi
        return [piece_of_crossing[self.diagram.head(cyc[0])[0]] for cyc in self.circles]

    def faces_on_side(self, circle: int, left: bool = True) -> frozenset[int]:
        D = self.diagram
        own = set(self.circles[circle])
        start = {D.left_face(a) if left else D.right_face(a) for a in own}
        return flood_faces(D, start, own)

    @cached_property
    def _sides(self) -> list[tuple[frozenset[int], frozenset[int]]]:
        D = self.diagram
        out = []
        piece = self.piece_of_circle
        for ci in range(len(self.circles)):
            # sides are named so that the first strand of a braid closure is loose on the right
            lf = self.faces_on_side(ci, False)
            left, right = set(), set()
            for cj, cyc in enumerate(self.circles):
                if cj == ci or piece[cj] != piece[ci]:
                    continue
                (left if D.left_face(cyc[0]) in lf else right).add(cj)
            out.append((frozenset(left), frozenset(right)))
        return out

    def left_set(self, circle: int) -> frozenset[int]:
        return self._sides[circle][0]

    def right_set(self, circle: int) -> frozenset[int]:
        return self._sides[circle][1]

    def loose_left(self, circle: int) -> bool:
        return not self._sides[circle][0]

    def loose_right(self, circle: int) -> bool:
        return not self._sides[circle][1]

    def innermost(self, circle: int) -> bool:
        return self.loose_left(circle) or self.loose_right(circle)

    def nested(self, circle: int) -> bool:
        return not self.innermost(circle)

    def coherent(self, c1: int, c2: int) -> bool:
        """Whether two circles of one piece are homologous in the annulus between them."""
        if c1 == c2:
            return True
        if self.piece_of_circle[c1] != self.piece_of_circle[c2]:
            raise ValueError("circles lie in different pieces")
        return (c2 in self.left_set(c1)) != (c1 in self.left_set(c2))


def flood_faces(D: LinkDiagram, start, barrier) -> frozenset[int]:
    """Faces reachable from ``start`` by crossing arcs not in ``barrier``."""
    adj: dict[int, list[int]] = defaultdict(list)
    for a in D.arcs:
        if a in barrier:
            continue
        l, r = D.left_face(a), D.right_face(a)
        adj[l].append(r)
        adj[r].append(l)
    seen = set(start)
    stack = list(start)
    while stack:
        f = stack.pop()
        for g in adj[f]:
            if g not in seen:
                seen.add(g)
                stack.append(g)
    return frozenset(seen)


def seifert_structure(D: LinkDiagram) -> SeifertStructure:
    return SeifertStructure(D)


def lone_crossings(S: SeifertStructure) -> list[int]:
    return [c for c, p in enumerate(S.crossing_circles) if S.edge_multiplicity[frozenset(p)] == 1]


def isthmuses(D: LinkDiagram) -> list[int]:
    """Crossings meeting some face in two different corners."""
    out = []
    for c in range(D.crossing_count):
        faces = D.sector_faces(c)
        if len(set(faces)) < 4:
            out.append(c)
    return out


def diagram_stats(D: LinkDiagram) -> DiagramStats:
    S = SeifertStructure(D)
    return DiagramStats(
        crossing_count=D.crossing_count,
        writhe=D.writhe,
        seifert_circle_count=S.count,
        component_count=D.component_count,
        is_positive=D.is_positive,
        lone_crossings=tuple(lone_crossings(S)),
        has_nested=any(S.nested(ci) for ci in range(len(S.circles))),
        isthmuses=tuple(isthmuses(D)),
    )
