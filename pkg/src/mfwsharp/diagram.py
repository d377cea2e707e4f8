"""Oriented link diagrams on the two-sphere as PD-style rotation systems.

A crossing stores its sign and the labels of its four arc-ends in
counterclockwise order, starting with the incoming under-strand.  For a
positive crossing slots 1 and 2 are outgoing; for a negative crossing slots 2
and 3 are.  Faces are derived from the cyclic slot order and never stored.

Zero-crossing circles are kept as a bare counter.  Connected pieces of a split
diagram carry no relative placement: each piece is read on its own sphere.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class DiagramError(ValueError):
    """Raised for malformed diagram input or invalid local operations."""


# Outgoing/incoming slots by sign.
OUT_SLOTS = {1: (1, 2), -1: (2, 3)}
IN_SLOTS = {1: (0, 3), -1: (0, 1)}

# Local braid frame: a crossing read as sigma_1^{sign} with both strands going
# up.  BL/BR are the incoming ends, TL/TR the outgoing ones.  Oriented
# smoothing joins BL->TL (left Seifert circle) and BR->TR (right circle).
FRAME = {
    1: {"BL": 3, "BR": 0, "TL": 2, "TR": 1},
    -1: {"BL": 0, "BR": 1, "TL": 3, "TR": 2},
}


@dataclass(frozen=True)
class Crossing:
    sign: int
    arcs: tuple[int, int, int, int]

    def slot(self, name: str) -> int:
        return self.arcs[FRAME[self.sign][name]]


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...] = ()
    trivial_components: int = 0

    # ------------------------------------------------------------------
    # incidence
    @cached_property
    def ends(self) -> dict[int, tuple[tuple[int, int], tuple[int, int]]]:
        """``arc -> ((tail crossing, slot), (head crossing, slot))``."""
        tails: dict[int, tuple[int, int]] = {}
        heads: dict[int, tuple[int, int]] = {}
        for ci, cr in enumerate(self.crossings):
            outs = OUT_SLOTS[cr.sign]
            for j, a in enumerate(cr.arcs):
                target = tails if j in outs else heads
                if a in target:
                    raise DiagramError(f"arc {a} used twice with the same orientation")
                target[a] = (ci, j)
        if set(tails) != set(heads):
            raise DiagramError("inconsistent orientations or dangling arc labels")
        return {a: (tails[a], heads[a]) for a in tails}

    @cached_property
    def arcs(self) -> list[int]:
        return sorted(self.ends)

    def tail(self, arc: int) -> tuple[int, int]:
        return self.ends[arc][0]

    def head(self, arc: int) -> tuple[int, int]:
        return self.ends[arc][1]

    def mate(self, c: int, slot: int) -> tuple[int, int]:
        """The other end of the arc sitting at ``(c, slot)``."""
        a = self.crossings[c].arcs[slot]
        t, h = self.ends[a]
        return h if t == (c, slot) else t

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    @property
    def is_positive(self) -> bool:
        return all(c.sign > 0 for c in self.crossings)

    def strand_next(self, arc: int) -> int:
        c, j = self.head(arc)
        return self.crossings[c].arcs[(j + 2) % 4]

    def seifert_next(self, arc: int) -> int:
        c, j = self.head(arc)
        cr = self.crossings[c]
        outs = OUT_SLOTS[cr.sign]
        k = (j + 1) % 4 if (j + 1) % 4 in outs else (j - 1) % 4
        return cr.arcs[k]

    # ------------------------------------------------------------------
    # components
    @cached_property
    def components(self) -> list[tuple[int, ...]]:
        """Link components with crossings, each as its arc cycle from its least arc."""
        seen: set[int] = set()
        out = []
        for a in self.arcs:
            if a in seen:
                continue
            cyc = [a]
            seen.add(a)
            b = self.strand_next(a)
            while b != a:
                cyc.append(b)
                seen.add(b)
                b = self.strand_next(b)
            out.append(tuple(cyc))
        return out

    @cached_property
    def arc_component(self) -> dict[int, int]:
        return {a: i for i, comp in enumerate(self.components) for a in comp}

    @property
    def component_count(self) -> int:
        return len(self.components) + self.trivial_components

    def strand_components(self, c: int) -> tuple[int, int]:
        """Component indices of the under- and over-strand at crossing ``c``."""
        cr = self.crossings[c]
        return self.arc_component[cr.arcs[0]], self.arc_component[cr.arcs[1]]

    # ------------------------------------------------------------------
    # faces and pieces
    @cached_property
    def _face_data(self) -> tuple[dict[tuple[int, int], int], int]:
        # a dart is an arrival at (crossing, slot); the face on its left is
        # left by the clockwise-next slot
        face_of: dict[tuple[int, int], int] = {}
        nf = 0
        for ci in range(len(self.crossings)):
            for j in range(4):
                d = (ci, j)
                if d in face_of:
                    continue
                while d not in face_of:
                    face_of[d] = nf
                    v, k = d
                    d = self.mate(v, (k - 1) % 4)
                nf += 1
        return face_of, nf

    @property
    def face_of(self) -> dict[tuple[int, int], int]:
        return self._face_data[0]

    @property
    def face_count(self) -> int:
        return self._face_data[1]

    def left_face(self, arc: int) -> int:
        return self.face_of[self.head(arc)]

    def right_face(self, arc: int) -> int:
        return self.face_of[self.tail(arc)]

    def sector_faces(self, c: int) -> tuple[int, int, int, int]:
        """Face of the sector between slot ``j`` and slot ``j-1``, for j = 0..3."""
        return tuple(self.face_of[(c, j)] for j in range(4))

    @cached_property
    def pieces(self) -> list[tuple[int, ...]]:
        """Connected pieces of the projection, as sorted crossing-index tuples."""
        n = len(self.crossings)
        seen = [False] * n
        out = []
        for s in range(n):
            if seen[s]:
                continue
            stack = [s]
            seen[s] = True
            group = []
            while stack:
                c = stack.pop()
                group.append(c)
                for j in range(4):
                    v, _ = self.mate(c, j)
                    if not seen[v]:
                        seen[v] = True
                        stack.append(v)
            out.append(tuple(sorted(group)))
        out.sort()
        return out

    def piece_diagrams(self) -> list[LinkDiagram]:
        return [LinkDiagram(tuple(self.crossings[c] for c in piece), 0) for piece in self.pieces]

    def euler_characteristics(self) -> list[int]:
        """V - E + F per connected piece."""
        face_of, _ = self._face_data
        out = []
        for piece in self.pieces:
            faces = {face_of[(c, j)] for c in piece for j in range(4)}
            v = len(piece)
            e = 2 * v
            out.append(v - e + len(faces))
        return out

    def validate(self) -> LinkDiagram:
        if self.trivial_components < 0:
            raise DiagramError("trivial_components must be non-negative")
        for cr in self.crossings:
            if cr.sign not in (1, -1):
                raise DiagramError(f"bad crossing sign {cr.sign}")
            if len(cr.arcs) != 4:
                raise DiagramError("a crossing needs exactly four arc labels")
        self.ends  # noqa: B018 - raises on orientation problems
        if any(chi != 2 for chi in self.euler_characteristics()):
            raise DiagramError("non-spherical embedding")
        return self

    # ------------------------------------------------------------------
    def to_pd(self) -> dict:
        return {
            "crossings": [{"sign": c.sign, "arcs": list(c.arcs)} for c in self.crossings],
            "trivial_components": self.trivial_components,
        }

    def __repr__(self) -> str:
        return f"LinkDiagram(Cr={self.crossing_count}, w={self.writhe}, trivial={self.trivial_components})"


# ----------------------------------------------------------------------
# reconnection core


def _rebuild(
    crossings: Sequence[tuple[int, Sequence[int]]],
    joins: dict[int, int],
    trivial: int,
) -> LinkDiagram:
    """Assemble a diagram from crossings plus pass-through junctions.

    ``joins`` maps an arc label whose head was at a removed junction to the
    label that continues the strand.  Each strand chain is renamed to the
    label of its first arc; chains closing up without a crossing become
    trivial components.
    """
    incoming: set[int] = set()
    outgoing: list[int] = []
    for sign, arcs in crossings:
        outs = OUT_SLOTS[sign]
        for j, a in enumerate(arcs):
            if j in outs:
                outgoing.append(a)
            else:
                incoming.add(a)
    rename: dict[int, int] = {}
    visited: set[int] = set()
    for a in outgoing:
        b = a
        visited.add(b)
        while b not in incoming:
            try:
                b = joins[b]
            except KeyError:
                raise DiagramError(f"arc {b} has no head") from None
            if b in visited:
                raise DiagramError("strand chain revisits an arc")
            visited.add(b)
        rename[b] = a
    loops = 0
    for a in joins:
        if a in visited:
            continue
        b = a
        while b not in visited:
            visited.add(b)
            b = joins[b]
        loops += 1
    new = []
    for sign, arcs in crossings:
        outs = OUT_SLOTS[sign]
        new.append(Crossing(sign, tuple(a if j in outs else rename[a] for j, a in enumerate(arcs))))
    return LinkDiagram(tuple(new), trivial + loops)


def _smoothing_joins(cr: Crossing) -> dict[int, int]:
    a = cr.arcs
    f = FRAME[cr.sign]
    return {a[f["BL"]]: a[f["TL"]], a[f["BR"]]: a[f["TR"]]}


def _check_crossing(D: LinkDiagram, c: int) -> None:
    if not 0 <= c < len(D.crossings):
        raise DiagramError(f"unknown crossing id {c}")


def flip_crossing(D: LinkDiagram, c: int) -> LinkDiagram:
    """Switch over/under at ``c``; arc labels are unchanged."""
    _check_crossing(D, c)
    cr = D.crossings[c]
    a = cr.arcs
    if cr.sign > 0:
        new = Crossing(-1, (a[3], a[0], a[1], a[2]))
    else:
        new = Crossing(1, (a[1], a[2], a[3], a[0]))
    cs = list(D.crossings)
    cs[c] = new
    return LinkDiagram(tuple(cs), D.trivial_components)


def smooth_crossing(D: LinkDiagram, c: int) -> LinkDiagram:
    """Oriented smoothing at ``c``.

    The merged arc keeps the label of its incoming half; crossings after ``c``
    shift down by one index.
    """
    _check_crossing(D, c)
    kept = [(cr.sign, cr.arcs) for i, cr in enumerate(D.crossings) if i != c]
    return _rebuild(kept, _smoothing_joins(D.crossings[c]), D.trivial_components)


def mirror(D: LinkDiagram) -> LinkDiagram:
    out = D
    for c in range(len(D.crossings)):
        out = flip_crossing(out, c)
    return out


def remove_trivial_components(D: LinkDiagram) -> LinkDiagram:
    return LinkDiagram(D.crossings, 0)


def delete_components(D: LinkDiagram, comps: Iterable[int]) -> LinkDiagram:
    """Erase the given components (indices into ``D.components``).

    Surviving strands pass straight through the erased crossings and keep the
    label of their first arc.  Only trivial circles created by the erasure are
    added to the counter; the input counter is dropped.
    """
    dead = set(comps)
    comp_of = D.arc_component
    kept = []
    joins: dict[int, int] = {}
    for cr in D.crossings:
        a = cr.arcs
        under_dead = comp_of[a[0]] in dead
        over_dead = comp_of[a[1]] in dead
        if not under_dead and not over_dead:
            kept.append((cr.sign, a))
            continue
        if not under_dead:
            joins[a[0]] = a[2]
        if not over_dead:
            i, o = (a[3], a[1]) if cr.sign > 0 else (a[1], a[3])
            joins[i] = o
    return _rebuild(kept, joins, 0)


def _braid_region(
    crossings: list[tuple[int, Sequence[int]]],
    trivial: int,
    bottoms: Sequence[int],
    tops: Sequence[int],
    word: Sequence[int],
    fresh: int,
) -> tuple[LinkDiagram, list[int]]:
    """Append the braid ``word`` running from ``bottoms`` up to ``tops``."""
    kept = list(crossings)
    current = list(bottoms)
    n = len(bottoms)
    new_idx = []
    for g in word:
        i = abs(g) - 1
        if g == 0 or not 0 <= i < n - 1:
            raise DiagramError(f"generator {g} out of range for {n} strands")
        left, right = current[i], current[i + 1]
        tl, tr = fresh, fresh + 1
        fresh += 2
        arcs = (right, tr, tl, left) if g > 0 else (left, right, tr, tl)
        new_idx.append(len(kept))
        kept.append((1 if g > 0 else -1, arcs))
        current[i], current[i + 1] = tl, tr
    joins = {current[p]: tops[p] for p in range(n)}
    out = _rebuild(kept, joins, trivial)
    # strands leaving the region keep the label of the arc they replace
    rename = {}
    for p in range(n):
        if current[p] not in bottoms and current[p] in out.ends and tops[p] not in out.ends:
            rename[current[p]] = tops[p]
    if rename:
        out = relabel(out, rename)
    return out, new_idx


def relabel(D: LinkDiagram, rename: dict[int, int]) -> LinkDiagram:
    return LinkDiagram(
        tuple(Crossing(c.sign, tuple(rename.get(a, a) for a in c.arcs)) for c in D.crossings),
        D.trivial_components,
    )


def splice(
    D: LinkDiagram,
    removed: Iterable[int],
    bottoms: Sequence[int],
    tops: Sequence[int],
    word: Sequence[int],
) -> tuple[LinkDiagram, list[int]]:
    """Replace a local braid region by the braid ``word``.

    ``bottoms[p]`` is the arc entering the region at position ``p`` (left to
    right, strands pointing up) and ``tops[p]`` the arc leaving it; the
    crossings in ``removed`` are exactly those inside the region.  Bottom
    labels survive and top labels survive whenever their arc does.  Returns
    the new diagram and the indices of the inserted crossings in word order;
    surviving old crossings keep their relative order.
    """
    removed = set(removed)
    if len(tops) != len(bottoms):
        raise DiagramError("bottoms and tops differ in length")
    kept = [(cr.sign, cr.arcs) for i, cr in enumerate(D.crossings) if i not in removed]
    fresh = max(D.ends, default=0) + 1
    return _braid_region(kept, D.trivial_components, bottoms, tops, word, fresh)


def insert_braid(
    D: LinkDiagram, arcs: Sequence[int | None], word: Sequence[int]
) -> tuple[LinkDiagram, list[int]]:
    """Insert ``word`` across parallel arcs listed left to right.

    Each arc is cut just before its head.  ``None`` stands for a fresh
    zero-crossing circle taken from the trivial counter.  Returns the new
    diagram and the inserted crossing indices.
    """
    need = sum(1 for a in arcs if a is None)
    if need > D.trivial_components:
        raise DiagramError("not enough trivial circles for the insertion")
    named = [a for a in arcs if a is not None]
    if len(set(named)) != len(named):
        raise DiagramError("an arc may appear only once in an insertion")
    fresh = max(D.ends, default=0) + 1
    rows = [[cr.sign, list(cr.arcs)] for cr in D.crossings]
    bottoms, tops = [], []
    for a in arcs:
        if a is None:
            # a new circle leaves the region at the top and comes straight back
            bottoms.append(fresh)
            tops.append(fresh)
        else:
            if a not in D.ends:
                raise DiagramError(f"unknown arc {a}")
            h, j = D.head(a)
            rows[h][1][j] = fresh
            bottoms.append(a)
            tops.append(fresh)
        fresh += 1
    kept = [(sg, tuple(r)) for sg, r in rows]
    return _braid_region(kept, D.trivial_components - need, bottoms, tops, word, fresh)


# ----------------------------------------------------------------------
# construction and I/O

_BRAID_RE = re.compile(r"^\s*(\d+)\s*:\s*((?:[+-]?\d+[\s,]*)*)$")


def braid_closure(n: int, word: Sequence[int]) -> LinkDiagram:
    """Closure of a braid on ``n`` strands; closing arcs run around the right."""
    if n < 1:
        raise DiagramError("a braid needs at least one strand")
    for g in word:
        if g == 0 or abs(g) > n - 1:
            raise DiagramError(f"generator index {g} out of range for {n} strands")
    bottoms = list(range(1, n + 1))
    out, _ = _braid_region([], 0, bottoms, bottoms, word, n + 1)
    return compact(out).validate()


def parse_braid(text: str) -> LinkDiagram:
    """Parse ``"n: i1 i2 ..."``; negative indices are inverse generators."""
    m = _BRAID_RE.match(text)
    if not m:
        raise DiagramError(f"malformed braid word {text!r}")
    n = int(m.group(1))
    word = [int(t) for t in re.split(r"[\s,]+", m.group(2).strip()) if t]
    return braid_closure(n, word)


def parse_braid_word(text: str) -> tuple[int, list[int]]:
    m = _BRAID_RE.match(text)
    if not m:
        raise DiagramError(f"malformed braid word {text!r}")
    return int(m.group(1)), [int(t) for t in re.split(r"[\s,]+", m.group(2).strip()) if t]


def parse_pd(doc: dict | str) -> LinkDiagram:
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise DiagramError(f"malformed PD document: {exc}") from None
    try:
        crossings = tuple(
            Crossing(int(c["sign"]), tuple(int(a) for a in c["arcs"])) for c in doc.get("crossings", [])
        )
        trivial = int(doc.get("trivial_components", 0))
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise DiagramError(f"malformed PD document: {exc}") from None
    for c in crossings:
        if len(c.arcs) != 4:
            raise DiagramError("a crossing needs exactly four arc labels")
    D = LinkDiagram(crossings, trivial)
    if D.component_count == 0:
        raise DiagramError("empty diagram")
    return D.validate()


def serialize_pd(D: LinkDiagram) -> dict:
    return compact(D).to_pd()


def compact(D: LinkDiagram) -> LinkDiagram:
    """Relabel arcs 1..E in order of first appearance."""
    rename: dict[int, int] = {}
    for cr in D.crossings:
        for a in cr.arcs:
            if a not in rename:
                rename[a] = len(rename) + 1
    return LinkDiagram(
        tuple(Crossing(cr.sign, tuple(rename[a] for a in cr.arcs)) for cr in D.crossings),
        D.trivial_components,
    )


def zero_crossing(n: int) -> LinkDiagram:
    return LinkDiagram((), n)


def disjoint_union(D1: LinkDiagram, D2: LinkDiagram) -> LinkDiagram:
    shift = max(D1.ends, default=0)
    cs = D1.crossings + tuple(Crossing(c.sign, tuple(a + shift for a in c.arcs)) for c in D2.crossings)
    return LinkDiagram(cs, D1.trivial_components + D2.trivial_components)


# ----------------------------------------------------------------------
# canonical labeling


@dataclass(frozen=True)
class Canonical:
    key: tuple
    diagram: LinkDiagram
    arc_map: dict[int, int] = field(compare=False)
    crossing_map: dict[int, int] = field(compare=False)


def _bfs_rows(D: LinkDiagram, start: int, arc_map: dict[int, int], cross_map: dict[int, int]):
    """Yield the encoding rows of the BFS from ``start``, filling the maps as it goes."""
    arc_map[start] = 0
    queue = deque([start])
    ends = D.ends
    crossings = D.crossings
    while queue:
        a = queue.popleft()
        t, h = ends[a]
        for c, _ in (h, t):
            if c in cross_map:
                continue
            cross_map[c] = len(cross_map)
            arcs = crossings[c].arcs
            for x in arcs:
                if x not in arc_map:
                    arc_map[x] = len(arc_map)
                    queue.append(x)
            yield (crossings[c].sign,) + tuple(arc_map[x] for x in arcs)


def _bfs_encode(D: LinkDiagram, start: int):
    arc_map: dict[int, int] = {}
    cross_map: dict[int, int] = {}
    enc = tuple(_bfs_rows(D, start, arc_map, cross_map))
    return enc, arc_map, cross_map


def _least_encoding(D: LinkDiagram, starts: Sequence[int], size: int):
    """Least BFS encoding over ``starts``, advancing all candidates row by row."""
    alive = []
    for s in starts:
        am: dict[int, int] = {}
        cm: dict[int, int] = {}
        alive.append((s, _bfs_rows(D, s, am, cm), am, cm))
    rows = []
    for _ in range(size):
        heads = [(next(g), (s, g, am, cm)) for s, g, am, cm in alive]
        low = min(r for r, _ in heads)
        rows.append(low)
        alive = [cand for r, cand in heads if r == low]
    _, _, am, cm = alive[0]
    return tuple(rows), am, cm


def encode_from(D: LinkDiagram, start: int, marks: Sequence[int] = ()) -> tuple:
    """Labeling-invariant encoding of a connected diagram rooted at arc ``start``."""
    enc, arc_map, _ = _bfs_encode(D, start)
    return enc, tuple(arc_map[m] for m in marks)


def canonical(D: LinkDiagram) -> Canonical:
    """Canonical relabeling: per piece, the least BFS encoding over all start arcs."""
    best_per_piece = []
    for piece in D.pieces:
        starts = sorted({a for c in piece for a in D.crossings[c].arcs})
        best_per_piece.append(_least_encoding(D, starts, len(piece)))
    best_per_piece.sort(key=lambda t: (len(t[0]), t[0]))
    arc_map: dict[int, int] = {}
    cross_map: dict[int, int] = {}
    new_crossings = []
    arc_off = 0
    for enc, am, cm in best_per_piece:
        for a, k in am.items():
            arc_map[a] = k + arc_off
        for c, k in cm.items():
            cross_map[c] = k + len(new_crossings)
        for row in enc:
            new_crossings.append(Crossing(row[0], tuple(x + arc_off for x in row[1:])))
        arc_off += len(am)
    key = (tuple(t[0] for t in best_per_piece), D.trivial_components)
    return Canonical(key, LinkDiagram(tuple(new_crossings), D.trivial_components), arc_map, cross_map)


def canonical_key(D: LinkDiagram) -> tuple:
    return canonical(D).key


def diagrams_isomorphic(D1: LinkDiagram, D2: LinkDiagram) -> bool:
    """Orientation-preserving combinatorial-map isomorphism (signs included)."""
    if (
        D1.crossing_count != D2.crossing_count
        or D1.trivial_components != D2.trivial_components
        or sorted(c.sign for c in D1.crossings) != sorted(c.sign for c in D2.crossings)
    ):
        return False
    return canonical_key(D1) == canonical_key(D2)
