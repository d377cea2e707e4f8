"""Local rewrites of positive diagrams and the patterns they act on.

Patterns are read in the local braid frame of each crossing (strands going
up).  A double region is a crossing ``x`` directly followed by a crossing
``z`` on both strands.  An Artin site is a triple ``(x, y, z)`` reading
either s1 s2 s1 ("lower", the doubled pair sits on the left two strands) or
s2 s1 s2 ("upper").  Direction ``a`` rewrites an upper site into a lower one
and direction ``b`` does the reverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .diagram import DiagramError, LinkDiagram, insert_braid, splice


@dataclass(frozen=True)
class Shackle:
    left: int | None
    right: int | None

    def to_json(self) -> dict:
        return {"type": "shackle", "left": self.left, "right": self.right}


@dataclass(frozen=True)
class Double:
    crossing: int

    def to_json(self) -> dict:
        return {"type": "double", "crossing": self.crossing}


@dataclass(frozen=True)
class Artin:
    crossings: tuple[int, int, int]
    direction: str

    def to_json(self) -> dict:
        return {"type": "artin", "crossings": list(self.crossings), "direction": self.direction}


Move = Union[Shackle, Double, Artin]


def move_from_json(doc: dict) -> Move:
    kind = doc.get("type")
    if kind == "shackle":
        return Shackle(doc.get("left"), doc.get("right"))
    if kind == "double":
        return Double(int(doc["crossing"]))
    if kind == "artin":
        return Artin(tuple(int(c) for c in doc["crossings"]), str(doc["direction"]))
    raise DiagramError(f"unknown move type {kind!r}")


def _slot(D: LinkDiagram, c: int, name: str) -> int:
    return D.crossings[c].slot(name)


# ----------------------------------------------------------------------
# shackles and doublings


def shackle_site_ok(D: LinkDiagram, left: int | None, right: int | None) -> bool:
    """Whether two arcs can take a shackle, ``right`` lying to the right of ``left``."""
    if left is None or right is None:
        return True
    if left == right or left not in D.ends or right not in D.ends:
        return False
    cl = D.head(left)[0]
    cr = D.head(right)[0]
    piece_l = next(p for p in D.pieces if cl in p)
    if cr not in piece_l:
        return True  # separate pieces float freely
    return D.right_face(left) == D.left_face(right)


def apply_shackle(D: LinkDiagram, left: int | None, right: int | None) -> LinkDiagram:
    """Insert two stacked positive crossings between two parallel co-facial arcs."""
    if not shackle_site_ok(D, left, right):
        raise DiagramError("shackle arcs are not co-facial and coherent")
    out, _ = insert_braid(D, [left, right], [1, 1])
    return out


def apply_double(D: LinkDiagram, c: int) -> LinkDiagram:
    """Replace positive crossing ``c`` by two stacked copies."""
    if not 0 <= c < D.crossing_count:
        raise DiagramError(f"unknown crossing id {c}")
    if D.crossings[c].sign < 0:
        raise DiagramError("only positive crossings can be doubled")
    out, _ = splice(
        D, {c}, [_slot(D, c, "BL"), _slot(D, c, "BR")], [_slot(D, c, "TL"), _slot(D, c, "TR")], [1, 1]
    )
    return out


def double_regions(D: LinkDiagram) -> list[tuple[int, int]]:
    """Pairs ``(x, z)`` of same-sign crossings with ``z`` directly above ``x`` on both strands."""
    out = []
    n = D.crossing_count
    for x in range(n):
        tl, tr = _slot(D, x, "TL"), _slot(D, x, "TR")
        z, jl = D.head(tl)
        z2, _ = D.head(tr)
        if z != z2 or z == x or D.crossings[z].sign != D.crossings[x].sign:
            continue
        if _slot(D, z, "BL") == tl and _slot(D, z, "BR") == tr:
            out.append((x, z))
    return out


def undo_double_region(D: LinkDiagram, x: int, z: int, keep_one: bool):
    """Collapse a double region to one crossing (``keep_one``) or to two parallel strands.

    Returns ``(diagram, site)`` where ``site`` is the crossing index of the
    survivor, or the ``(left, right)`` labels of the parallel strands with
    None for a strand that closed into a bare circle.
    """
    sign = D.crossings[x].sign
    bottoms = [_slot(D, x, "BL"), _slot(D, x, "BR")]
    tops = [_slot(D, z, "TL"), _slot(D, z, "TR")]
    out, new_idx = splice(D, {x, z}, bottoms, tops, [sign] if keep_one else [])
    if keep_one:
        return out, new_idx[0]
    site = tuple(a if a in out.ends else None for a in bottoms)
    return out, site


# ----------------------------------------------------------------------
# Artin moves


def artin_sites(D: LinkDiagram) -> list[tuple[tuple[int, int, int], str]]:
    """All ``((x, y, z), kind)`` with kind ``"lower"`` (s1 s2 s1) or ``"upper"`` (s2 s1 s2)."""
    out = []
    n = D.crossing_count
    for x in range(n):
        sx = D.crossings[x].sign
        tl, tr = _slot(D, x, "TL"), _slot(D, x, "TR")
        # lower: x on strands 1-2, y on 2-3 fed by x.TR, z on 1-2 fed by x.TL and y.TL
        y, _ = D.head(tr)
        z, _ = D.head(tl)
        if len({x, y, z}) == 3 and D.crossings[y].sign == sx == D.crossings[z].sign:
            if _slot(D, y, "BL") == tr and _slot(D, z, "BL") == tl and _slot(D, y, "TL") == _slot(D, z, "BR"):
                out.append(((x, y, z), "lower"))
        # upper: x on strands 2-3, y on 1-2 fed by x.TL, z on 2-3 fed by x.TR and y.TR
        y, _ = D.head(tl)
        z, _ = D.head(tr)
        if len({x, y, z}) == 3 and D.crossings[y].sign == sx == D.crossings[z].sign:
            if _slot(D, y, "BR") == tl and _slot(D, z, "BR") == tr and _slot(D, y, "TR") == _slot(D, z, "BL"):
                out.append(((x, y, z), "upper"))
    return out


def artin_kind(D: LinkDiagram, triple: tuple[int, int, int]) -> str | None:
    for t, kind in artin_sites(D):
        if t == tuple(triple):
            return kind
    return None


def apply_artin_indexed(D: LinkDiagram, triple: tuple[int, int, int], direction: str | None = None):
    """Rewrite an Artin site; returns the diagram and the new triple (in word order)."""
    kind = artin_kind(D, triple)
    if kind is None:
        raise DiagramError("crossings do not form an Artin site")
    if direction is not None and direction != ("b" if kind == "lower" else "a"):
        raise DiagramError(f"site of kind {kind} does not admit direction {direction}")
    x, y, z = triple
    sign = D.crossings[x].sign
    if kind == "lower":
        bottoms = [_slot(D, x, "BL"), _slot(D, x, "BR"), _slot(D, y, "BR")]
        tops = [_slot(D, z, "TL"), _slot(D, z, "TR"), _slot(D, y, "TR")]
        word = [2 * sign, sign, 2 * sign]
    else:
        bottoms = [_slot(D, y, "BL"), _slot(D, x, "BL"), _slot(D, x, "BR")]
        tops = [_slot(D, y, "TL"), _slot(D, z, "TL"), _slot(D, z, "TR")]
        word = [sign, 2 * sign, sign]
    out, new_idx = splice(D, {x, y, z}, bottoms, tops, word)
    return out, tuple(new_idx)


def apply_artin(D: LinkDiagram, triple: tuple[int, int, int], direction: str | None = None) -> LinkDiagram:
    return apply_artin_indexed(D, triple, direction)[0]


def artin_direction(kind: str) -> str:
    return "b" if kind == "lower" else "a"


def apply_move(D: LinkDiagram, move: Move) -> LinkDiagram:
    if isinstance(move, Shackle):
        return apply_shackle(D, move.left, move.right)
    if isinstance(move, Double):
        return apply_double(D, move.crossing)
    if isinstance(move, Artin):
        return apply_artin(D, move.crossings, move.direction)
    raise DiagramError(f"not a move: {move!r}")
