"""HOMFLY-PT evaluation by two independent skein resolutions.

``homfly_oracle`` resolves the first non-descending crossing from fixed base
points and memoises on canonical forms.  ``iter_coherent_leaves`` streams the
leaves of a coherent resolution tree grown from appropriate points, and
``homfly_coherent`` sums their contributions.

Skein convention: a^-1 P(D+) - a P(D-) = z P(D0), P(unknot) = 1.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator

from .castle import find_appropriate_point
from .diagram import (
    LinkDiagram,
    FRAME,
    canonical,
    delete_components,
    flip_crossing,
    remove_trivial_components,
    smooth_crossing,
)
from .laurent import LaurentPoly2, SPLIT_FACTOR, unlink
from .seifert import SeifertStructure

CACHE_ENV = "MFWSHARP_CACHE_CAP"


def _cache_cap() -> int:
    try:
        return int(os.environ.get(CACHE_ENV, "200000"))
    except ValueError:
        return 200000


_A2 = LaurentPoly2.monomial(2, 0)
_AM2 = LaurentPoly2.monomial(-2, 0)
_AZ = LaurentPoly2.monomial(1, 1)
_MAM1Z = LaurentPoly2.monomial(-1, 1, -1)


# ----------------------------------------------------------------------
# oracle


def first_ascending_crossing(D: LinkDiagram, bases) -> int | None:
    """First crossing met first on its under-strand when travelling from ``bases``."""
    seen: set[int] = set()
    for b in bases:
        a = b
        while True:
            c, j = D.head(a)
            if c not in seen:
                seen.add(c)
                if j == 0:
                    return c
            a = D.crossings[c].arcs[(j + 2) % 4]
            if a == b:
                break
    return None


class HomflyOracle:
    """Memoised descending-resolution evaluator."""

    def __init__(self, cache_cap: int | None = None):
        self.cache_cap = _cache_cap() if cache_cap is None else cache_cap
        self.memo: dict[tuple, LaurentPoly2] = {}
        self.hits = 0
        self.misses = 0

    def __call__(self, D: LinkDiagram) -> LaurentPoly2:
        pieces = D.piece_diagrams()
        n_split = len(pieces) + D.trivial_components
        if n_split == 0:
            raise ValueError("empty diagram has no HOMFLY-PT polynomial")
        out = SPLIT_FACTOR ** (n_split - 1)
        for p in pieces:
            out = out * self._connected(p)
        return out

    def _connected(self, D: LinkDiagram) -> LaurentPoly2:
        can = canonical(D)
        hit = self.memo.get(can.key)
        if hit is not None:
            self.hits += 1
            return hit
        self.misses += 1
        C = can.diagram
        val = self._based(C, [comp[0] for comp in C.components])
        if len(self.memo) >= self.cache_cap:
            self.memo.clear()
        self.memo[can.key] = val
        return val

    def _based(self, D: LinkDiagram, bases) -> LaurentPoly2:
        c = first_ascending_crossing(D, bases)
        if c is None:
            return unlink(D.component_count)
        sign = D.crossings[c].sign
        flipped = self._based(flip_crossing(D, c), bases)
        smoothed = self(smooth_crossing(D, c))
        if sign > 0:
            return _A2 * flipped + _AZ * smoothed
        return _AM2 * flipped + _MAM1Z * smoothed


_DEFAULT_ORACLE: HomflyOracle | None = None


def default_oracle() -> HomflyOracle:
    global _DEFAULT_ORACLE
    if _DEFAULT_ORACLE is None:
        _DEFAULT_ORACLE = HomflyOracle()
    return _DEFAULT_ORACLE


def homfly_oracle(D: LinkDiagram) -> LaurentPoly2:
    return default_oracle()(D)


# ----------------------------------------------------------------------
# coherent resolution trees


@dataclass(frozen=True)
class Leaf:
    diagram: LinkDiagram
    smoothed: int  # t
    smoothed_negative: int  # t'
    weight: LaurentPoly2  # product of branch weights along the path

    @property
    def components(self) -> int:
        return self.diagram.component_count

    @property
    def writhe(self) -> int:
        return self.diagram.writhe

    def has_simple_components(self) -> bool:
        """True when no component crosses itself."""
        D = self.diagram
        return all(u != o for u, o in (D.strand_components(c) for c in range(D.crossing_count)))


def leaf_value(leaf: Leaf) -> LaurentPoly2:
    return unlink(leaf.components)


def leaf_term(root: LinkDiagram, leaf: Leaf) -> LaurentPoly2:
    """Signed monomial weight times the unlink value of the leaf."""
    sign = -1 if leaf.smoothed_negative % 2 else 1
    mono = LaurentPoly2.monomial(root.writhe - leaf.writhe, leaf.smoothed, sign)
    if mono != leaf.weight:
        raise AssertionError("branch weights disagree with the writhe bookkeeping")
    return mono * leaf_value(leaf)


def leaf_highest_a_test(root: LinkDiagram, leaf: Leaf, S: SeifertStructure | None = None) -> bool:
    """Whether the leaf reaches a-degree w(D) + s(D) - 1."""
    s = (S or SeifertStructure(root)).count
    return root.writhe - leaf.writhe + leaf.components - 1 == root.writhe + s - 1


@dataclass(frozen=True)
class PathResult:
    closed: bool
    violation: int | None
    length: int


def maximal_coherent_path(
    U: LinkDiagram, base: int, descending: bool, visited: frozenset[int] = frozenset()
) -> PathResult:
    """Travel from ``base`` until it returns or meets a crossing breaking the rule.

    Crossings touching a component in ``visited`` are skipped, as are second
    passes through a crossing.
    """
    comp_of = U.arc_component
    seen: set[int] = set()
    a = base
    steps = 0
    while True:
        c, j = U.head(a)
        cr = U.crossings[c]
        if c not in seen and comp_of[cr.arcs[0]] not in visited and comp_of[cr.arcs[1]] not in visited:
            seen.add(c)
            if descending == (j == 0):
                return PathResult(False, c, steps)
        steps += 1
        a = cr.arcs[(j + 2) % 4]
        if a == base:
            return PathResult(True, None, steps)


def _smoothed_label(U: LinkDiagram, c: int, arc: int, smoothed: LinkDiagram) -> int | None:
    """Label of ``arc`` after smoothing ``c``; None if it closed into a bare circle."""
    cr = U.crossings[c]
    f = FRAME[cr.sign]
    back = {cr.arcs[f["TL"]]: cr.arcs[f["BL"]], cr.arcs[f["TR"]]: cr.arcs[f["BR"]]}
    seen = set()
    while arc not in smoothed.ends:
        if arc in seen or arc not in back:
            return None
        seen.add(arc)
        arc = back[arc]
    return arc


class PointChooser:
    """Appropriate point plus travel rule for a diagram, cached on canonical form."""

    def __init__(self, policy: str = "first"):
        self.policy = policy
        self.cache: dict[tuple, tuple[int, bool]] = {}

    def __call__(self, D: LinkDiagram) -> tuple[int, bool]:
        can = canonical(D)
        hit = self.cache.get(can.key)
        if hit is None:
            C = can.diagram
            S = SeifertStructure(C)
            if self.policy == "first":
                x = find_appropriate_point(C, S)
            else:
                from .castle import iter_appropriate_points

                pts = [p for p in iter_appropriate_points(C, S) if p is not None]
                x = pts[-1]
            # descend from circles whose empty side is on the right, ascend otherwise
            hit = (x, S.loose_right(S.circle_of[x]))
            self.cache[can.key] = hit
        x, desc = hit
        inv = {v: k for k, v in can.arc_map.items()}
        return inv[x], desc


_CHOOSERS: dict[str, PointChooser] = {}


def iter_coherent_leaves(D: LinkDiagram, policy: str = "first") -> Iterator[Leaf]:
    """Depth-first stream of the leaves of a coherent resolution tree for ``D``."""
    chooser = _CHOOSERS.setdefault(policy, PointChooser(policy))
    # (diagram, visited base arcs, current (base, descending) or None, t, t', weight)
    stack = [(D, (), None, 0, 0, LaurentPoly2.one())]
    while stack:
        U, visited, cur, t, tn, w = stack.pop()
        comp_of = U.arc_component
        vis = frozenset(comp_of[b] for b in visited)
        if cur is None:
            if len(vis) == len(U.components):
                yield Leaf(U, t, tn, w)
                continue
            reduced = remove_trivial_components(delete_components(U, vis))
            if reduced.crossing_count == 0:
                # every unvisited component only meets visited ones
                yield Leaf(U, t, tn, w)
                continue
            cur = chooser(reduced)
        x, desc = cur
        if x is None:
            # the travelled component became a bare circle
            stack.append((U, visited, None, t, tn, w))
            continue
        res = maximal_coherent_path(U, x, desc, vis)
        if res.closed:
            stack.append((U, visited + (x,), None, t, tn, w))
            continue
        c = res.violation
        sign = U.crossings[c].sign
        Us = smooth_crossing(U, c)
        xs = _smoothed_label(U, c, x, Us)
        if sign > 0:
            stack.append((Us, visited, (xs, desc), t + 1, tn, w * _AZ))
            stack.append((flip_crossing(U, c), visited, cur, t, tn, w * _A2))
        else:
            stack.append((Us, visited, (xs, desc), t + 1, tn + 1, w * _MAM1Z))
            stack.append((flip_crossing(U, c), visited, cur, t, tn, w * _AM2))


def homfly_coherent(D: LinkDiagram, policy: str = "first") -> LaurentPoly2:
    if D.component_count == 0:
        raise ValueError("empty diagram has no HOMFLY-PT polynomial")
    total = LaurentPoly2()
    for leaf in iter_coherent_leaves(D, policy):
        total = total + leaf_term(D, leaf)
    return total


def homfly(D: LinkDiagram, engine: str = "coherent") -> LaurentPoly2:
    if engine == "coherent":
        return homfly_coherent(D)
    if engine == "oracle":
        return homfly_oracle(D)
    if engine == "both":
        p, q = homfly_coherent(D), homfly_oracle(D)
        if p != q:
            raise AssertionError(f"engines disagree: {p} vs {q}")
        return p
    raise ValueError(f"unknown engine {engine!r}")
