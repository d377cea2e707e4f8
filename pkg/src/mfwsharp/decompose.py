"""Building positive diagrams from zero-crossing ones, and certifying sharpness.

A positive diagram reaches the top ``a``-degree ``w + s - 1`` exactly when it
can be grown from a bunch of disjoint circles by shackles, doublings and
Artin moves.  ``decompose_positive`` finds such a script by peeling double
regions off the diagram, using the polynomial to decide which way to peel.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Union

from .castle import LemmaViolation, find_appropriate_point
from .diagram import (
    DiagramError,
    LinkDiagram,
    canonical,
    diagrams_isomorphic,
    remove_trivial_components,
    zero_crossing,
)
from .laurent import LaurentPoly2
from .moves import (
    Artin,
    Double,
    Move,
    Shackle,
    apply_artin_indexed,
    apply_move,
    artin_direction,
    artin_sites,
    double_regions,
    move_from_json,
    undo_double_region,
)
from .resolution import homfly_oracle
from .seifert import SeifertStructure, lone_crossings

Evaluator = Callable[[LinkDiagram], LaurentPoly2]


@dataclass(frozen=True)
class MoveScript:
    """Moves applied in order to ``start_circles`` disjoint, unnested circles.

    Sites refer to the canonical labelling of the diagram the move acts on.
    """

    start_circles: int
    moves: tuple[Move, ...] = ()

    def counts(self) -> dict[str, int]:
        out = {"shackle": 0, "double": 0, "artin": 0}
        for m in self.moves:
            out[m.to_json()["type"]] += 1
        return out

    def to_json(self) -> dict:
        return {"start": {"circles": self.start_circles}, "moves": [m.to_json() for m in self.moves]}

    @classmethod
    def from_json(cls, doc: dict) -> "MoveScript":
        try:
            n = int(doc["start"]["circles"])
            moves = tuple(move_from_json(m) for m in doc.get("moves", []))
        except (KeyError, TypeError, ValueError) as exc:
            raise DiagramError(f"malformed move script: {exc}") from None
        return cls(n, moves)


@dataclass(frozen=True)
class Decomposable:
    script: MoveScript


@dataclass(frozen=True)
class NotSharp:
    deg_a_max: int
    bound: int


@dataclass(frozen=True)
class SharpnessCertificate:
    verdict: Union[Decomposable, NotSharp]
    polynomial: LaurentPoly2
    writhe: int
    seifert_circles: int

    @property
    def decomposable(self) -> bool:
        return isinstance(self.verdict, Decomposable)

    @property
    def script(self) -> MoveScript | None:
        return self.verdict.script if isinstance(self.verdict, Decomposable) else None

    def to_json(self) -> dict:
        doc = {
            "verdict": "decomposable" if self.decomposable else "not_sharp",
            "writhe": self.writhe,
            "seifert_circles": self.seifert_circles,
            "polynomial": self.polynomial.to_json(),
        }
        if isinstance(self.verdict, Decomposable):
            doc["script"] = self.verdict.script.to_json()
        else:
            doc["deg_a_max"] = self.verdict.deg_a_max
            doc["bound"] = self.verdict.bound
        return doc


# ----------------------------------------------------------------------
# sharpness


def top_a_bound(D: LinkDiagram) -> int:
    return D.writhe + SeifertStructure(D).count - 1


def is_r_sharp(D: LinkDiagram, evaluate: Evaluator = homfly_oracle) -> bool:
    return evaluate(D).degrees()["deg_a_max"] == top_a_bound(D)


# ----------------------------------------------------------------------
# replay


def replay(script: MoveScript) -> LinkDiagram:
    """Apply the moves in order, canonicalising between steps."""
    D = canonical(zero_crossing(script.start_circles)).diagram
    for i, m in enumerate(script.moves):
        try:
            D = canonical(apply_move(D, m)).diagram
        except (DiagramError, KeyError, IndexError) as exc:
            raise DiagramError(f"move {i} ({m}) is invalid: {exc}") from None
    return D


def verify(script: MoveScript, D: LinkDiagram) -> bool:
    try:
        return diagrams_isomorphic(replay(script), D)
    except DiagramError:
        return False


# ----------------------------------------------------------------------
# Artin normalisation


@dataclass
class NormalizationTrace:
    moves: list[Artin] = field(default_factory=list)
    potentials: list[int] = field(default_factory=list)
    # the new triple created by each move, in the labels of the diagram right after it
    created: list[tuple[int, int, int]] = field(default_factory=list)
    kinds: list[str] = field(default_factory=list)
    loose_right: bool | None = None


def coherent_sequences(S: SeifertStructure, root: int) -> list[tuple[int, ...]]:
    """Maximal coherent sequences of circles starting at ``root``."""
    nb = S.neighbors
    out = []

    def walk(path):
        ext = [
            w for w in sorted(nb[path[-1]]) if w not in path and all(S.coherent(w, u) for u in path)
        ]
        if not ext:
            out.append(tuple(path))
            return
        for w in ext:
            walk(path + [w])

    walk([root])
    return out


def _sequence_data(S: SeifertStructure, root: int):
    seqs = coherent_sequences(S, root)
    alpha = S.distances_from(root)
    pairs = set()
    triples = set()
    for seq in seqs:
        for i in range(len(seq) - 1):
            pairs.add(frozenset(seq[i : i + 2]))
        for i in range(len(seq) - 2):
            c1, c2, c3 = seq[i : i + 3]
            if alpha[c1] + 1 == alpha[c2] == alpha[c3] - 1:
                triples.add((c1, c2, c3))
    return pairs, triples, alpha


def artin_potential(D: LinkDiagram, x: int) -> int:
    S = SeifertStructure(D)
    pairs, _, alpha = _sequence_data(S, S.circle_of[x])
    total = 0
    for p in pairs:
        c1, c2 = tuple(p)
        total += min(alpha[c1], alpha[c2]) * S.shared_crossings(c1, c2)
    return total


def _eligible_site(D: LinkDiagram, S: SeifertStructure, triples):
    for (t, kind) in artin_sites(D):
        x, y, z = t
        doubled = set(S.crossing_circles[x])
        single = set(S.crossing_circles[y])
        mid = doubled & single
        if len(mid) != 1:
            continue
        (c2,) = mid
        (c3,) = doubled - mid
        (c1,) = single - mid
        if (c1, c2, c3) in triples:
            return t, kind
    return None


def artin_normalize(D: LinkDiagram, x: int, max_steps: int | None = None):
    """Push crossings towards the circle of ``x`` with Artin moves until none applies.

    Each move trades a crossing between the circles at distances ``k+1`` and
    ``k+2`` from the circle of ``x`` for one between distances ``k`` and
    ``k+1``.  Returns ``(diagram, x, trace)``; every state is canonical and
    ``x`` is carried along by label.
    """
    can = canonical(D)
    D, x = can.diagram, can.arc_map[x]
    trace = NormalizationTrace()
    S = SeifertStructure(D)
    trace.loose_right = S.loose_right(S.circle_of[x])
    trace.potentials.append(artin_potential(D, x))
    limit = trace.potentials[0] if max_steps is None else max_steps
    while True:
        S = SeifertStructure(D)
        _, triples, _ = _sequence_data(S, S.circle_of[x])
        site = _eligible_site(D, S, triples)
        if site is None:
            return D, x, trace
        if len(trace.moves) >= limit:
            raise LemmaViolation("Artin normalisation did not terminate within its potential")
        t, kind = site
        out, new = apply_artin_indexed(D, t)
        can = canonical(out)
        D = can.diagram
        x = can.arc_map[x]
        trace.moves.append(Artin(t, artin_direction(kind)))
        trace.kinds.append(kind)
        trace.created.append(tuple(can.crossing_map[c] for c in new))
        trace.potentials.append(artin_potential(D, x))


# ----------------------------------------------------------------------
# decomposition


def _inverse_artin(created: tuple[int, int, int], kind: str) -> Artin:
    # the rewritten site has the opposite shape, so the undo runs the other way
    return Artin(created, "a" if kind == "lower" else "b")


def _peel(state: LinkDiagram, x: int, z: int, evaluate: Evaluator):
    """Undo one double region; prefer the parallel-strand resolution.

    Returns None when neither resolution is sharp.
    """
    V, site = undo_double_region(state, x, z, keep_one=False)
    if is_r_sharp(V, evaluate):
        can = canonical(V)
        move = Shackle(*(None if a is None else can.arc_map[a] for a in site))
        return can.diagram, move
    D0, c = undo_double_region(state, x, z, keep_one=True)
    if not is_r_sharp(D0, evaluate):
        return None
    can = canonical(D0)
    return can.diagram, Double(can.crossing_map[c])


def decompose_positive(
    D: LinkDiagram, evaluate: Evaluator = homfly_oracle, shortcut: bool = True
) -> SharpnessCertificate:
    """Certify the top ``a``-degree of a positive diagram one way or the other.

    With ``shortcut`` a diagram already known to miss the bound is reported
    at once.  Without it the peeling is always attempted and a diagram is
    reported as not sharp only when no double region can be peeled.
    """
    if not D.is_positive:
        raise DiagramError("diagram is not positive")
    P = evaluate(D)
    s = SeifertStructure(D).count
    bound = D.writhe + s - 1
    top = P.degrees()["deg_a_max"]
    sharp = top == bound
    not_sharp = SharpnessCertificate(NotSharp(top, bound), P, D.writhe, s)
    if shortcut and not sharp:
        return not_sharp
    state = canonical(D).diagram
    steps: list[tuple[Move, list[Artin]]] = []
    while state.crossing_count:
        sites = double_regions(state)
        undo: list[Artin] = []
        if not sites:
            core = remove_trivial_components(state)
            x = find_appropriate_point(core)
            state, _, trace = artin_normalize(state, x)
            undo = [_inverse_artin(t, k) for t, k in zip(trace.created, trace.kinds)]
            sites = double_regions(state)
        peeled = _peel(state, *sites[0], evaluate) if sites else None
        if peeled is None:
            if sharp:
                raise LemmaViolation("a sharp diagram could not be peeled")
            return not_sharp
        state, move = peeled
        steps.append((move, undo))
    if not sharp:
        raise LemmaViolation("a diagram missing the bound was fully peeled")
    moves: list[Move] = []
    for move, undo in reversed(steps):
        moves.append(move)
        moves.extend(reversed(undo))
    script = MoveScript(state.trivial_components, tuple(moves))
    return SharpnessCertificate(Decomposable(script), P, D.writhe, s)


def decompose_no_nested(D: LinkDiagram) -> MoveScript:
    """Shackle-and-doubling script for positive diagrams without nesting or lone crossings.

    Every step takes the ladders between the floor of an appropriate point and
    one neighbouring circle, collapses them to two with doubling undos and
    then removes the last two with a shackle undo.
    """
    if not D.is_positive:
        raise DiagramError("diagram is not positive")
    S = SeifertStructure(D)
    if any(S.nested(c) for c in range(len(S.circles))):
        raise DiagramError("diagram has nested Seifert circles")
    if lone_crossings(S):
        raise DiagramError("diagram has lone crossings")
    state = canonical(D).diagram
    rev: list[Move] = []
    while state.crossing_count:
        core = remove_trivial_components(state)
        x = find_appropriate_point(core)
        S = SeifertStructure(state)
        R = S.circle_of[x]
        other = min(S.neighbors[R])
        # collapse the bundle between R and its first neighbour one region at a time
        while True:
            bundle = [
                (a, b)
                for a, b in double_regions(state)
                if set(S.crossing_circles[a]) == {R, other}
            ]
            if not bundle:
                raise LemmaViolation("no double region between adjacent circles")
            if S.shared_crossings(R, other) > 2:
                D0, c = undo_double_region(state, *bundle[0], keep_one=True)
                can = canonical(D0)
                rev.append(Double(can.crossing_map[c]))
            else:
                V, site = undo_double_region(state, *bundle[0], keep_one=False)
                can = canonical(V)
                rev.append(Shackle(*(None if a is None else can.arc_map[a] for a in site)))
            x = can.arc_map[x] if x in can.arc_map else None
            state = can.diagram
            S = SeifertStructure(state)
            if isinstance(rev[-1], Shackle) or x is None:
                break
            R = S.circle_of[x]
            other = next(
                (c for c in sorted(S.neighbors[R]) if S.shared_crossings(R, c) >= 2), None
            )
            if other is None:
                break
    return MoveScript(state.trivial_components, tuple(reversed(rev)))


# ----------------------------------------------------------------------
# random generation


@dataclass(frozen=True)
class ScriptConfig:
    max_moves: int = 8
    max_start_circles: int = 3
    artin_probability: float = 0.3
    seed: int = 7


def random_move_script(rng: random.Random, cfg: ScriptConfig = ScriptConfig()) -> tuple[MoveScript, LinkDiagram]:
    """Random valid script and the diagram it builds."""
    n = rng.randint(1, cfg.max_start_circles)
    D = canonical(zero_crossing(n)).diagram
    moves: list[Move] = []
    target = rng.randint(1, cfg.max_moves)
    while len(moves) < target:
        options: list[Move] = []
        if rng.random() < cfg.artin_probability:
            options = [Artin(t, artin_direction(k)) for t, k in artin_sites(D)]
        if not options and D.crossing_count and rng.random() < 0.4:
            options = [Double(c) for c in range(D.crossing_count)]
        if not options:
            options = _shackle_sites(D)
        if not options:
            break
        m = rng.choice(options)
        D = canonical(apply_move(D, m)).diagram
        moves.append(m)
    return MoveScript(n, tuple(moves)), D


def _shackle_sites(D: LinkDiagram) -> list[Shackle]:
    from .moves import shackle_site_ok

    out = []
    arcs = sorted(D.ends)
    for a in arcs:
        for b in arcs:
            if a != b and D.right_face(a) == D.left_face(b) and shackle_site_ok(D, a, b):
                out.append(Shackle(a, b))
    if D.trivial_components:
        out.extend(Shackle(a, None) for a in arcs)
        out.extend(Shackle(None, a) for a in arcs)
        if D.trivial_components >= 2:
            out.append(Shackle(None, None))
    return out


def random_move_scripts(count: int, cfg: ScriptConfig = ScriptConfig()) -> list[tuple[MoveScript, LinkDiagram]]:
    rng = random.Random(cfg.seed)
    return [random_move_script(rng, cfg) for _ in range(count)]
