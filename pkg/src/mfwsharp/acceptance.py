"""The eleven end-to-end acceptance checks, runnable from tests or the CLI."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Callable

from .bounds import bounds_report, positive_equalities_check
from .castle import build_castle, candidate_base_points, iter_appropriate_points
from .corpus import CorpusConfig, NAMED_BRAIDS, positive_three_strand_words, random_braids
from .decompose import (
    ScriptConfig,
    artin_normalize,
    decompose_positive,
    is_r_sharp,
    random_move_scripts,
    verify,
)
from .diagram import LinkDiagram, flip_crossing, mirror, parse_braid, remove_trivial_components, zero_crossing
from .laurent import A, A_INV, LaurentPoly2, Z
from .resolution import HomflyOracle, homfly_coherent, homfly_oracle, iter_coherent_leaves, leaf_highest_a_test
from .seifert import SeifertStructure


@dataclass(frozen=True)
class AcceptanceConfig:
    seed: int = 20240601
    mixed_count: int = 200
    positive_count: int = 200
    script_count: int = 100
    max_script_moves: int = 8
    flipped_count: int = 60

    def quick(self) -> "AcceptanceConfig":
        return replace(self, mixed_count=30, positive_count=30, script_count=20, flipped_count=10)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d} {self.name}: {self.detail} ({self.seconds:.1f}s)"


def torus35_expected() -> LaurentPoly2:
    z2, z4, z6, z8 = Z**2, Z**4, Z**6, Z**8
    return (
        (z8 + 8 * z6 + 21 * z4 + 21 * z2 + 7) * A**8
        - (z6 + 7 * z4 + 14 * z2 + 8) * A**10
        + (z2 + 2) * A**12
    )


def unlink_expected(n: int) -> LaurentPoly2:
    return (A_INV - A) ** (n - 1) * LaurentPoly2.monomial(0, 1 - n)


@dataclass
class Corpus:
    cfg: AcceptanceConfig = field(default_factory=AcceptanceConfig)

    @cached_property
    def mixed(self) -> list[LinkDiagram]:
        return [s.diagram() for s in random_braids(CorpusConfig(count=self.cfg.mixed_count, seed=self.cfg.seed))]

    @cached_property
    def positive_words(self) -> list[LinkDiagram]:
        return [s.diagram() for s in positive_three_strand_words(6)]

    @cached_property
    def positive_random(self) -> list[LinkDiagram]:
        cfg = CorpusConfig(count=self.cfg.positive_count, positive=True, seed=self.cfg.seed + 1)
        return [s.diagram() for s in random_braids(cfg)]

    @cached_property
    def scripted(self):
        cfg = ScriptConfig(max_moves=self.cfg.max_script_moves, seed=self.cfg.seed + 2)
        return random_move_scripts(self.cfg.script_count, cfg)

    @cached_property
    def flipped(self) -> list[LinkDiagram]:
        """Non-braid diagrams with mixed signs: generated diagrams with random crossings flipped."""
        rng = random.Random(self.cfg.seed + 3)
        cfg = ScriptConfig(max_moves=8, max_start_circles=4, artin_probability=0.5, seed=self.cfg.seed + 4)
        out = []
        for _, D in random_move_scripts(self.cfg.flipped_count, cfg):
            for c in range(D.crossing_count):
                if rng.random() < 0.4:
                    D = flip_crossing(D, c)
            out.append(D)
        return out

    @property
    def named(self) -> list[LinkDiagram]:
        return [parse_braid(t) for t in NAMED_BRAIDS.values()]

    @property
    def positive(self) -> list[LinkDiagram]:
        return self.positive_words + self.positive_random + [D for _, D in self.scripted]

    @property
    def everything(self) -> list[LinkDiagram]:
        return self.named + self.mixed + self.positive + self.flipped


def _timed(number: int, name: str, fn: Callable[[], tuple[bool, str]]) -> CriterionResult:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failure with a reason
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CriterionResult(number, name, ok, detail, time.perf_counter() - t0)


# ----------------------------------------------------------------------
# individual checks


def check_torus35(corpus: Corpus) -> CriterionResult:
    def run():
        t0 = time.perf_counter()
        D = parse_braid(NAMED_BRAIDS["torus35"])
        want = torus35_expected()
        a = homfly_coherent(D)
        b = HomflyOracle()(D)
        dt = time.perf_counter() - t0
        return a == want and b == want and dt < 5.0, f"both engines exact, {dt:.2f}s < 5s"

    return _timed(1, "torus (3,5) polynomial", run)


def check_unlinks(corpus: Corpus) -> CriterionResult:
    def run():
        bad = [n for n in range(1, 6) if not homfly_coherent(zero_crossing(n)) == homfly_oracle(zero_crossing(n)) == unlink_expected(n)]
        return not bad, f"n=1..5, mismatches {bad}"

    return _timed(2, "unlink formula", run)


def check_engines(corpus: Corpus) -> CriterionResult:
    def run():
        t0 = time.perf_counter()
        bad = sum(homfly_coherent(D) != homfly_oracle(D) for D in corpus.mixed)
        dt = time.perf_counter() - t0
        return bad == 0 and dt < 600, f"{len(corpus.mixed)} closures, {bad} mismatches"

    return _timed(3, "engine equivalence", run)


def check_bounds(corpus: Corpus) -> CriterionResult:
    def run():
        bad_hold = bad_iff = 0
        diagrams = corpus.everything
        for D in diagrams:
            r = bounds_report(D, "oracle")
            if not all(r.bounds()[k].holds for k in ("U", "L", "R", "LR", "MFW")):
                bad_hold += 1
            if r.crossing_number.sharp != (r.upper.sharp and r.left.sharp and r.right.sharp):
                bad_iff += 1
        t = bounds_report(parse_braid(NAMED_BRAIDS["torus35"]))
        vals = (t.deg_z_max, t.deg_a_min, t.deg_a_max, t.braid_index_lower, t.crossing_number.lhs)
        torus_ok = vals == (8, 8, 12, 3, 10) and all(b.sharp for k, b in t.bounds().items() if k != "U_prime")
        ok = bad_hold == 0 and bad_iff == 0 and torus_ok
        return ok, f"{len(diagrams)} diagrams, {bad_hold} violations, {bad_iff} sharpness mismatches, torus35 {vals}"

    return _timed(4, "bounds validity", run)


def check_positive_equalities(corpus: Corpus) -> CriterionResult:
    def run():
        diagrams = corpus.positive
        bad = sum(not positive_equalities_check(D, "oracle", strict=False).ok for D in diagrams)
        return bad == 0, f"{len(diagrams)} positive diagrams, {bad} failures"

    return _timed(5, "positive equalities", run)


def check_theorem(corpus: Corpus) -> CriterionResult:
    def run():
        t0 = time.perf_counter()
        diagrams = corpus.positive_words + corpus.positive_random
        bad = 0
        decomposable = 0
        for D in diagrams:
            cert = decompose_positive(D, shortcut=False)
            if cert.decomposable != is_r_sharp(D, homfly_coherent):
                bad += 1
            elif cert.decomposable:
                decomposable += 1
                if not verify(cert.script, D):
                    bad += 1
        dt = time.perf_counter() - t0
        return bad == 0 and dt < 1800, f"{len(diagrams)} diagrams, {decomposable} decomposable, {bad} failures"

    return _timed(6, "sharpness iff decomposable", run)


def check_forward(corpus: Corpus) -> CriterionResult:
    def run():
        bad = 0
        for script, D in corpus.scripted:
            cert = decompose_positive(D)
            if not (verify(script, D) and cert.decomposable and is_r_sharp(D) and verify(cert.script, D)):
                bad += 1
        return bad == 0, f"{len(corpus.scripted)} generated diagrams, {bad} failures"

    return _timed(7, "generated diagrams are sharp", run)


def check_castles(corpus: Corpus) -> CriterionResult:
    def run():
        no_point = incoherent = multi = traps = free = 0
        for D in corpus.everything:
            D = remove_trivial_components(D)
            if D.crossing_count == 0:
                continue
            S = SeifertStructure(D)
            if next(iter_appropriate_points(D, S), "none") == "none":
                no_point += 1
            for x in candidate_base_points(D, S):
                if x is None:
                    continue
                C = build_castle(D, x, S)
                if C.has_traps():
                    traps += 1
                    continue
                free += 1
                incoherent += not all(C.tower_is_coherent(t) for t in C.towers())
                multi += any(v != 1 for v in C.lower_neighbor_counts().values())
        ok = no_point == 0 and incoherent == 0 and multi == 0
        return ok, f"{free} trap-free and {traps} trapped castles; {no_point} without point, {incoherent} incoherent, {multi} non-unique"

    return _timed(8, "appropriate points and towers", run)


def check_leaves(corpus: Corpus) -> CriterionResult:
    def run():
        leaves = bad = 0
        for D in corpus.named + corpus.mixed + corpus.flipped:
            S = SeifertStructure(D)
            for leaf in iter_coherent_leaves(D):
                leaves += 1
                if leaf_highest_a_test(D, leaf, S) != leaf.has_simple_components():
                    bad += 1
        return bad == 0, f"{leaves} leaves, {bad} mismatches"

    return _timed(9, "leaf degree equation", run)


def check_mirror(corpus: Corpus) -> CriterionResult:
    def run():
        diagrams = corpus.everything
        bad = sum(homfly_oracle(mirror(D)) != homfly_oracle(D).substitute_mirror() for D in diagrams)
        return bad == 0, f"{len(diagrams)} diagrams, {bad} mismatches"

    return _timed(10, "mirror law", run)


def check_artin(corpus: Corpus) -> CriterionResult:
    def run():
        runs = moves = bad = 0
        for D in corpus.positive:
            core = remove_trivial_components(D)
            if core.crossing_count == 0:
                continue
            S = SeifertStructure(core)
            for x in [p for p in iter_appropriate_points(core, S) if p is not None][:3]:
                _, _, trace = artin_normalize(core, x)
                runs += 1
                moves += len(trace.moves)
                p = trace.potentials
                if any(a - b != 1 for a, b in zip(p, p[1:])) or len(trace.moves) > p[0]:
                    bad += 1
        return bad == 0, f"{runs} runs, {moves} moves, {bad} bad runs"

    return _timed(11, "Artin normalisation potential", run)


CHECKS = [
    check_torus35,
    check_unlinks,
    check_engines,
    check_bounds,
    check_positive_equalities,
    check_theorem,
    check_forward,
    check_castles,
    check_leaves,
    check_mirror,
    check_artin,
]


def run_acceptance(cfg: AcceptanceConfig | None = None, echo: Callable[[str], None] | None = None) -> list[CriterionResult]:
    corpus = Corpus(cfg or AcceptanceConfig())
    out = []
    for check in CHECKS:
        res = check(corpus)
        if echo:
            echo(res.line())
        out.append(res)
    return out
