"""Deterministic diagram corpora for property suites and experiments."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .diagram import LinkDiagram, braid_closure


@dataclass(frozen=True)
class BraidSample:
    strands: int
    word: tuple[int, ...]

    @property
    def text(self) -> str:
        return f"{self.strands}: " + " ".join(str(g) for g in self.word)

    def diagram(self) -> LinkDiagram:
        return braid_closure(self.strands, self.word)


@dataclass(frozen=True)
class CorpusConfig:
    count: int = 200
    max_strands: int = 4
    max_crossings: int = 10
    positive: bool = False
    seed: int = 20240601


def random_braids(cfg: CorpusConfig) -> list[BraidSample]:
    rng = random.Random(cfg.seed)
    out = []
    while len(out) < cfg.count:
        n = rng.randint(2, cfg.max_strands)
        length = rng.randint(1, cfg.max_crossings)
        word = []
        for _ in range(length):
            g = rng.randint(1, n - 1)
            if not cfg.positive and rng.random() < 0.5:
                g = -g
            word.append(g)
        out.append(BraidSample(n, tuple(word)))
    return out


def positive_three_strand_words(max_length: int = 6) -> list[BraidSample]:
    """All positive 3-strand words of length 1..max_length, one per cyclic rotation class."""
    out = []
    for length in range(1, max_length + 1):
        seen = set()
        for word in itertools.product((1, 2), repeat=length):
            rot = min(word[i:] + word[:i] for i in range(length))
            if rot in seen:
                continue
            seen.add(rot)
            out.append(BraidSample(3, rot))
    return out


NAMED_BRAIDS = {
    "hopf": "2: 1 1",
    "trefoil": "2: 1 1 1",
    "unknot_b": "3: 1 2",
    "torus35": "3: 1 2 1 2 1 2 1 2 1 2",
    "figure_eight": "3: 1 -2 1 -2",
    "full_twist3": "3: 1 2 1 2 1 2",
}
