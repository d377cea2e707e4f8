"""Count trapped castles over generated positive diagrams and show where appropriate points land."""

import argparse
from dataclasses import dataclass

from mfwsharp.castle import build_castle, candidate_base_points, find_appropriate_point
from mfwsharp.decompose import ScriptConfig, random_move_scripts
from mfwsharp.diagram import remove_trivial_components
from mfwsharp.seifert import SeifertStructure


@dataclass(frozen=True)
class TrapConfig:
    count: int = 200
    max_moves: int = 8
    seed: int = 3


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=TrapConfig.count)
    ap.add_argument("--seed", type=int, default=TrapConfig.seed)
    args = ap.parse_args()
    cfg = TrapConfig(count=args.count, seed=args.seed)
    gen = ScriptConfig(max_moves=cfg.max_moves, max_start_circles=4, artin_probability=0.5, seed=cfg.seed)
    first_trapped = castles = trapped = 0
    for _, D in random_move_scripts(cfg.count, gen):
        D = remove_trivial_components(D)
        if D.crossing_count == 0:
            continue
        S = SeifertStructure(D)
        points = [x for x in candidate_base_points(D, S) if x is not None]
        flags = [build_castle(D, x, S).has_traps() for x in points]
        castles += len(flags)
        trapped += sum(flags)
        if flags and flags[0]:
            first_trapped += 1
            x = find_appropriate_point(D, S)
            print(f"first candidate trapped ({D.crossing_count} crossings); using arc {x}")
    print(f"{castles} castles, {trapped} trapped, {first_trapped} diagrams needed a search")


if __name__ == "__main__":
    main()
