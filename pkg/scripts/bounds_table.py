"""Tabulate degree bounds and their sharpness over a random braid corpus as CSV."""

import argparse
import csv
import sys
from dataclasses import dataclass

from mfwsharp.bounds import bounds_report
from mfwsharp.corpus import CorpusConfig, random_braids

COLUMNS = ("braid", "crossings", "writhe", "circles", "deg_z_max", "deg_a_min", "deg_a_max", "U", "L", "R", "MFW")


@dataclass(frozen=True)
class TableConfig:
    count: int = 50
    max_strands: int = 4
    max_crossings: int = 10
    positive: bool = False
    seed: int = 1
    engine: str = "coherent"


def rows(cfg: TableConfig):
    corpus = CorpusConfig(cfg.count, cfg.max_strands, cfg.max_crossings, cfg.positive, cfg.seed)
    for sample in random_braids(corpus):
        r = bounds_report(sample.diagram(), cfg.engine)
        b = r.bounds()
        yield (
            sample.text, r.crossings, r.writhe, r.seifert_circles, r.deg_z_max, r.deg_a_min, r.deg_a_max,
            *(int(b[k].sharp) for k in ("U", "L", "R", "MFW")),
        )


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=TableConfig.count)
    ap.add_argument("--positive", action="store_true")
    ap.add_argument("--seed", type=int, default=TableConfig.seed)
    args = ap.parse_args()
    out = csv.writer(sys.stdout)
    out.writerow(COLUMNS)
    out.writerows(rows(TableConfig(count=args.count, positive=args.positive, seed=args.seed)))


if __name__ == "__main__":
    main()
