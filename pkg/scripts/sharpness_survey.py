"""Decompose every short positive 3-braid and report how many are right-sharp.

Each decomposable diagram gets its move script replayed as a check.
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from mfwsharp.corpus import positive_three_strand_words
from mfwsharp.decompose import decompose_positive, verify


@dataclass(frozen=True)
class SurveyConfig:
    max_length: int = 6
    show: bool = False


def survey(cfg: SurveyConfig) -> Counter:
    tally = Counter()
    for sample in positive_three_strand_words(cfg.max_length):
        D = sample.diagram()
        cert = decompose_positive(D)
        if cert.decomposable:
            tally["decomposable"] += 1
            tally["verified"] += verify(cert.script, D)
            tally.update(cert.script.counts())
        else:
            tally["not_sharp"] += 1
        if cfg.show:
            print(f"{sample.text:<24} {'sharp' if cert.decomposable else 'not sharp'}")
    return tally


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-length", type=int, default=SurveyConfig.max_length)
    ap.add_argument("--show", action="store_true", help="one line per braid")
    args = ap.parse_args()
    for key, n in sorted(survey(SurveyConfig(args.max_length, args.show)).items()):
        print(f"{key}: {n}")


if __name__ == "__main__":
    main()
