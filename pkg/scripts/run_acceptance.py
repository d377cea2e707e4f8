"""Run the eleven acceptance checks and print one line per criterion."""

import argparse
import sys

from mfwsharp.acceptance import AcceptanceConfig, run_acceptance


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=AcceptanceConfig.seed)
    ap.add_argument("--quick", action="store_true", help="reduced corpora")
    args = ap.parse_args()
    cfg = AcceptanceConfig(seed=args.seed)
    results = run_acceptance(cfg.quick() if args.quick else cfg, echo=print)
    failed = [r.number for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} passed" + (f", failed {failed}" if failed else ""))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
