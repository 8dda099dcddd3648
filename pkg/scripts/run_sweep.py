#!/usr/bin/env python3
"""Run a randomized decomposition sweep and write the CSV to stdout or a file.

Example:
    python scripts/run_sweep.py --dims 3..5 --max-det 5 --count 10 --seed 0
"""

import argparse
import sys

from conekit import experiments


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dims", default="3..5", help="dimension range a..b")
    parser.add_argument("--min-det", type=int, default=1)
    parser.add_argument("--max-det", type=int, default=5)
    parser.add_argument("--count", type=int, default=5, help="cones per cell")
    parser.add_argument("--dilation", type=int, default=2)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default=None)
    args = parser.parse_args()

    lo, hi = (int(x) for x in args.dims.split(".."))
    config = experiments.ExperimentConfig(
        dim_lo=lo,
        dim_hi=hi,
        det_lo=args.min_det,
        det_hi=args.max_det,
        count=args.count,
        dilation=args.dilation,
        seed=args.seed,
    )
    csv_text = experiments.rows_to_csv(experiments.run_experiment(config))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(csv_text)
        print(f"wrote {csv_text.count(chr(10)) - 1} rows to {args.out}")
    else:
        sys.stdout.write(csv_text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
