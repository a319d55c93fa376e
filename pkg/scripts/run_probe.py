"""Search small random hypertrees for ones that are not k-cordial, for k >= 4."""

import argparse
from collections import Counter

from hypercordial.cli import probe_trial


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, nargs="+", default=[4, 5])
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=20240601)
    ap.add_argument("--max-vertices", type=int, default=14)
    ap.add_argument("--budget", type=int, default=10**6)
    args = ap.parse_args()

    for k in args.k:
        tally = Counter()
        for t in range(args.trials):
            decision, text = probe_trial(k, args.seed, t, args.max_vertices, args.budget)
            tally[decision] += 1
            if decision == "exhausted-unsat":
                print(f"# k={k} trial {t} is not k-cordial\n{text}")
        print(f"k={k}: " + ", ".join(f"{d}={c}" for d, c in sorted(tally.items())))


if __name__ == "__main__":
    main()
