"""Label and verify a seeded random corpus for k = 2 and k = 3, with timing."""

import argparse
import time

from hypercordial.cli import stress_trial


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=20240601)
    ap.add_argument("--max-edges", type=int, default=100)
    args = ap.parse_args()

    for k in (2, 3):
        start = time.perf_counter()
        bad = [r for t in range(args.trials) if not (r := stress_trial(k, args.seed, t, args.max_edges)).ok]
        took = time.perf_counter() - start
        print(f"k={k}: {args.trials - len(bad)}/{args.trials} verified in {took:.1f}s")
        for r in bad:
            print(f"  trial {r.trial} (m={r.edges}) failed\n{r.detail}")


if __name__ == "__main__":
    main()
