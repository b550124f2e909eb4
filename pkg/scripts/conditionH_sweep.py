"""Check condition (H) for every minimal seed with d below a bound."""
import argparse
import sys

from twobridge_tqft.asymptotics import condition_H, enumerate_seeds


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dmax", type=int, default=100)
    args = ap.parse_args()
    seeds = list(enumerate_seeds(args.dmax))
    failures = [M for M in seeds if not condition_H(M)]
    print(f"{len(seeds) - len(failures)}/{len(seeds)} seeds satisfy (H)")
    for M in failures:
        print("fails:", M.astuple())
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
