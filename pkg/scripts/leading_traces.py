"""Compare limit-algebra traces with the leading growth of sigma_g along a family.

Both columns are exact; they are computed by unrelated routes.
"""
import argparse

from twobridge_tqft.asymptotics import SeedMatrix, build_limit_algebra, leading_trace


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("seed", nargs="*", type=int, default=[3, 2, 4, 3])
    ap.add_argument("--gmax", type=int, default=5)
    args = ap.parse_args()
    M = SeedMatrix(*args.seed)
    W = build_limit_algebra(M)
    print("g  trace  from_growth")
    for g in range(2, args.gmax + 1):
        print(g, W.trace_power(g - 1), leading_trace(M, g))


if __name__ == "__main__":
    main()
