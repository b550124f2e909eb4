"""Print sigma_g / dim V_g against the limit-algebra prediction along a seed family."""
import argparse
import csv
import sys

from twobridge_tqft.asymptotics import SeedMatrix, ratio_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("seed", nargs=4, type=int, metavar=("A", "B", "C", "D"))
    ap.add_argument("--g", type=int, default=2)
    ap.add_argument("--n", type=int, nargs="+", default=[51, 101, 151, 201])
    args = ap.parse_args()
    w = csv.writer(sys.stdout)
    w.writerow(["n", "p", "q", "sigma", "dim", "ratio", "limit", "rel_error"])
    for r in ratio_table(SeedMatrix(*args.seed), args.g, args.n):
        w.writerow([r.n, r.p, r.q, r.sigma, r.dim, f"{float(r.ratio):.6f}", r.limit,
                    f"{float(r.relative_error()):.6f}"])
        sys.stdout.flush()


if __name__ == "__main__":
    main()
