"""Sweep the torsion inverse sums over coprime odd pairs and report any mismatch."""
import argparse
import csv
import sys

from twobridge_tqft.torsion import torsion_report
from twobridge_tqft.twobridge import coprime_odd_pairs


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pmax", type=int, default=51)
    args = ap.parse_args()
    w = csv.writer(sys.stdout)
    w.writerow(["p", "q", "sum_inv_tau1", "sum_inv_tau2", "expected_tau1", "ok"])
    bad = 0
    for p, q in coprime_odd_pairs(args.pmax, include_q1=False):
        r = torsion_report(p, q)
        ok = r.invsum_tau1 == r.expected_invsum_tau1 and r.invsum_tau2 == 0
        bad += not ok
        w.writerow([p, q, r.invsum_tau1, r.invsum_tau2, r.expected_invsum_tau1, int(ok)])
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
