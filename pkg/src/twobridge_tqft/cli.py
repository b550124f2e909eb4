"""Command-line front end.

Every command prints one artifact (JSON by default, CSV where the result is
a table) to stdout or --output.  Exit status: 0 success, 1 a verified
identity failed (a JSON failure record goes to stderr), 2 invalid input.

CSV columns
  invsum            p,q,sum1,sum2,expected1
  conditionH-sweep  b,d,a,c,ok
  asymptotic        n,p,q,sigma,dim,ratio,limit,error
Rationals are written as "num/den" strings.  Other commands written as CSV
become key,value rows with JSON-encoded values.
"""
import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .asymptotics import (SeedMatrix, alpha_sequence, bivariate_polys, build_limit_algebra, condition_H,
                          description_check, enumerate_seeds, h_polynomials, leading_trace, limit_trace,
                          normalized_h1, polynomiality_check, qlemma_report, ratio_table,
                          signature_direct, signature_reciprocal, specialization_check)
from .cache import ArtifactCache, resolve_cache_dir
from .errors import InvalidInput, TwoBridgeError
from .frobenius import build_algebra, colored_signature, signature, use_disk_cache
from .identities import identity_suite, matrix_identity
from .torsion import (expected_inverse_sum_tau1, inverse_sum_tau1, inverse_sum_tau2, reciprocity_check,
                      tau1_raw, tau1_simple, tau2_raw, tau2_simple, torsion_report)
from .twobridge import coprime_odd_pairs, make_params, riley, validate_pair

SUITES = ("identities", "torsion", "sums", "reciprocity", "asymptotics")
DEFAULT_SUITE_PMAX = {"identities": 25, "torsion": 41, "sums": 99, "reciprocity": 41}
REFERENCE_SEED = (3, 2, 4, 3)
REFERENCE_TRACES = {2: 1, 3: 1, 4: 1345, 5: 1762, 6: 2241}


class CheckFailed(Exception):
    """An identity did not hold; carries the artifact and a failure record."""

    def __init__(self, payload, record):
        super().__init__(record.get("reason", "verification failed"))
        self.payload = payload
        self.record = record


@dataclass
class JobSpec:
    command: str
    params: dict = field(default_factory=dict)
    output: Optional[str] = None
    format: str = "json"
    threads: int = 1
    cache_dir: Optional[str] = None


def rational(v):
    """Integers stay integers; other rationals become "num/den" strings."""
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _pmap(fn: Callable, items, threads: int, cache_dir=None):
    items = list(items)
    if threads <= 1 or len(items) < 2:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=threads, initializer=_worker_init, initargs=(cache_dir,)) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * threads))))


def _worker_init(cache_dir):
    use_disk_cache(ArtifactCache(cache_dir) if cache_dir else None)


# ---- per-item workers (top level so they pickle)
def _invsum_row(pq):
    p, q = pq
    return {"p": p, "q": q, "sum1": rational(inverse_sum_tau1(p, q)), "sum2": rational(inverse_sum_tau2(p, q)),
            "expected1": rational(expected_inverse_sum_tau1(p, q))}


def _condition_row(seed):
    return {"b": seed.b, "d": seed.d, "a": seed.a, "c": seed.c, "ok": condition_H(seed)}


def _ratio_row(args):
    seed, g, n = args
    row = ratio_table(seed, g, [n])[0]
    return {"n": row.n, "p": row.p, "q": row.q, "sigma": row.sigma, "dim": row.dim,
            "ratio": rational(row.ratio), "limit": rational(row.limit),
            "error": f"{float(row.relative_error()):.6f}"}


def _identity_item(pq):
    res = identity_suite(*pq, frobenius=pq[0] <= 25)
    res["matrix_identity"] = matrix_identity(*pq)
    return res


def _torsion_item(pq):
    r = torsion_report(*pq)
    return {"tau1_raw=simple": r.tau1_raw == r.tau1_simple,
            "tau1_differentials": r.tau1_differentials == r.tau1_simple,
            "tau2_raw=simple": r.tau2_raw == r.tau2_simple,
            "delta1_inverse": r.delta1_inverse_ok}


def _sums_item(pq):
    p, q = pq
    out = {"sum1": inverse_sum_tau1(p, q) == expected_inverse_sum_tau1(p, q)}
    if q != 1:
        out["sum2_zero"] = inverse_sum_tau2(p, q) == 0
    return out


def _reciprocity_item(pq):
    r = reciprocity_check(*pq)
    out = {k: v for k, v in r.checks.items() if k != "omega_transform"}
    out["omega_transform_signed"] = r.omega_signed_ok
    return out


_SUITE_WORKERS = {"identities": _identity_item, "torsion": _torsion_item, "sums": _sums_item,
                  "reciprocity": _reciprocity_item}


# ---- commands
def cmd_riley(job):
    p, q = job.params["p"], job.params["q"]
    prm = make_params(p, q)
    return {"p": p, "q": q, "ell": prm.ell, "ell_prime": prm.ell_prime, "eps": list(prm.eps),
            "riley": riley(prm).to_json()}


def cmd_frobenius(job):
    p, q = job.params["p"], job.params["q"]
    validate_pair(p, q)
    V = build_algebra(p, q)
    return {"p": p, "q": q, "omega": V.omega.to_json(), "iota": V.iota.to_json(),
            "eta_diagonal": V.eta_diagonal()}


def cmd_torsion(job):
    p, q, rep, formula = (job.params[k] for k in ("p", "q", "rep", "formula"))
    validate_pair(p, q)
    V = build_algebra(p, q)
    raw, simple = (tau1_raw(V), tau1_simple(V)) if rep == 1 else (tau2_raw(V), tau2_simple(V))
    match = raw == simple
    payload = {"p": p, "q": q, "rep": rep, "tau": (raw if formula == "raw" else simple).to_json(),
               "formula": formula, "match": match}
    if not match:
        raise CheckFailed(payload, {"reason": "raw and simple torsion formulas differ", "p": p, "q": q,
                                    "rep": rep, "residual": (raw - simple).to_json()})
    return payload


def cmd_invsum(job):
    pmax, with_q1 = job.params["pmax"], job.params["include_q1"]
    if pmax < 3:
        raise InvalidInput("--pmax must be at least 3")
    rows = _pmap(_invsum_row, coprime_odd_pairs(pmax, include_q1=with_q1), job.threads, job.cache_dir)
    bad = [r for r in rows
           if r["sum1"] != r["expected1"] or (r["q"] != 1 and r["sum2"] != 0)]
    if bad:
        raise CheckFailed(rows, {"reason": "inverse-sum identity failed", "first": bad[0], "count": len(bad)})
    return rows


def cmd_signature(job):
    p, q, g, colors = (job.params[k] for k in ("p", "q", "g", "colors"))
    validate_pair(p, q)
    if colors:
        sigma = colored_signature(p, q, g, tuple(colors))
    else:
        sigma = signature(p, q, g)
    return {"p": p, "q": q, "g": g, "colors": list(colors), "sigma": rational(sigma)}


def _seed(job) -> SeedMatrix:
    return SeedMatrix(*(job.params[k] for k in ("a", "b", "c", "d")))


def cmd_asymptotic(job):
    M = _seed(job)
    g, nmin, nmax = job.params["g"], job.params["nmin"], job.params["nmax"]
    if g < 2:
        raise InvalidInput("--g must be at least 2")
    h = h_polynomials(M)
    ok_h = condition_H(M)
    payload = {"seed": list(M.astuple()), "alpha": list(alpha_sequence(M)),
               "H1": h.h1.to_json(), "H1_normalized": normalized_h1(M).to_json(), "H2": h.h2.to_json(),
               "H3": h.h3.to_json(), "conditionH": ok_h}
    if not ok_h:
        raise CheckFailed(payload, {"reason": "condition (H) fails; the limit algebra is not semisimple",
                                    "seed": list(M.astuple())})
    W = build_limit_algebra(M)
    payload["omegaW"] = W.omega_w.to_json()
    payload["limit_traces"] = {str(k): rational(W.trace_power(k - 1)) for k in sorted({2, 3, 4, 5, 6, g})}
    ns = [n for n in range(nmin | 1, nmax + 1, 2) if M.admissible(n)]
    payload["ratio_rows"] = _pmap(_ratio_row, [(M, g, n) for n in ns], job.threads, job.cache_dir)
    return payload


def cmd_qlemma(job):
    M = _seed(job)
    triple = bivariate_polys(M)
    rep = qlemma_report(M, triple)
    ns = [n for n in (3, 5, 7) if M.admissible(n)] or [M.first_admissible(3)]
    spec = {str(n): specialization_check(M, n, triple) for n in ns}
    payload = {"seed": list(M.astuple()), "conventions": triple.conventions, "clauses": rep.clauses,
               "specialization": spec,
               "details": {"extreme_signs": list(rep.details["extreme_signs"]),
                           "u_specialization_signs": list(rep.details["u_specialization_signs"]),
                           "newton_polygon": [list(v) for v in rep.details["newton_polygon"]]},
               "Q": triple.qm.to_json(), "R": triple.rm.to_json(), "S": triple.sm.to_json(),
               "ok": rep.ok and all(all(v.values()) for v in spec.values())}
    if not payload["ok"]:
        raise CheckFailed(payload, {"reason": "bivariate identities failed", "seed": list(M.astuple())})
    return payload


def cmd_condition_sweep(job):
    dmax = job.params["dmax"]
    if dmax < 1:
        raise InvalidInput("--dmax must be positive")
    rows = _pmap(_condition_row, enumerate_seeds(dmax), job.threads, job.cache_dir)
    bad = [r for r in rows if not r["ok"]]
    if bad:
        raise CheckFailed(rows, {"reason": "condition (H) fails", "first": bad[0], "count": len(bad)})
    return rows


def _verify_asymptotics(job):
    M = _seed(job)
    checks = {}
    triple = bivariate_polys(M)
    for n in (3, 5, 7):
        if M.admissible(n):
            for name, v in specialization_check(M, n, triple).items():
                checks[f"specialization_{name}_n{n}"] = v
    for n in (3, 5):
        if M.admissible(n):
            checks[f"description_n{n}"] = description_check(M, n)
    checks.update({f"qlemma_{k}": v for k, v in qlemma_report(M, triple).clauses.items()})
    checks["condition_H"] = condition_H(M)
    poly = polynomiality_check(M, 2, 11, 8)
    checks["polynomial_g2"] = poly["ok"]
    ns = [n for n in range(11, 26, 2) if M.admissible(n)]
    checks["cross_route_g2"] = all(signature_direct(M, 2, n) == signature_reciprocal(M, 2, n) for n in ns)
    traces = {g: limit_trace(M, g) for g in range(2, 7)}
    for g in (2, 3):
        checks[f"leading_coefficient_g{g}"] = leading_trace(M, g) == traces[g]
    report = {"suite": "asymptotics", "seed": list(M.astuple()), "total": len(checks),
              "passed": sum(checks.values()), "failed": len(checks) - sum(checks.values()),
              "failed_checks": [k for k, v in checks.items() if not v],
              "limit_traces": {str(g): rational(v) for g, v in traces.items()}}
    if M.astuple() == REFERENCE_SEED:
        report["reference_table_mismatches"] = {str(g): {"computed": rational(traces[g]), "reference": v}
                                                for g, v in REFERENCE_TRACES.items() if traces[g] != v}
    return report


def cmd_verify(job):
    suite = job.params["suite"]
    if suite == "asymptotics":
        report = _verify_asymptotics(job)
    else:
        pmax = job.params["pmax"] or DEFAULT_SUITE_PMAX[suite]
        pairs = list(coprime_odd_pairs(pmax))
        results = _pmap(_SUITE_WORKERS[suite], pairs, job.threads, job.cache_dir)
        first = None
        failed = 0
        for pq, res in zip(pairs, results):
            bad = [k for k, v in res.items() if not v]
            if bad:
                failed += 1
                first = first or {"p": pq[0], "q": pq[1], "checks": bad}
        report = {"suite": suite, "pmax": pmax, "total": len(pairs), "passed": len(pairs) - failed,
                  "failed": failed, "first_counterexample": first}
    if report["failed"]:
        raise CheckFailed(report, {"reason": f"suite {suite} has failures", "report": report})
    return report


COMMANDS = {"riley": cmd_riley, "frobenius": cmd_frobenius, "torsion": cmd_torsion, "invsum": cmd_invsum,
            "signature": cmd_signature, "asymptotic": cmd_asymptotic, "qlemma": cmd_qlemma,
            "conditionH-sweep": cmd_condition_sweep, "verify": cmd_verify}
TABULAR = {"invsum", "conditionH-sweep"}


# ---- emission
def _csv_text(rows, columns=None):
    buf = io.StringIO()
    if not rows:
        return ""
    columns = columns or list(rows[0])
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    for r in rows:
        w.writerow({k: (str(v).lower() if isinstance(v, bool) else v) for k, v in r.items()})
    return buf.getvalue()


def render(command: str, payload, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if isinstance(payload, list):
        return _csv_text(payload)
    if command == "asymptotic":
        return _csv_text(payload["ratio_rows"])
    rows = [{"key": k, "value": json.dumps(v)} for k, v in payload.items()]
    return _csv_text(rows, ["key", "value"])


def _emit(text, output):
    if output:
        with open(output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(job: JobSpec) -> int:
    if job.threads < 1:
        print(json.dumps({"status": "invalid_input", "reason": "--threads must be positive"}), file=sys.stderr)
        return 2
    cache_dir = resolve_cache_dir(job.cache_dir)
    job.cache_dir = str(cache_dir) if cache_dir else None
    use_disk_cache(ArtifactCache(cache_dir) if cache_dir else None)
    try:
        payload = COMMANDS[job.command](job)
    except CheckFailed as exc:
        _emit(render(job.command, exc.payload, job.format), job.output)
        print(json.dumps({"status": "verification_failure", "command": job.command, **exc.record},
                         default=str), file=sys.stderr)
        return 1
    except InvalidInput as exc:
        print(json.dumps({"status": "invalid_input", "command": job.command, "reason": str(exc)}),
              file=sys.stderr)
        return 2
    except TwoBridgeError as exc:
        print(json.dumps({"status": "verification_failure", "command": job.command, "reason": str(exc),
                          "type": type(exc).__name__}), file=sys.stderr)
        return 1
    _emit(render(job.command, payload, job.format), job.output)
    return 0


def _int_list(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--output", "-o", default=None, help="write to this path instead of stdout")
    common.add_argument("--threads", type=int, default=1, help="worker processes for sweeps")
    common.add_argument("--cache-dir", default=None,
                        help="per-(p,q) artifact cache; defaults to $TWOBRIDGE_TQFT_CACHE_DIR, else off")

    parser = argparse.ArgumentParser(prog="twobridge-tqft", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def pair(sp):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--q", type=int, required=True)

    def seed(sp, required=True):
        for k, default in zip("abcd", REFERENCE_SEED):
            sp.add_argument(f"--{k}", type=int, required=required, default=None if required else default)

    sp = sub.add_parser("riley", parents=[common], help="eps sequence, ell, ell', Riley polynomial")
    pair(sp)
    sp = sub.add_parser("frobenius", parents=[common], help="Omega, iota, eta diagonal")
    pair(sp)
    sp = sub.add_parser("torsion", parents=[common], help="tau_1 or tau_2 in V")
    pair(sp)
    sp.add_argument("--rep", type=int, choices=(1, 2), default=1)
    sp.add_argument("--formula", choices=("raw", "simple"), default="simple")
    sp = sub.add_parser("invsum", parents=[common], help="CSV p,q,sum1,sum2,expected1")
    sp.add_argument("--pmax", type=int, required=True)
    sp.add_argument("--include-q1", action="store_true", help="also emit the torus-knot pairs q = 1")
    sp = sub.add_parser("signature", parents=[common], help="Tr(Omega^(g-1)), or eps(Omega^g P_c...) with colors")
    pair(sp)
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--colors", type=_int_list, default=[])
    sp = sub.add_parser("asymptotic", parents=[common], help="H polynomials, limit algebra, ratio rows")
    seed(sp)
    sp.add_argument("--g", type=int, default=2)
    sp.add_argument("--nmin", type=int, default=11)
    sp.add_argument("--nmax", type=int, default=25)
    sp = sub.add_parser("qlemma", parents=[common], help="bivariate Q_M/R_M/S_M clause report")
    seed(sp)
    sp = sub.add_parser("conditionH-sweep", parents=[common], help="CSV b,d,a,c,ok over minimal seeds")
    sp.add_argument("--dmax", type=int, required=True)
    sp = sub.add_parser("verify", parents=[common], help="run a property suite")
    sp.add_argument("--suite", choices=SUITES, required=True)
    sp.add_argument("--pmax", type=int, default=None)
    seed(sp, required=False)
    return parser


def parse_job(argv=None) -> JobSpec:
    ns = build_parser().parse_args(argv)
    params = {k: v for k, v in vars(ns).items() if k not in ("command", "format", "output", "threads", "cache_dir")}
    fmt = ns.format or ("csv" if ns.command in TABULAR else "json")
    return JobSpec(ns.command, params, ns.output, fmt, ns.threads, ns.cache_dir)


def main(argv=None) -> int:
    return run(parse_job(argv))


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
