"""Command-line interface.

Exit codes: 0 success/pass, 1 internal error, 2 infeasible input,
3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import setfile
from .bounds import ProblemSpec, bound_report
from .construction import DEFAULT_CERT_CAP, NoPrimeError, construct_bkg
from .distribution import ZeroVarianceError, berry_esseen_certificate, difference_pmf, pmf_rows, sum_pmf
from .search import exact_max
from .verification import DEFAULT_CAP, CapExceededError, GroupSpec, sum_profile

EXIT_OK, EXIT_INTERNAL, EXIT_INFEASIBLE, EXIT_FAIL = 0, 1, 2, 3

EPILOG = """exit codes:
  0  success / verification passed
  1  internal error
  2  infeasible input (no admissible prime, bad parameters, cap exceeded)
  3  verification failed (set is not B_k[g], or a Berry-Esseen bound is violated)
"""


def fmt(x):
    """Round reals to 12 significant digits; pass other values through."""
    if isinstance(x, float):
        return float(f"{x:.12g}")
    if isinstance(x, dict):
        return {k: fmt(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [fmt(v) for v in x]
    return x


def _csv_cell(x):
    return f"{x:.12g}" if isinstance(x, float) else x


def _config(args) -> dict:
    skip = {"func"}
    return {k: str(v) if isinstance(v, Path) else v
            for k, v in sorted(vars(args).items()) if k not in skip}


def _emit_json(obj: dict, args) -> None:
    obj = dict(obj)
    obj["config"] = _config(args)
    json.dump(fmt(obj), sys.stdout, indent=2)
    sys.stdout.write("\n")


def _emit_csv(rows: list[dict], args) -> None:
    sys.stderr.write("# config: " + json.dumps(_config(args)) + "\n")
    if not rows:
        return
    writer = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _csv_cell(v) for k, v in row.items()})


# -- commands ---------------------------------------------------------------

def cmd_construct(args) -> int:
    res = construct_bkg(args.k, args.g, args.n, cert_cap=args.cert_cap)
    cand = res.as_candidate()
    if args.out:
        setfile.write_set_file(args.out, cand)
    out = {
        "set": setfile.to_json(cand),
        "chosen_q": res.chosen_q,
        "size": len(res.elements),
        "certificate": res.certificate.to_json(),
    }
    if args.csv:
        _emit_csv([{"k": res.k, "g": res.g, "n": res.n, "q": res.chosen_q,
                    "size": len(res.elements),
                    "elements": " ".join(map(str, res.elements)),
                    "verified": res.certificate.verified}], args)
    else:
        _emit_json(out, args)
    return EXIT_OK


def cmd_verify(args) -> int:
    group = GroupSpec.cyclic(args.cyclic) if args.cyclic else None
    A = setfile.read_set_file(args.file, args.k, args.g, group)
    prof = sum_profile(A, cap=args.cap)
    passed = prof.max_count <= A.g
    witnesses = prof.collisions(A.g)[: args.max_witnesses]
    report = {
        "k": A.k,
        "g": A.g,
        "group": A.group.to_json(),
        "size": len(A),
        "min_g": prof.max_count,
        "pass": passed,
        "multisets": prof.total,
        "collision_sums": witnesses,
        "max_count_sums": prof.argmax_sums[: args.max_witnesses],
    }
    if args.csv:
        _emit_csv([{**{k: v for k, v in report.items() if not isinstance(v, (list, dict))},
                    "collision_sums": " ".join(map(str, witnesses))}], args)
    else:
        _emit_json(report, args)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_bounds(args) -> int:
    reports = []
    for k in args.k:
        for g in args.g:
            for n in args.n:
                reports.append(bound_report(ProblemSpec(k, g, n),
                                            with_construction=not args.no_construction,
                                            cert_cap=args.cert_cap))
    if args.csv:
        rows = []
        for rep in reports:
            row = {"k": rep.spec.k, "g": rep.spec.g, "n": rep.spec.n}
            for e in rep.entries:
                row[e.name] = e.value if e.applicable else ""
            row["lower_target"] = rep.lower_target if rep.lower_target is not None else ""
            row["lower_achieved"] = rep.lower_achieved if rep.lower_achieved is not None else ""
            rows.append(row)
        _emit_csv(rows, args)
    elif len(reports) == 1:
        _emit_json(reports[0].to_json(), args)
    else:
        _emit_json({"reports": [r.to_json() for r in reports]}, args)
    return EXIT_OK


def cmd_search(args) -> int:
    results = [exact_max(ProblemSpec(args.k, args.g, n), args.time_limit, args.threads)
               for n in args.n]
    rows = [r.csv_row() for r in results]
    if args.csv:
        _emit_csv(rows, args)
    else:
        _emit_json({"results": [
            {**{k: v for k, v in row.items() if k not in ("witness", "wall_time")},
             "witness": list(r.incumbent), "wall_time": r.wall_time}
            for row, r in zip(rows, results)]}, args)
    return EXIT_OK


def cmd_distribution(args) -> int:
    A = setfile.read_set_file(args.file, args.k, None)
    if A.group.is_cyclic:
        raise ValueError("distribution certificates need an integer set")
    elems = list(A.elements)
    cert = berry_esseen_certificate(elems, A.k, args.n)
    if args.dump:
        with open(args.dump, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["variable", "value", "mass", "F", "Phi"])
            for label, pmf in (("Z", sum_pmf(elems, A.k)), ("Y", difference_pmf(elems, A.k))):
                for row in pmf_rows(pmf, cert.stats.sigma):
                    w.writerow([label, *(f"{v:.12g}" for v in row)])
    out = cert.to_json()
    if args.csv:
        _emit_csv([{k: v for k, v in out.items() if k != "stats"}], args)
    else:
        _emit_json(out, args)
    return EXIT_OK if cert.passed else EXIT_FAIL


# -- parser -----------------------------------------------------------------

def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"{text} must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt_group = common.add_mutually_exclusive_group()
    fmt_group.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt_group.add_argument("--csv", action="store_true", help="CSV output")
    common.add_argument("--cap", type=_positive, default=DEFAULT_CAP,
                        help="maximum number of multisets to enumerate (default %(default)s)")
    common.add_argument("--time-limit", type=float, default=None,
                        help="search time limit in seconds (default: none)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized test generation only (default %(default)s)")

    parser = argparse.ArgumentParser(
        prog="bkgsets",
        description="Construct, verify, bound and search B_k[g] sets.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="Bose-Chowla quotient construction in [1, n]")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--g", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--out", type=Path, help="write the set file here")
    p.add_argument("--cert-cap", type=_positive, default=DEFAULT_CERT_CAP,
                   help="verify only when q^k is at most this (default %(default)s)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="exact B_k[g] check of a set file")
    p.add_argument("file", type=Path)
    p.add_argument("--k", type=int, help="override / supply k (required for plain text)")
    p.add_argument("--g", type=_positive, help="override / supply g")
    p.add_argument("--cyclic", type=int, help="treat elements as residues mod this modulus")
    p.add_argument("--max-witnesses", type=int, default=20)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", parents=[common], help="all upper bounds and the construction size")
    p.add_argument("--k", type=int, nargs="+", required=True)
    p.add_argument("--g", type=_positive, nargs="+", required=True)
    p.add_argument("--n", type=_positive, nargs="+", required=True)
    p.add_argument("--no-construction", action="store_true", help="skip the lower-bound construction")
    p.add_argument("--cert-cap", type=_positive, default=DEFAULT_CERT_CAP)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", parents=[common], help="exact F_{k,g}(n) by branch and bound")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--g", type=_positive, required=True)
    p.add_argument("--n", type=_positive, nargs="+", required=True)
    p.add_argument("--threads", type=_positive, default=1,
                   help="worker processes (default 1, deterministic either way)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("distribution", parents=[common], help="Berry-Esseen certificate for a set")
    p.add_argument("file", type=Path)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=_positive, help="ambient [1, n] (default: max element)")
    p.add_argument("--dump", type=Path, help="write (value, mass, F, Phi) rows as CSV")
    p.set_defaults(func=cmd_distribution)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NoPrimeError, CapExceededError, ZeroVarianceError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
