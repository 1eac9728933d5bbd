"""Command-line frontend. Each subcommand is a thin wrapper over the core
package: parse flags, call one function, serialize. Data goes to stdout,
diagnostics to stderr; exit code 0 iff no error."""

import argparse
import json
import math
import sys

from . import abacus, bratteli, characters, simulate, verify, walks
from .partitions import as_partition


def _parse_partition(text: str):
    if text.strip() in ("", "-"):
        return ()
    return as_partition(int(x) for x in text.split(","))


def _decomposition_lines(decomp) -> list[str]:
    return [
        f"{str(c):>8}  {list(lam)}"
        for lam, c in sorted(decomp.coefficients.items(), reverse=True)
    ]


def _cmd_decompose(args) -> int:
    decomp = (
        bratteli.ajr_decomposition(args.n, args.j, args.r)
        if args.r != 1
        else characters.aj_decomposition(args.n, args.j)
    )
    if args.format == "json":
        print(json.dumps(characters.decomposition_to_dict(decomp)))
    else:
        print(f"(a_{args.j})^{args.r} over S_{args.n}:")
        print("\n".join(_decomposition_lines(decomp)))
    return 0


def _cmd_multiplicity(args) -> int:
    lam = _parse_partition(args.lam)
    if args.ambient_n is not None:
        n = args.ambient_n
        lam = (n - sum(lam),) + lam
        lam = as_partition(lam)
    else:
        n = args.n
        if sum(lam) != n:
            raise ValueError(
                f"--lambda must sum to n={n} (got {sum(lam)}); "
                "pass --ambient-n to give the below-first-row part only"
            )
    closed = bratteli.closed_form_multiplicity(lam, args.r, args.j, n)
    paths = bratteli.tensor_power(n, args.j, args.r).coefficient(lam)
    payload = {
        "n": n,
        "j": args.j,
        "r": args.r,
        "partition": list(lam),
        "closed_form": closed,
        "path_count": paths,
        "agree": closed == paths,
    }
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(f"closed form: {closed}\npath count:  {paths}")
    if closed != paths:
        print("warning: closed form and path count disagree", file=sys.stderr)
        return 1
    return 0


def _cmd_sign(args) -> int:
    lam = _parse_partition(args.lam)
    report = abacus.abacus_report(lam, args.j)
    if args.format == "json":
        print(json.dumps(report))
    else:
        print(f"sign {report['sign']}, sigma = {' '.join(str(x) for x in report['sigma'])}")
    return 0


def _cmd_rimcount(args) -> int:
    lam = _parse_partition(args.lam)
    report = abacus.abacus_report(lam, args.j)
    if args.format == "json":
        print(json.dumps(report))
    else:
        print(report["R"])
    return 0


def _cmd_moments(args) -> int:
    spec = walks.WalkSpec(args.walk, args.n, args.k, i=args.i)
    report = walks.moment_report(spec, args.j, args.r, c=args.c, schedule=args.schedule)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "walk": spec.kind,
                    "n": spec.n,
                    "k": spec.k,
                    "i": spec.i,
                    "j": args.j,
                    "r": args.r,
                    "exact_moment": str(report.exact_moment),
                    "limit_moment": report.limit_moment,
                    "poisson_reference": report.poisson_reference,
                }
            )
        )
    else:
        print("n,j,r,k,exact_moment,limit_moment,poisson_reference")
        limit = "" if report.limit_moment is None else repr(report.limit_moment)
        ref = "" if report.poisson_reference is None else repr(report.poisson_reference)
        print(f"{spec.n},{args.j},{args.r},{spec.k},{report.exact_moment},{limit},{ref}")
    return 0


def _cmd_limits(args) -> int:
    rate = (1.0 - math.exp(-args.j * args.c)) / args.j
    payload = {
        "j": args.j,
        "r": args.r,
        "c": args.c,
        "limit_moment": walks.limiting_jcycle_moment(args.j, args.r, args.c),
        "poisson_rate": rate,
        "poisson_moment": walks.poisson_moment(rate, args.r),
    }
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(f"limit {payload['limit_moment']!r}  poisson {payload['poisson_moment']!r}")
    return 0


def _cmd_simulate(args) -> int:
    i = args.i if args.walk == walks.ICYCLE else None
    if args.k is not None:
        k = args.k
    else:
        k = walks.schedule_steps(args.walk, args.schedule, args.n, args.c, i)
    spec = walks.WalkSpec(args.walk, args.n, k, i=i)
    config = simulate.SimConfig(
        spec=spec,
        trials=args.trials,
        seed=args.seed,
        tracked_js=tuple(args.j),
        c=args.c,
        schedule=args.schedule,
        collect_trials=args.dump_trials is not None,
    )
    summary = simulate.run(config, threads=args.threads)
    if args.dump_trials is not None:
        with open(args.dump_trials, "w") as fh:
            js = list(config.tracked_js)
            fh.write("trial," + ",".join(f"a{j}" for j in js) + "\n")
            for t in range(config.trials):
                fh.write(
                    f"{t}," + ",".join(str(summary.trial_counts[j][t]) for j in js) + "\n"
                )
    print(json.dumps(simulate.summary_to_dict(summary)))
    return 0


def _cmd_verify(args) -> int:
    results = verify.run_all(fast=args.fast)
    failed = [r for r in results if not r.ok]
    for r in results:
        status = "ok" if r.ok else "FAIL"
        line = f"{status:4}  {r.name}"
        if r.detail and not r.ok:
            line += f"  ({r.detail})"
        print(line)
    if failed:
        print(f"first failing comparison: {failed[0].detail}", file=sys.stderr)
        return 1
    return 0


def _cmd_diagram(args) -> int:
    if args.format != "dot":
        raise ValueError("diagram output supports --format dot")
    print(bratteli.dot_export(args.n, args.j, args.levels))
    return 0


def _add_format(p, default="json", choices=("json", "text")):
    p.add_argument("--format", default=default, choices=choices)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycle-mixer",
        description="Exact cycle-type statistics for star-transposition and random i-cycle shuffles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="character decomposition of (a_j)^r")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    _add_format(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("multiplicity", help="closed form and path count for one irreducible")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, help="deck size; --lambda is the full partition")
    group.add_argument(
        "--ambient-n",
        type=int,
        dest="ambient_n",
        help="deck size; --lambda is the part below the first row",
    )
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, help="comma-separated parts")
    _add_format(p)
    p.set_defaults(func=_cmd_multiplicity, ambient_n=None, n=None)

    p = sub.add_parser("sign", help="abacus compression sign and permutation")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--j", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_sign)

    p = sub.add_parser("rimcount", help="standard rim-hook tableau count")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--j", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_rimcount)

    p = sub.add_parser("moments", help="exact moment of a_j^r after k steps")
    p.add_argument("--walk", choices=(walks.STAR, walks.ICYCLE), required=True)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--c", type=float, default=None)
    p.add_argument("--schedule", choices=walks.SCHEDULES, default=None)
    _add_format(p, default="csv", choices=("csv", "json"))
    p.set_defaults(func=_cmd_moments)

    p = sub.add_parser("limits", help="limiting moment vs Poisson reference")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--c", type=float, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_limits)

    p = sub.add_parser("simulate", help="Monte Carlo cycle-count statistics")
    p.add_argument("--walk", choices=(walks.STAR, walks.ICYCLE), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--schedule", choices=walks.SCHEDULES, default="cn")
    p.add_argument("--k", type=int, default=None, help="override the schedule step count")
    p.add_argument("--j", type=int, nargs="+", required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--dump-trials", default=None, help="write per-trial counts CSV here")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("verify", help="run the oracle cross-check suite")
    p.add_argument("--fast", action="store_true", help="smaller grids")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("diagram", help="DOT export of diagram levels")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--levels", type=int, required=True)
    p.add_argument("--format", default="dot", choices=("dot",))
    p.set_defaults(func=_cmd_diagram)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
