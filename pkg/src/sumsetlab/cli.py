"""Command-line interface. Every library operation is exposed as a
subcommand emitting JSON (default), CSV, or a plain text table.

Exit codes: 0 success, 1 computation error (budget, truncation,
precision), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import experiments, lattice, sumset, theory, types
from .core import CapExceeded, IntegerSet, RationalSet

_WORKERS_ENV = "SUMSETLAB_WORKERS"


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get(_WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _emit(args, payload: dict, csv_rows=None, csv_header=None) -> None:
    fmt = getattr(args, "format", "json")
    if fmt == "csv":
        if csv_rows is None:
            raise ValueError("this subcommand has no CSV form; use --format json")
        buf = io.StringIO()
        writer = csv.writer(buf)
        if csv_header:
            writer.writerow(csv_header)
        writer.writerows(csv_rows)
        text = buf.getvalue()
    elif fmt == "text":
        lines = []
        for key, value in payload.items():
            lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _int_set(text: str) -> IntegerSet:
    return IntegerSet.from_text(text)


def _rat_set(text: str) -> RationalSet:
    return RationalSet.from_text(text)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--out", help="write the report to this path instead of stdout")


def _cmd_sumset_compute(args) -> None:
    A = _int_set(args.set)
    result = sumset.h_fold_sumset(A, args.h)
    _emit(args, {"set": list(A.elements), "h": args.h, "sumset": list(result.elements), "size": result.k})


def _cmd_sumset_profile(args) -> None:
    A = _int_set(args.set)
    profile = sumset.sumset_profile(A, args.horizon)
    rows = [
        (h, profile.sizes[h - 1], profile.deficits[h - 1],
         profile.deficit_first_differences[h - 2] if h >= 2 else "")
        for h in range(1, args.horizon + 1)
    ]
    _emit(args, profile.to_dict(), rows, ("h", "size", "deficit", "deficit_first_difference"))


def _cmd_lattice_basis(args) -> None:
    A = _int_set(args.set)
    basis = lattice.coefficient_lattice_basis(A)
    _emit(args, basis.to_dict(), [tuple(r) for r in basis.rows])


def _cmd_lattice_minima(args) -> None:
    A = _int_set(args.set)
    report = lattice.successive_minima(A, args.count, args.cap)
    _emit(args, report.to_dict(), [(n,) + v for n, v in zip(report.minima, report.minimizers)])


def _cmd_theory_predict(args) -> None:
    size = theory.predicted_size(args.h, args.k, args.h1)
    _emit(args, {"h": args.h, "k": args.k, "h1": args.h1, "predicted_size": size})


def _verify_one(A: IntegerSet, max_cap: int) -> dict:
    return theory.verify_main_theorem(A, max_cap=max_cap).to_dict()


def _cmd_theory_verify(args) -> None:
    if bool(args.set) == bool(args.file):
        raise ValueError("give exactly one of --set or --file")
    if args.set:
        _emit(args, _verify_one(_int_set(args.set), args.max_cap))
        return
    reports = []
    with open(args.file) as fh:
        for line in fh:
            line = line.strip()
            if line:
                reports.append(_verify_one(_int_set(line), args.max_cap))
    _emit(args, {"reports": reports, "all_match": all(r["all_match"] for r in reports)})


def _cmd_theory_lemma(args) -> None:
    A = theory.construct_lemma_set(args.a, args.b, args.k)
    _emit(args, {"a": args.a, "b": args.b, "k": args.k, "set": list(A.elements)})


def _cmd_theory_cute(args) -> None:
    A = theory.construct_cute_set(args.b)
    _emit(args, {"b": args.b, "set": list(A.elements)})


def _cmd_theory_extremes(args) -> None:
    m, M, realizable = theory.extreme_and_realizable(args.h, args.k)
    _emit(
        args,
        {
            "h": args.h,
            "k": args.k,
            "min_size": m,
            "max_size": M,
            "realizable": [
                {"size": size, "witness": list(w.elements)} for size, w in realizable
            ],
        },
        [(size, *w.elements) for size, w in realizable],
    )


def _cmd_types_type(args) -> None:
    h = args.h
    if args.product:
        part = types.product_type(_int_set(args.set), h)
    else:
        A = _rat_set(args.set)
        part = types.h_type(A, h)
    payload = part.to_dict()
    payload["class_count"] = part.class_count
    _emit(args, payload)


def _cmd_types_separation(args) -> None:
    X = _rat_set(args.set)
    sep = types.separation(X, args.h)
    _emit(args, {"set": [str(x) for x in X.elements], "h": args.h, "separation": str(sep)})


def _cmd_types_embed(args) -> None:
    X = _rat_set(args.set)
    A, trace = types.embed_real_to_integers(X, args.h)
    if args.positive:
        A = IntegerSet(a + 1 for a in A.elements)
    payload = {"set": [str(x) for x in X.elements], "h": args.h,
               "result": list(A.elements), "trace": trace.to_dict()}
    _emit(args, payload)


def _cmd_types_to_product(args) -> None:
    S = _int_set(args.set)
    P = types.sum_to_product(S)
    _emit(args, {"set": list(S.elements), "result": list(P.elements)})


def _cmd_types_to_sum(args) -> None:
    P = _int_set(args.set)
    A = types.product_to_sum(P, args.h)
    _emit(args, {"set": list(P.elements), "h": args.h, "result": list(A.elements)})


def _cmd_exp_random(args) -> None:
    config = experiments.ExperimentConfig(
        n=args.n, k=args.k, h=args.h, samples=args.samples, seed=args.seed, workers=args.workers
    )
    hist, summary = experiments.random_subset_experiment(config)
    summary["histogram"] = hist.to_dict()
    _emit(args, summary, hist.to_csv_rows(), ("size", "count", "proportion"))


def _cmd_exp_scan(args) -> None:
    hist = experiments.exhaustive_scan(args.n, args.k, args.h, workers=args.workers)
    payload = {"n": args.n, "k": args.k, "h": args.h, "histogram": hist.to_dict()}
    _emit(args, payload, hist.to_csv_rows(), ("size", "count", "proportion"))


def _cmd_exp_minima(args) -> None:
    summary = experiments.minima_statistics(
        args.n, args.k, args.samples, args.seed, args.cap, count=args.count, workers=args.workers
    )
    rows = [(key, value) for key, value in sorted(
        ((int(k), v) for k, v in summary["h1_histogram"].items())
    )]
    _emit(args, summary, rows, ("h1", "count"))


def _cmd_exp_census(args) -> None:
    count, reps = experiments.type_census(args.n, args.k, args.h)
    payload = {
        "n": args.n,
        "k": args.k,
        "h": args.h,
        "type_count": count,
        "representatives": [list(r.elements) for r in reps],
    }
    _emit(args, payload, [tuple(r.elements) for r in reps])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sumsetlab",
        description="Exact sumset sizes, coefficient-lattice L1 minima, and type transport.",
    )
    top = parser.add_subparsers(dest="group", required=True)

    g = top.add_parser("sumset", help="h-fold sumsets and size profiles")
    sub = g.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("compute", help="the set hA")
    p.add_argument("--set", required=True)
    p.add_argument("--h", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_sumset_compute)
    p = sub.add_parser("profile", help="sizes, deficits, and first differences for h=1..H")
    p.add_argument("--set", required=True)
    p.add_argument("--horizon", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_sumset_profile)

    g = top.add_parser("lattice", help="coefficient lattice of a set")
    sub = g.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("basis", help="integer kernel basis")
    p.add_argument("--set", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_lattice_basis)
    p = sub.add_parser("minima", help="successive L1 minima and minimizers")
    p.add_argument("--set", required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--cap", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_lattice_minima)

    g = top.add_parser("theory", help="size predictions, verification, constructions")
    sub = g.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("predict", help="closed-form |hA| from (k, h1)")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--h1", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_theory_predict)
    p = sub.add_parser("verify", help="brute force vs prediction below the second minimum")
    p.add_argument("--set")
    p.add_argument("--file", help="path with one comma-separated set per line")
    p.add_argument("--max-cap", type=int, default=4096)
    _add_common(p)
    p.set_defaults(func=_cmd_theory_verify)
    p = sub.add_parser("construct-lemma", help="set with prescribed minima (2a, 2b)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--k", type=int, default=4)
    _add_common(p)
    p.set_defaults(func=_cmd_theory_lemma)
    p = sub.add_parser("construct-cute", help="set with |hA| = 2(h^2+1) up to h = b")
    p.add_argument("--b", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_theory_cute)
    p = sub.add_parser("extremes", help="min, max, and realizable sizes with witnesses")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_theory_extremes)

    g = top.add_parser("types", help="addition-table types and transport")
    sub = g.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("type", help="canonical h-type partition")
    p.add_argument("--set", required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--product", action="store_true", help="partition by products instead of sums")
    _add_common(p)
    p.set_defaults(func=_cmd_types_type)
    p = sub.add_parser("separation", help="smallest gap between distinct h-fold sums")
    p.add_argument("--set", required=True)
    p.add_argument("--h", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_types_separation)
    p = sub.add_parser("embed", help="integer set with the same h-type as a rational set")
    p.add_argument("--set", required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--positive", action="store_true",
                   help="translate the result by +1 so all elements are positive")
    _add_common(p)
    p.set_defaults(func=_cmd_types_embed)
    p = sub.add_parser("to-product", help="s -> 2**s type transport")
    p.add_argument("--set", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_types_to_product)
    p = sub.add_parser("to-sum", help="integer set with the h-type of a product table")
    p.add_argument("--set", required=True)
    p.add_argument("--h", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_types_to_sum)

    g = top.add_parser("experiment", help="seeded sampling and exhaustive scans")
    sub = g.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("random", help="|hA| histogram over random k-subsets of [n]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=_default_workers())
    _add_common(p)
    p.set_defaults(func=_cmd_exp_random)
    p = sub.add_parser("scan", help="|hA| histogram over all k-subsets of [n]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--workers", type=int, default=_default_workers())
    _add_common(p)
    p.set_defaults(func=_cmd_exp_scan)
    p = sub.add_parser("minima-stats", help="first-minima statistics over random subsets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--workers", type=int, default=_default_workers())
    _add_common(p)
    p.set_defaults(func=_cmd_exp_minima)
    p = sub.add_parser("type-census", help="distinct h-types over all k-subsets of [n]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_exp_census)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (ValueError, CapExceeded, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
