"""Command-line front end: ``emptybox <command> ...``.

Reports go to stdout as sorted-key JSON (or ``--format text``), diagnostics to
stderr. Exit status is 0 on success, 1 on a domain error, 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import bounds, partitions
from .exceptions import EmptyBoxError
from .finder import find_large_empty_box
from .geometry import PointSet, read_points_csv, write_points_csv
from .oracle import DEFAULT_BUDGET, max_empty_box_exact
from .pointsets import RNG_NAME, RNG_VERSION, grid, hammersley, random_uniform

BUDGET_ENV = "EMPTYBOX_BUDGET"


def _int_list(text):
    return [int(float(x)) for x in text.split(",") if x]


def _emit(report, fmt, out):
    if fmt == "text":
        for key in sorted(report):
            value = report[key]
            if isinstance(value, list) and value and isinstance(value[0], str):
                out.write(f"{key}:\n")
                out.writelines(f"  {v}\n" for v in value)
            else:
                out.write(f"{key}: {value}\n")
    else:
        out.write(json.dumps(report, sort_keys=True) + "\n")


def _add_points_source(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="point CSV file ('-' for stdin)")
    src.add_argument("--generate", choices=["hammersley", "random", "grid"])
    p.add_argument("--n", type=int, help="number of points to generate")
    p.add_argument("--d", type=int, help="dimension of generated points")
    p.add_argument("--m", type=int, help="grid points per axis")
    p.add_argument("--seed", type=int, help="seed for --generate random")


def _generated(kind, args, parser):
    if kind == "grid":
        if args.m is None or args.d is None:
            parser.error("grid generation needs --m and --d")
        return grid(args.m, args.d), {"generator": "grid", "m": args.m}
    if args.n is None or args.d is None:
        parser.error(f"{kind} generation needs --n and --d")
    if kind == "hammersley":
        return hammersley(args.n, args.d), {"generator": "hammersley"}
    if args.seed is None:
        parser.error("random generation requires --seed")
    return random_uniform(args.n, args.d, args.seed), {
        "generator": "random", "rng": RNG_NAME, "rng_version": RNG_VERSION, "seed": args.seed}


def _load_points(args, parser) -> PointSet:
    if args.input is not None:
        return read_points_csv(sys.stdin if args.input == "-" else args.input)
    return _generated(args.generate, args, parser)[0]


def _read_family(path, kind, a):
    with open(path) as fh:
        text = fh.read()
    if kind == "auto":
        kind = "partitions" if any(c in text for c in "|,") else "vectors"
    if kind == "partitions":
        return partitions.PartitionFamily.from_text(text)
    return partitions.VectorFamily.from_strings(text.splitlines(), a=a)


def _family_report(pf: partitions.PartitionFamily) -> dict:
    return {"a": pf.a, "n": pf.n, "k": pf.k, "partitions": pf.to_text().splitlines()}


def cmd_find_box(args, parser):
    S = _load_points(args, parser)
    res = find_large_empty_box(S)
    return {
        "box": res.box.to_dict(),
        "volume": res.volume,
        "certificate_case": res.certificate.case.value,
        "certificate": res.certificate.to_dict(),
        "guarantee": bounds.volume_lower_bound(S.n, S.dim),
        "n": S.n,
        "d": S.dim,
    }


def cmd_oracle(args, parser):
    S = _load_points(args, parser)
    budget = args.budget
    if budget is None:
        budget = int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))
    box = max_empty_box_exact(S, budget=budget)
    return {"box": box.to_dict(), "volume": box.volume, "n": S.n, "d": S.dim,
            "slicing_bound": 1.0 / (S.n + 1)}


def cmd_generate(args, parser):
    S, meta = _generated(args.kind, args, parser)
    if args.output:
        write_points_csv(S, args.output, meta)
    else:
        write_points_csv(S, sys.stdout, meta)
    return None


def cmd_partitions(args, parser):
    verb = args.verb
    if verb == "verify":
        fam = _read_family(args.input, args.kind, args.a)
        rep = partitions.verify_perfect(fam, args.t)
        out = {"perfect": rep.is_perfect, "t": rep.t}
        if rep.witness is not None:
            combo, alpha = rep.witness
            out["witness"] = {"vectors": list(combo), "uncovered": "".join(map(str, alpha))}
        return out
    if verb == "construct-optimal":
        return _family_report(partitions.construct_binary_optimal(args.n))
    if verb == "construct-block":
        return _family_report(partitions.construct_block_family(args.a, args.n))
    if verb == "random":
        vf = partitions.random_perfect_family(args.a, args.t, args.n, args.k, args.seed,
                                              args.max_attempts)
        return {"a": vf.a, "n": vf.n, "k": vf.k, "seed": args.seed, "rng": RNG_NAME,
                "vectors": vf.to_strings()}
    if verb == "p":
        if args.exact:
            return {"p": partitions.brute_force_p(args.a, args.t, args.n, args.budget)}
        rep = bounds.p_bounds(args.a, args.t, args.n)
        return {"lower": rep.lower, "upper": rep.upper}
    if verb == "lym":
        fam = _read_family(args.input, args.kind, args.a)
        return {"lym_sum": partitions.lym_check(fam)}
    raise AssertionError(verb)


def cmd_bounds(args, parser):
    verb = args.verb
    if verb == "volume-lower":
        return {"volume_lower_bound": bounds.volume_lower_bound(args.n, args.d),
                "slicing_bound": bounds.slicing_lower_bound(args.n)}
    if verb == "volume-upper":
        return {"constant": bounds.volume_upper_bound_const(args.d)}
    if verb == "p-sandwich":
        return bounds.p_bounds(args.a, args.t, args.n).to_dict()
    if verb == "table1":
        return {"table": bounds.table1()}
    raise AssertionError(verb)


def cmd_bench(args, parser):
    rows = ["n,d,millis"]
    for d in args.d:
        for n in args.n:
            S = random_uniform(n, d, args.seed)
            find_large_empty_box(S)  # warm-up
            best = float("inf")
            for _ in range(args.repeats):
                t0 = time.perf_counter()
                find_large_empty_box(S)
                best = min(best, time.perf_counter() - t0)
            rows.append(f"{n},{d},{best * 1000:.3f}")
    sys.stdout.write("\n".join(rows) + "\n")
    return None


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["json", "text"], default="json")

    parser = argparse.ArgumentParser(prog="emptybox", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("find-box", parents=[fmt], help="fast large empty box")
    _add_points_source(p)
    p.set_defaults(func=cmd_find_box)

    p = sub.add_parser("oracle", parents=[fmt], help="exact maximum empty box")
    _add_points_source(p)
    p.add_argument("--budget", type=int, help=f"candidate budget (env {BUDGET_ENV})")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("generate", help="emit a point CSV")
    p.add_argument("kind", choices=["hammersley", "random", "grid"])
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("partitions", help="perfect vector sets / overlapping partitions")
    verbs = p.add_subparsers(dest="verb", required=True)
    v = verbs.add_parser("verify", parents=[fmt])
    v.add_argument("--input", required=True)
    v.add_argument("--kind", choices=["auto", "vectors", "partitions"], default="auto")
    v.add_argument("--a", type=int, default=2)
    v.add_argument("--t", type=int, default=2)
    v = verbs.add_parser("construct-optimal", parents=[fmt])
    v.add_argument("--n", type=int, required=True)
    v = verbs.add_parser("construct-block", parents=[fmt])
    v.add_argument("--a", type=int, required=True)
    v.add_argument("--n", type=int, required=True)
    v = verbs.add_parser("random", parents=[fmt])
    for name in ("a", "t", "n", "k", "seed"):
        v.add_argument(f"--{name}", type=int, required=True)
    v.add_argument("--max-attempts", type=int, default=100)
    v = verbs.add_parser("p", parents=[fmt])
    for name in ("a", "t", "n"):
        v.add_argument(f"--{name}", type=int, required=True)
    v.add_argument("--exact", action="store_true", help="brute force instead of bounds")
    v.add_argument("--budget", type=int, default=10 ** 6)
    v = verbs.add_parser("lym", parents=[fmt])
    v.add_argument("--input", required=True)
    v.add_argument("--kind", choices=["auto", "vectors", "partitions"], default="auto")
    v.add_argument("--a", type=int, default=2)
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("bounds", help="closed-form bounds")
    verbs = p.add_subparsers(dest="verb", required=True)
    v = verbs.add_parser("volume-lower", parents=[fmt])
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--d", type=int, required=True)
    v = verbs.add_parser("volume-upper", parents=[fmt])
    v.add_argument("--d", type=int, required=True)
    v = verbs.add_parser("p-sandwich", parents=[fmt])
    for name in ("a", "t", "n"):
        v.add_argument(f"--{name}", type=int, required=True)
    verbs.add_parser("table1", parents=[fmt])
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("bench", help="time find-box over a sweep; CSV n,d,millis")
    p.add_argument("--n", type=_int_list, default=[250_000, 500_000, 1_000_000])
    p.add_argument("--d", type=_int_list, default=[64])
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--repeats", type=int, default=15)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = args.func(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (EmptyBoxError, OSError) as exc:
        print(f"emptybox: error: {exc}", file=sys.stderr)
        return 1
    if report is not None:
        _emit(report, getattr(args, "format", "json"), sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
