"""Command line front end.

Exit codes: 0 success, 1 verification or bench-invariant failure, 2 usage
error, 3 polytopes of different dimensions, 4 oracle size cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import multiprocessing as mp
import os
import sys
import time

from .cone import DimensionMismatchError
from .cyclic import cyclic_supports, reduced_cyclic_supports
from .engine import PruneMode, find_pretropisms
from .oracle import DEFAULT_CAP, OracleTooLargeError, brute_force_pretropisms
from .polytope import build_polytope, load_supports

FAMILIES = {"cyclic": cyclic_supports, "reduced-cyclic": reduced_cyclic_supports}
BENCH_HEADER = ["n", "v_int", "v_con", "v_sum", "h_int", "h_con", "h_sum", "ratio"]

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DIMENSION = 3
EXIT_ORACLE_CAP = 4


def _parse_order(text: str | None, count: int) -> list[int]:
    if text is None:
        return list(range(count))
    if text == "reverse":
        return list(range(count))[::-1]
    order = [int(x) for x in text.split(",")]
    if sorted(order) != list(range(count)):
        raise ValueError(f"--order must be a permutation of 0..{count - 1}")
    return order


def _load(args, parser) -> list:
    if args.family:
        if args.inputs:
            parser.error("give either input files or --family, not both")
        if args.n is None or args.n < 3:
            parser.error("--family needs --n >= 3")
        supports = list(FAMILIES[args.family](args.n).supports)
    else:
        if not args.inputs:
            parser.error("no input supports given")
        supports = []
        for path in args.inputs:
            supports.extend(load_supports(path))
    try:
        order = _parse_order(args.order, len(supports))
    except ValueError as exc:
        parser.error(str(exc))
    return [build_polytope(supports[i]) for i in order]


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("inputs", nargs="*", help="support JSON files")
    p.add_argument("--family", choices=sorted(FAMILIES))
    p.add_argument("--n", type=int)
    p.add_argument("--order", help="comma separated polytope permutation, or 'reverse'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="giftwrap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write the supports of a benchmark system")
    g.add_argument("family", choices=sorted(FAMILIES))
    g.add_argument("n", type=int)
    g.add_argument("--out", default=".", help="output directory")

    r = sub.add_parser("pretropisms", help="compute pretropisms")
    _add_input_args(r)
    r.add_argument("--mode", default="horizontal",
                   choices=[m.value for m in PruneMode] + ["oracle"])
    r.add_argument("--lower-hull", action="store_true")
    r.add_argument("--prune-contained", action="store_true",
                   help="horizontal mode: also drop cones contained in other cones")
    r.add_argument("--workers", type=int, default=1)
    r.add_argument("--format", default="json", choices=["json", "csv", "table"])

    b = sub.add_parser("bench", help="vertical vs horizontal work per n")
    b.add_argument("family", choices=sorted(FAMILIES))
    b.add_argument("n_min", type=int)
    b.add_argument("n_max", type=int)
    b.add_argument("--modes", default="vertical,horizontal")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("--timeout-secs", type=float, default=600.0)
    b.add_argument("--format", default="csv", choices=["csv", "table"])

    v = sub.add_parser("verify", help="compare all modes against the brute-force oracle")
    _add_input_args(v)
    v.add_argument("--expected", help="JSON fixture with a 'rays' array to compare against as well")
    return parser


def cmd_generate(args, parser, out) -> int:
    if args.n < 3:
        parser.error("n must be at least 3")
    system = FAMILIES[args.family](args.n)
    os.makedirs(args.out, exist_ok=True)
    for k, s in enumerate(system.supports, start=1):
        path = os.path.join(args.out, f"{args.family}-{args.n}-eq{k}.json")
        with open(path, "w") as fh:
            json.dump(s.to_json(), fh)
            fh.write("\n")
        print(path, file=out)
    return 0


def _format_report(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["validated"] + [f"x{i + 1}" for i in range(len(doc["rays"][0]) if doc["rays"] else 0)])
        for r, ok in zip(doc["rays"], doc["validated"]):
            w.writerow([int(ok)] + r)
        return buf.getvalue().rstrip("\n")
    st = doc["stats"]
    lines = [f"mode: {doc['mode']}", f"rays: {len(doc['rays'])}",
             f"intersections: {st['intersections']}  containments: {st['containments']}  sum: {st['sum']}"]
    for lvl in st["per_level"]:
        lines.append(f"  level {lvl['level']}: {lvl['intersections']} + {lvl['containments']} = {lvl['sum']}")
    lines += [" ".join(str(x) for x in r) + ("" if ok else "  (not validated)")
              for r, ok in zip(doc["rays"], doc["validated"])]
    lines.append(f"wallclock_ms: {doc['wallclock_ms']:.1f}")
    return "\n".join(lines)


def cmd_pretropisms(args, parser, out) -> int:
    if args.workers < 1:
        parser.error("--workers must be >= 1")
    polys = _load(args, parser)
    start = time.perf_counter()
    if args.mode == "oracle":
        res = brute_force_pretropisms(polys, cap=args.oracle_cap)
        doc = {"mode": "oracle", "rays": [list(r) for r in res.rays],
               "validated": [True] * len(res.rays),
               "stats": {"intersections": res.intersections, "containments": 0,
                         "sum": res.intersections, "per_level": []},
               "tuples_examined": res.tuples_examined}
    else:
        report = find_pretropisms(polys, args.mode, lower_hull=args.lower_hull, seed=args.seed,
                                  workers=args.workers, prune_contained=args.prune_contained)
        doc = {"mode": report.mode.value, "lower_hull": report.lower_hull,
               "rays": [list(r) for r in report.rays], "validated": report.validated,
               "stats": report.stats.to_json()}
    doc["wallclock_ms"] = (time.perf_counter() - start) * 1000.0
    print(_format_report(doc, args.format), file=out)
    return 0


def _bench_worker(family, n, mode, seed, workers, conn):
    polys = [build_polytope(s) for s in FAMILIES[family](n).supports]
    st = find_pretropisms(polys, mode, seed=seed, workers=workers).stats
    conn.send((st.intersections, st.containments, st.sum))
    conn.close()


def _bench_run(family, n, mode, seed, workers, timeout):
    recv, send = mp.Pipe(duplex=False)
    proc = mp.Process(target=_bench_worker, args=(family, n, mode, seed, workers, send))
    proc.start()
    send.close()
    result = recv.recv() if recv.poll(timeout) else None
    if result is None:
        proc.terminate()
    proc.join()
    return result


def cmd_bench(args, parser, out) -> int:
    modes = {m.strip() for m in args.modes.split(",") if m.strip()}
    if not modes <= {"vertical", "horizontal"}:
        parser.error("--modes accepts vertical and horizontal")
    if args.n_min < 3 or args.n_max < args.n_min:
        parser.error("need 3 <= n_min <= n_max")
    rows = []
    violated = []
    for n in range(args.n_min, args.n_max + 1):
        row = [n]
        sums = {}
        for mode in ("vertical", "horizontal"):
            if mode not in modes:
                row += ["-"] * 3
                continue
            res = _bench_run(args.family, n, mode, args.seed, args.workers, args.timeout_secs)
            if res is None:
                row += ["timeout"] * 3
            else:
                row += list(res)
                sums[mode] = res[2]
        if len(sums) == 2:
            ratio = sums["vertical"] / sums["horizontal"] if sums["horizontal"] else float("inf")
            row.append(f"{ratio:.5f}")
            if ratio < 1:
                violated.append(n)
        else:
            row.append("timeout" if len(modes) == 2 else "-")
        rows.append(row)
        if args.format == "csv" and len(rows) == 1:
            print(",".join(BENCH_HEADER), file=out)
        if args.format == "csv":
            print(",".join(str(x) for x in row), file=out)
        out.flush()
    if args.format == "table":
        widths = [max(len(str(r[i])) for r in rows + [BENCH_HEADER]) for i in range(len(BENCH_HEADER))]
        for r in [BENCH_HEADER] + rows:
            print("  ".join(str(x).rjust(w) for x, w in zip(r, widths)), file=out)
    if violated:
        print(f"error: horizontal did more work than vertical for n = {violated}", file=sys.stderr)
        return EXIT_FAIL
    return 0


def cmd_verify(args, parser, out) -> int:
    polys = _load(args, parser)
    sets = {}
    for mode in PruneMode:
        sets[mode.value] = find_pretropisms(polys, mode, seed=args.seed).validated_rays
    sets["oracle"] = brute_force_pretropisms(polys, cap=args.oracle_cap).rays
    if args.expected:
        with open(args.expected) as fh:
            sets["expected"] = sorted(tuple(r) for r in json.load(fh)["rays"])
    reference = set(sets["oracle"])
    ok = True
    for name, rays in sets.items():
        got = set(rays)
        if got == reference:
            continue
        ok = False
        for r in sorted(reference - got):
            print(f"{name}: missing {list(r)}", file=out)
        for r in sorted(got - reference):
            print(f"{name}: extra {list(r)}", file=out)
    print(("PASS" if ok else "FAIL") + f": {len(reference)} rays, sources {', '.join(sets)}", file=out)
    return 0 if ok else EXIT_FAIL


COMMANDS = {"generate": cmd_generate, "pretropisms": cmd_pretropisms,
            "bench": cmd_bench, "verify": cmd_verify}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, parser, out)
    except DimensionMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except OracleTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE_CAP


if __name__ == "__main__":
    sys.exit(main())
