"""Command line front-end.

Subcommands: domres, branch, burge, polytope, verify-bijection,
verify-characters, verify.  Exit codes: 0 success, 1 usage error,
2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .burge import array_to_even_tableau, even_tableau_to_array, validate_special_array
from .characters import weyl_dim_sl, weyl_dim_sp
from .core import ShapeError, normalize_partition, tableau_to_json
from .paths import enumerate_domres, path_of
from .updown import phi, q_symbols
from .verify import (
    Report,
    branching_tables,
    full_sweep,
    partitions_up_to,
    verify_bijection,
    verify_characters,
)

USAGE_ERROR = 1
VERIFY_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(USAGE_ERROR)


def parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
        return normalize_partition(parts)
    except (ValueError, ShapeError) as exc:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r} ({exc})")


def parse_int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


class Emitter:
    """Writes records as JSON lines or CSV to stdout or a file."""

    def __init__(self, fmt: str, path: str | None):
        self.fmt = fmt
        self.stream = open(path, "w") if path else sys.stdout
        self._owned = path is not None
        self._csv = None

    def emit(self, record: dict) -> None:
        if self.fmt == "json":
            json.dump(record, self.stream, sort_keys=True)
            self.stream.write("\n")
        else:
            if self._csv is None:
                self._csv = csv.DictWriter(self.stream, fieldnames=sorted(record))
                self._csv.writeheader()
            self._csv.writerow({k: json.dumps(record.get(k), sort_keys=True)
                                for k in self._csv.fieldnames})

    def close(self) -> None:
        if self._owned:
            self.stream.close()


def default_jobs() -> int:
    return int(os.environ.get("SYMPBRANCH_JOBS", "1"))


def add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--output", default=None)


def build_parser() -> _Parser:
    parser = _Parser(prog="sympbranch")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("domres", parents=[], help="enumerate restricted-dominant tableaux")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_partition, required=True)
    p.add_argument("--mu", type=parse_partition, default=None)
    add_common(p)

    p = subs.add_parser("branch", help="branching table by one or all methods")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_partition, required=True)
    p.add_argument("--method", choices=("paths", "sundaram", "character", "all"),
                   default="all")
    add_common(p)

    p = subs.add_parser("burge", help="map a special two-line array to its even tableau")
    p.add_argument("--top", type=parse_int_list, required=True)
    p.add_argument("--bottom", type=parse_int_list, required=True)
    add_common(p)

    p = subs.add_parser("polytope", help="H-representation and lattice points")
    p.add_argument("--kind", choices=("domres", "lr"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_partition, required=True)
    p.add_argument("--mu", type=parse_partition, required=True)
    p.add_argument("--points", action="store_true")
    add_common(p)

    p = subs.add_parser("verify-bijection", help="bijection certificates over a sweep")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-size", type=int, default=8)
    add_common(p)

    p = subs.add_parser("verify-characters", help="triple-agreement records over a sweep")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-size", type=int, default=8)
    add_common(p)

    p = subs.add_parser("verify", help="full verification sweep")
    p.add_argument("--n-values", type=parse_int_list, default=(2, 3))
    p.add_argument("--max-size", type=int, default=8)
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.add_argument("--inject-fault", action="store_true")
    add_common(p)

    return parser


def cmd_domres(args, emit) -> int:
    for t in enumerate_domres(args.lam, args.n, args.mu):
        p = path_of(t, args.n)
        emit({
            "n": args.n,
            "lambda": list(args.lam),
            "mu": list(normalize_partition(p.endpoint)),
            "tableau": tableau_to_json(t),
            "word": list(p.word),
            "prefix": [list(v) for v in p.prefix],
        })
    return 0


def cmd_branch(args, emit) -> int:
    methods = ("paths", "sundaram", "character") if args.method == "all" else (args.method,)
    tables = dict(zip(("paths", "sundaram", "character"),
                      branching_tables(args.lam, args.n)))
    for method in methods:
        table = tables[method]
        for mu in sorted(table, reverse=True):
            emit({"n": args.n, "lambda": list(args.lam), "method": method,
                  "mu": list(mu), "multiplicity": table[mu]})
    if args.method == "all":
        picked = [tables[m] for m in ("paths", "sundaram", "character")]
        if not picked[0] == picked[1] == picked[2]:
            mus = sorted(set().union(*picked), reverse=True)
            for mu in mus:
                counts = [t.get(mu, 0) for t in picked]
                if len(set(counts)) > 1:
                    emit({"disagreement": {"mu": list(mu), "paths": counts[0],
                                           "sundaram": counts[1], "character": counts[2]}})
            return VERIFY_ERROR
    return 0


def cmd_burge(args, emit) -> int:
    validate_special_array(args.top, args.bottom)
    tab = array_to_even_tableau(args.top, args.bottom)
    back = even_tableau_to_array(tab)
    emit({
        "array": {"top": list(args.top), "bottom": list(args.bottom)},
        "tableau": {"rows": [list(r) for r in tab]},
        "round_trip": back == (args.top, args.bottom),
    })
    return 0 if back == (args.top, args.bottom) else VERIFY_ERROR


def cmd_polytope(args, emit) -> int:
    from .polytopes import domres_h_rep, domres_lattice_points, lr_h_rep, lr_lattice_points

    if args.kind == "domres":
        h = domres_h_rep(args.lam, args.mu, args.n)
        points = domres_lattice_points(args.lam, args.mu, args.n) if args.points else None
    else:
        h = lr_h_rep(args.lam, args.mu, args.n)
        points = lr_lattice_points(args.lam, args.mu, args.n) if args.points else None
    record = {"kind": args.kind, "n": args.n, "lambda": list(args.lam),
              "mu": list(args.mu)}
    record.update(h.to_json())
    if points is not None:
        record["points"] = [list(p) for p in sorted(points)]
    emit(record)
    return 0


def cmd_verify_bijection(args, emit) -> int:
    report = Report()
    verify_bijection(args.n, args.max_size, report)
    for lam in partitions_up_to(args.max_size, 2 * args.n - 1):
        for t in enumerate_domres(lam, args.n):
            bundle = q_symbols(t, args.n)
            record = {"n": args.n, "lambda": list(lam),
                      "tableau": tableau_to_json(t)}
            record.update(bundle.to_json())
            record["phi"] = phi(t, args.n).to_json()
            emit(record)
    for check in report.failures():
        emit({"failed": check.name, "detail": check.detail})
    return 0 if report.ok else VERIFY_ERROR


def cmd_verify_characters(args, emit) -> int:
    ok = True
    for lam in partitions_up_to(args.max_size, 2 * args.n - 1):
        paths_t, sund_t, char_t = branching_tables(lam, args.n)
        agree = paths_t == sund_t == char_t
        ok = ok and agree
        emit({
            "n": args.n,
            "lambda": list(lam),
            "paths": _table_json(paths_t),
            "sundaram": _table_json(sund_t),
            "character": _table_json(char_t),
            "agree": agree,
        })
    report = Report()
    verify_characters((args.n,), args.max_size, report)
    for check in report.failures():
        emit({"failed": check.name, "detail": check.detail})
        ok = False
    return 0 if ok else VERIFY_ERROR


def _table_json(table: dict) -> list:
    return [{"mu": list(mu), "multiplicity": table[mu]}
            for mu in sorted(table, reverse=True)]


def cmd_verify(args, emit) -> int:
    if args.jobs > 1:
        # warm the memoized branching tables concurrently; checks stay ordered
        items = [(lam, n) for n in args.n_values
                 for lam in partitions_up_to(args.max_size, 2 * n - 1)]
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            list(pool.map(lambda it: branching_tables(it[0], it[1]), items))
    report = full_sweep(tuple(args.n_values), args.max_size, fault=args.inject_fault)
    for check in report.checks:
        if not check.passed:
            emit({"failed": check.name, "detail": check.detail})
    emit({"summary": report.summary(), "ok": report.ok})
    return 0 if report.ok else VERIFY_ERROR


HANDLERS = {
    "domres": cmd_domres,
    "branch": cmd_branch,
    "burge": cmd_burge,
    "polytope": cmd_polytope,
    "verify-bijection": cmd_verify_bijection,
    "verify-characters": cmd_verify_characters,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    emitter = Emitter(args.format, args.output)
    try:
        return HANDLERS[args.command](args, emitter.emit)
    except (ShapeError, ValueError) as exc:
        print(f"sympbranch: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    finally:
        emitter.close()


if __name__ == "__main__":
    sys.exit(main())
