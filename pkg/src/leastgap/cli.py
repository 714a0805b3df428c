"""Command-line front end: compute, table, verify, cache, bench.

Exit codes: 0 success, 1 verification failure or route disagreement,
2 usage error, 3 I/O or cache-format error.
"""

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import counting as ct
from . import series
from . import verify as vf

CACHE_ENV = "LEASTGAP_PCACHE"
ENUM_LIMIT = 60

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

# name -> (function, takes r, modes)
SEQUENCES = {
    "p": (ct.p, False, ("fast", "oracle", "dp")),
    "q": (ct.q_distinct, False, ("fast", "oracle")),
    "S": (ct.S_r, True, ("fast", "oracle", "dp")),
    "G": (ct.G_r, True, ("fast", "oracle", "dp")),
    "U": (ct.U_r, True, ("fast", "oracle", "dp")),
    "L": (ct.L, False, ("fast", "oracle", "dp")),
    "R": (ct.R_nonneg_rank, False, ("fast", "oracle", "dp")),
    "C": (ct.C_nonneg_crank, False, ("fast", "oracle", "dp")),
    "pe": (ct.p_even_parts, False, ("fast", "oracle", "dp")),
    "po": (ct.p_odd_parts, False, ("fast", "oracle", "dp")),
}


class UsageError(Exception):
    pass


class Disagreement(Exception):
    pass


def parse_rset(text):
    """'1..4' -> (1, 2, 3, 4); '1,3,5' -> (1, 3, 5); '2' -> (2,)."""
    out = set()
    try:
        for chunk in text.split(","):
            chunk = chunk.strip()
            if ".." in chunk:
                lo, hi = chunk.split("..")
                out.update(range(int(lo), int(hi) + 1))
            else:
                out.add(int(chunk))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad r set {text!r}; use e.g. 1..6 or 1,2,5") from None
    if not out or min(out) < 1:
        raise argparse.ArgumentTypeError(f"r values must be >= 1 in {text!r}")
    return tuple(sorted(out))


def _evaluate(seq, n, r, mode):
    fn, takes_r, modes = SEQUENCES[seq]
    args = (n, r) if takes_r else (n,)
    if mode != "both":
        if mode not in modes:
            raise UsageError(f"sequence {seq} has no {mode} mode (choose from {', '.join(modes)})")
        return fn(*args, mode=mode)
    values = {"fast": fn(*args, mode="fast")}
    if "dp" in modes:
        values["dp"] = fn(*args, mode="dp")
    if n <= ENUM_LIMIT:
        values["oracle"] = fn(*args, mode="oracle")
    if len(set(values.values())) != 1:
        detail = ", ".join(f"{k}={v}" for k, v in values.items())
        raise Disagreement(f"{seq}({n}{', r=' + str(r) if takes_r else ''}) routes disagree: {detail}")
    return values["fast"]


def _check_seq(args):
    if args.sequence not in SEQUENCES:
        raise UsageError(f"unknown sequence {args.sequence!r}; choose from {', '.join(SEQUENCES)}")
    takes_r = SEQUENCES[args.sequence][1]
    if takes_r and args.r is None:
        raise UsageError(f"sequence {args.sequence} requires --r")
    if not takes_r and args.r is not None:
        raise UsageError(f"sequence {args.sequence} takes no --r")
    if args.r is not None and args.r < 1:
        raise UsageError("--r must be >= 1")


def cmd_compute(args, out):
    _check_seq(args)
    if args.n < 0 and args.sequence != "p":
        raise UsageError("n must be non-negative")
    out.write(f"{_evaluate(args.sequence, args.n, args.r, args.mode)}\n")
    return EXIT_OK


def cmd_table(args, out):
    _check_seq(args)
    if args.n_max < 0:
        raise UsageError("n_max must be non-negative")
    if args.mode in ("dp", "both"):
        # build the largest table once; smaller n are then slices of it
        _evaluate(args.sequence, args.n_max, args.r, "dp" if "dp" in SEQUENCES[args.sequence][2] else "fast")
    rows = [(n, _evaluate(args.sequence, n, args.r, args.mode)) for n in range(args.n_max + 1)]
    if args.format == "csv":
        out.write("n,value\n")
        out.writelines(f"{n},{v}\n" for n, v in rows)
    elif args.format == "json":
        out.write(json.dumps([{"n": n, "value": str(v)} for n, v in rows], separators=(",", ":")) + "\n")
    else:
        width = len(str(args.n_max))
        out.writelines(f"{n:>{width}}  {v}\n" for n, v in rows)
    return EXIT_OK


def cmd_verify(args, out):
    known = [d.id for d in vf.registry()]
    if args.ids == ["all"]:
        ids = known
    else:
        ids = args.ids
        for i in ids:
            try:
                vf.lookup(i)
            except KeyError as exc:
                raise UsageError(str(exc.args[0])) from None
    r_set = args.r

    def run(i):
        desc = vf.lookup(i)
        return vf.verify(i, args.n_max, r_set if desc.parameterized else None)

    # buffered per identity, emitted in the requested order
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(run, ids))
    else:
        reports = [run(i) for i in ids]

    if args.format == "json":
        out.write(json.dumps([rep.to_dict() for rep in reports], indent=2) + "\n")
    elif args.format == "csv":
        out.write("id,status,n_max,r_range,mismatch_n,mismatch_r,lhs,rhs,elapsed\n")
        for rep in reports:
            m = rep.first_mismatch or {}
            rr = vf._fmt_rset(rep.r_range) if rep.r_range else ""
            out.write(f"{rep.id},{rep.status},{rep.n_range[1]},{rr},{m.get('n', '')},"
                      f"{'' if m.get('r') is None else m['r']},{m.get('lhs', '')},{m.get('rhs', '')},"
                      f"{rep.elapsed:.6f}\n")
    else:
        for rep in reports:
            out.write(rep.summary() + "\n")
    failed = [rep.id for rep in reports if not rep.passed]
    if failed:
        sys.stderr.write(f"verification failed: {failed[0]}\n")
        return EXIT_FAIL
    return EXIT_OK


def _cache_path(args):
    path = args.path or os.environ.get(CACHE_ENV)
    if not path:
        raise UsageError(f"no cache path given and ${CACHE_ENV} is unset")
    return path


def load_cache(path):
    with open(path, encoding="ascii") as fh:
        text = fh.read()
    return ct.MEMO.loads(text)


def cmd_cache(args, out):
    if args.action == "info":
        if args.path:
            load_cache(args.path)
        out.write(f"high_water {ct.MEMO.high_water}\n")
        return EXIT_OK
    path = _cache_path(args)
    if args.action == "load":
        max_n = load_cache(path)
        out.write(f"loaded p(0..{max_n}) from {path}; high_water {ct.MEMO.high_water}\n")
        return EXIT_OK
    if args.n_max is not None:
        ct.MEMO.extend(args.n_max)
    with open(path, "w", encoding="ascii") as fh:
        fh.write(ct.MEMO.dumps())
    out.write(f"saved p(0..{ct.MEMO.high_water}) to {path}\n")
    return EXIT_OK


def _timed(label, fn, out):
    t0 = time.perf_counter()
    fn()
    out.write(f"{label:<36} {time.perf_counter() - t0:9.4f}s\n")


def cmd_bench(args, out):
    table = ct.MemoTable()
    _timed(f"p(n) fill to {args.n_max}", lambda: table.extend(args.n_max), out)
    _timed(f"gen_S_r expansion r=1..6, N={args.n_max}",
           lambda: [series.gen_S_r(r, args.n_max) for r in range(1, 7)], out)
    _timed(f"verify all, n<={args.n_max}, r=1..6", lambda: vf.verify_all(args.n_max), out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="leastgap", description="Exact partition statistics, least r-gaps and q-series identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    modes = ("fast", "oracle", "dp", "both")
    c = sub.add_parser("compute", help="print one exact value")
    c.add_argument("sequence", help=f"one of {', '.join(SEQUENCES)}")
    c.add_argument("n", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--mode", choices=modes, default="fast")
    c.set_defaults(func=cmd_compute)

    t = sub.add_parser("table", help="print values for n = 0..n_max")
    t.add_argument("sequence", help=f"one of {', '.join(SEQUENCES)}")
    t.add_argument("n_max", type=int)
    t.add_argument("--r", type=int)
    t.add_argument("--mode", choices=modes, default="fast")
    t.add_argument("--format", choices=("csv", "json", "plain"), default="csv")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="check registry identities coefficient by coefficient")
    v.add_argument("ids", nargs="*", default=["all"], help="identity ids, or 'all'")
    v.add_argument("--n-max", type=int, default=300)
    v.add_argument("--r", type=parse_rset, default=None, help="e.g. 1..6 or 1,2,5 (default 1..6)")
    v.add_argument("--format", choices=("csv", "json", "plain"), default="plain")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("cache", help=f"manage the p(n) cache file (default path from ${CACHE_ENV})")
    k.add_argument("action", choices=("load", "save", "info"))
    k.add_argument("path", nargs="?")
    k.add_argument("--n-max", type=int, help="fill p(n) up to this n before saving")
    k.set_defaults(func=cmd_cache)

    b = sub.add_parser("bench", help="wall-clock timings")
    b.add_argument("--n-max", type=int, default=300)
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        env_path = os.environ.get(CACHE_ENV)
        if env_path and args.command != "cache" and os.path.exists(env_path):
            load_cache(env_path)
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except Disagreement as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL
    except ct.CacheFormatError as exc:
        sys.stderr.write(f"cache error: {exc}\n")
        return EXIT_IO
    except OSError as exc:
        sys.stderr.write(f"I/O error: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
