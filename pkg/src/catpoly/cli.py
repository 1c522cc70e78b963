"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource limit exceeded.  Data goes to stdout, diagnostics to stderr.
Big integers are serialized as decimal strings in JSON output.
"""

import argparse
import csv
import json
import sys

from . import bijections, gfs, render, tables, words
from .errors import CatpolyError, NotCatalan, NotInDomain, ResourceLimit
from .verify import run_verify
from .words import CatalanWord, WordClass

#: Default guard rails; every one can be raised via --limit at the
#: documented cost of memory and time.
ENUM_LIMIT = 16
TABLE_LIMIT = 60
SERIES_LIMIT = 40

_GF_BUILDERS = {
    # name -> (constructor, first structural index)
    "M": (gfs.gf_motzkin, 0),
    "T": (gfs.gf_trinomial, 0),
    "S": (gfs.cf_S, 1),
    "Clast": (gfs.cf_C_last, 1),
    "Cpv": (gfs.cf_C_sper_v, 1),
    "B": (gfs.sum_B, 1),
    "H": (gfs.sum_H, 1),
    "area": (gfs.prod_area, 1),
    "inter": (gfs.prod_interior, 1),
    "h": (gfs.gf_h, 1),
    "s": (gfs.gf_s, 1),
    "u": (gfs.gf_u, 1),
    "p": (gfs.gf_p, 1),
}


def _dump(obj):
    return json.dumps(obj, separators=(",", ":"))


def _record(w: CatalanWord):
    if len(w) == 0:
        return {"word": "ε", "length": 0, "area": None, "sper": None, "inter": None, "last": None}
    rec = words.stat_record(w)
    return {
        "word": str(w),
        "length": rec.length,
        "area": rec.area,
        "sper": rec.sper,
        "inter": rec.inter,
        "last": rec.last,
    }


def _cmd_enumerate(args):
    cls = WordClass.parse(args.word_class)
    stream = words.enumerate_words(args.length, cls, args.limit)
    if args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["word", "length", "area", "sper", "inter", "last"])
        for w in stream:
            r = _record(w)
            writer.writerow([r[k] if r[k] is not None else "" for k in
                             ("word", "length", "area", "sper", "inter", "last")])
    elif args.format == "json":
        for w in stream:
            print(_dump(_record(w)))
    else:
        for w in stream:
            print(str(w))
    return 0


def _cmd_stats(args):
    w = CatalanWord.parse(args.word)
    rec = _record(w)
    if args.format == "json":
        print(_dump(rec))
    else:
        print(" ".join(f"{k}={rec[k]}" for k in ("length", "area", "sper", "inter", "last")))
    return 0


def _cmd_render(args):
    w = CatalanWord.parse(args.word)
    if len(w) == 0:
        print("ε")
        return 0
    if args.format == "svg":
        print(render.render_svg(w, args.cell_size, args.mark_interior))
    else:
        print(render.render_ascii(w, args.mark_interior))
    return 0


def _cmd_table(args):
    name = args.which
    if args.max_n > args.limit:
        raise ResourceLimit(f"table size {args.max_n} exceeds limit {args.limit}")
    if name == "c":
        table = tables.table_c(args.max_n)
    else:
        stat = {"s": "sper", "u": "area", "p": "inter"}[name]
        table = tables.table_stat(args.max_n, stat, args.limit)
    if args.format == "json":
        obj = {
            "which": name,
            "max_n": args.max_n,
            "first_index": table.first_index,
            "rows": [[str(e) for e in row] for row in table.rows],
        }
        print(_dump(obj))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        for n, row in enumerate(table.rows, start=1):
            writer.writerow([n] + row)
    else:
        for n, row in enumerate(table.rows, start=1):
            print(f"{n}: " + " ".join(str(e) for e in row))
    return 0


def _parse_at(spec):
    evals = []
    if not spec:
        return evals
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        var, _, value = part.partition("=")
        if var not in ("p", "q", "v") or value != "1":
            raise ValueError(f"--at accepts p=1, q=1, v=1; got {part!r}")
        evals.append(var)
    return evals


def _cmd_gf(args):
    builder, start = _GF_BUILDERS[args.which]
    if args.order > args.limit:
        raise ResourceLimit(f"series order {args.order} exceeds limit {args.limit}")
    series = builder(args.order + start)
    for var in _parse_at(args.at):
        series = series.eval_one(var)
    coeffs = [series.coeff(n) for n in range(start, args.order + start)]
    texts = [str(c) for c in coeffs]
    if args.format == "json":
        print(_dump({
            "which": args.which,
            "order": args.order,
            "first_power": start,
            "coefficients": texts,
        }))
    elif all(c.is_scalar() for c in coeffs):
        print(" ".join(texts))
    else:
        for n, text in enumerate(texts, start=start):
            print(f"x^{n}: {text}")
    return 0


def _cmd_bijection(args):
    w = CatalanWord.parse(args.word)
    fn = bijections.chi if args.which == "chi" else bijections.psi
    image = fn(w)
    stats_in = _record(w)
    stats_out = _record(image)
    if args.format == "json":
        print(_dump({
            "which": args.which,
            "input": stats_in,
            "image": stats_out,
        }))
    else:
        print(str(image))
        for key in ("length", "area", "sper", "inter", "last"):
            print(f"{key}: {stats_in[key]} -> {stats_out[key]}")
    return 0


def _cmd_verify(args):
    report = run_verify(args.max_n, args.max_order)
    if args.format == "json":
        print(_dump({
            "max_n": report.max_n,
            "max_order": report.max_order,
            "exit_code": report.exit_code,
            "checks": [
                {"name": c.name, "status": c.status, "detail": c.detail}
                for c in report.checks
            ],
        }))
    else:
        for c in report.checks:
            print(f"[{c.status.upper():7s}] {c.name}: {c.detail}")
        counts = report.counts()
        print(
            f"{counts['pass']} passed, {counts['fail']} failed, "
            f"{counts['skipped']} skipped"
        )
    return report.exit_code


def build_parser():
    parser = argparse.ArgumentParser(
        prog="catpoly",
        description="Exact enumeration and generating functions for "
        "Motzkin-counted Catalan bargraph polyominoes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all words of one length")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--class", dest="word_class", default="geqgeq",
                   choices=[c.value for c in WordClass])
    p.add_argument("--format", default="text", choices=["text", "json", "csv"])
    p.add_argument("--limit", type=int, default=ENUM_LIMIT,
                   help="enumeration size guard (memory/time grows fast)")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("stats", help="statistics of one word")
    p.add_argument("--word", required=True)
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("render", help="draw the polyomino of a word")
    p.add_argument("--word", required=True)
    p.add_argument("--format", default="ascii-art", choices=["ascii-art", "svg"])
    p.add_argument("--cell-size", type=int, default=20)
    p.add_argument("--mark-interior", action="store_true")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("table", help="triangular count/statistic tables")
    p.add_argument("--which", required=True, choices=["c", "s", "u", "p"])
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", default="text", choices=["text", "csv", "json"])
    p.add_argument("--limit", type=int, default=TABLE_LIMIT,
                   help="table size guard (memory/time grows fast)")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("gf", help="generating function coefficients")
    p.add_argument("--which", required=True, choices=sorted(_GF_BUILDERS))
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--at", default="",
                   help="comma-separated specializations, e.g. p=1,q=1,v=1")
    p.add_argument("--limit", type=int, default=SERIES_LIMIT,
                   help="series order guard (memory/time grows fast)")
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(func=_cmd_gf)

    p = sub.add_parser("bijection", help="apply chi or psi to a word")
    p.add_argument("--which", required=True, choices=["chi", "psi"])
    p.add_argument("--word", required=True)
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(func=_cmd_bijection)

    p = sub.add_parser("verify", help="run the full cross-check suite")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--max-order", type=int, default=20)
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (NotCatalan, NotInDomain, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CatpolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
