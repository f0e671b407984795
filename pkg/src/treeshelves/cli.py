"""Command-line front end.

Subcommands: count, enumerate, distribution, popularity, bijection,
verify, asympt, perm.  Exit status 0 on success, 1 when a verification
suite finds a mismatch, 2 on usage errors.  Big integers are always
printed in full as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Iterator, Sequence

from . import asymptotics, bijections, series
from .patterns import (
    CONSTRUCTIVE_PATTERNS,
    PatternId,
    ShelfSurvey,
    avoids,
    generate_avoiders,
)
from .shelf import (
    EnumerationLimitError,
    enumerate_shelves,
    parse_shelf,
    permutation_to_shelf,
    render_shelf,
    shelf_to_permutation,
)

CLASS_NAMES = ("all", "l-then-r", "ll", "siblings-inc", "rr", "r-then-l", "siblings-dec")


def _class_spec(name: str) -> tuple[PatternId | None, PatternId | None, bool]:
    """(actual pattern or None, series base pattern or None, mirrored)."""
    if name == "all":
        return None, None, False
    p = PatternId.from_name(name)
    if p in CONSTRUCTIVE_PATTERNS:
        return p, p, False
    return p, p.mirror_pattern, True


def _read_lines(path: str) -> Iterator[str]:
    stream = sys.stdin if path == "-" else open(path, encoding="utf-8")
    try:
        for line in stream:
            line = line.strip()
            if line:
                yield line
    finally:
        if stream is not sys.stdin:
            stream.close()


def _emit_sequence(args: argparse.Namespace, values: list[int]) -> None:
    if args.format == "json":
        print(json.dumps({"class": args.cls, "values": [str(v) for v in values]}))
    elif args.format == "bfile":
        for n, v in enumerate(values):
            print(n, v)
    else:
        print(",".join(str(v) for v in values))


# ── count ─────────────────────────────────────────────────────────────────


def _cmd_count(args: argparse.Namespace) -> int:
    actual, base, _ = _class_spec(args.cls)
    n_max = args.n_max
    if args.method == "series":
        values = series.series_counts(base, n_max)
    elif args.method == "grammar":
        if actual is None:
            values = [sum(1 for _ in enumerate_shelves(n, ordered=False)) for n in range(n_max + 1)]
        else:
            values = [sum(1 for _ in generate_avoiders(n, actual)) for n in range(n_max + 1)]
    else:
        values = [ShelfSurvey(n).count(actual) for n in range(n_max + 1)]
    _emit_sequence(args, values)
    return 0


# ── popularity ────────────────────────────────────────────────────────────


def _recurrence_popularity(cls: str, n_max: int) -> list[int]:
    if cls == "all":
        return [series.lah_number(n) for n in range(n_max + 1)]
    if cls in ("l-then-r", "r-then-l"):
        b = series.bell_numbers(n_max + 1)
        pops = [(n + 1) * b[n] - b[n + 1] for n in range(n_max + 1)]
        if cls == "l-then-r":
            return pops
        return [0 if n == 0 else (n - 1) * b[n] - pops[n] for n in range(n_max + 1)]
    if cls in ("ll", "rr"):
        e = series.euler_numbers(n_max + 1)
        pops = [(n + 1) * e[n] - e[n + 1] for n in range(n_max + 1)]
        if cls == "ll":
            return pops
        return [0 if n == 0 else (n - 1) * e[n] - pops[n] for n in range(n_max + 1)]
    raise ValueError(f"no closed recurrence for class {cls!r}")


def _cmd_popularity(args: argparse.Namespace) -> int:
    actual, base, mirrored = _class_spec(args.cls)
    n_max = args.n_max
    if args.method == "series":
        if mirrored:
            values = series.mirror_popularity_series(base, n_max)
        else:
            values = series.popularity_series(base, n_max)
    elif args.method == "recurrence":
        values = _recurrence_popularity(args.cls, n_max)
    else:
        values = [ShelfSurvey(n).popularity(actual) for n in range(n_max + 1)]
    _emit_sequence(args, values)
    return 0


# ── distribution ──────────────────────────────────────────────────────────


def _cmd_distribution(args: argparse.Namespace) -> int:
    _, base, mirrored = _class_spec(args.cls)
    table = series.distribution_series(base, args.n_max)
    if mirrored:
        table = series.mirror_distribution_table(table)
    rows = [list(row.integer_coeffs()) for row in table]
    if args.format == "json":
        print(json.dumps({"class": args.cls,
                          "rows": [[str(c) for c in row] for row in rows]}))
    else:
        for row in rows:
            print(",".join(str(c) for c in row) if row else "0")
    return 0


# ── enumerate ─────────────────────────────────────────────────────────────


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.avoid is None:
        shelves = enumerate_shelves(args.n)
    else:
        p = PatternId.from_name(args.avoid)
        shelves = (t for t in enumerate_shelves(args.n) if avoids(t, p))
    rendered = [render_shelf(t) for t in shelves]
    if args.format == "json":
        print(json.dumps({"n": args.n, "shelves": rendered}))
    else:
        for text in rendered:
            print(text)
    return 0


# ── bijection / perm ──────────────────────────────────────────────────────


def _cmd_bijection(args: argparse.Namespace) -> int:
    fwd = args.direction == "fwd"
    for line in _read_lines(args.input):
        if args.which == "partition":
            if fwd:
                out = render_shelf(bijections.partition_to_shelf(bijections.parse_partition(line)))
            else:
                out = bijections.render_partition(bijections.shelf_to_partition(parse_shelf(line)))
        elif args.which == "jtree":
            if fwd:
                out = render_shelf(bijections.jtree_to_shelf(bijections.parse_jtree(line)))
            else:
                out = bijections.render_jtree(bijections.shelf_to_jtree(parse_shelf(line)))
        else:
            if fwd:
                out = render_shelf(bijections.unordered_to_LL_avoider(bijections.parse_unordered(line)))
            else:
                out = bijections.render_unordered(bijections.LL_avoider_to_unordered(parse_shelf(line)))
        print(out)
    return 0


def _cmd_perm(args: argparse.Namespace) -> int:
    for line in _read_lines(args.input):
        if args.direction == "to":
            values = shelf_to_permutation(parse_shelf(line))
            print(" ".join(str(v) for v in values))
        else:
            values = tuple(int(x) for x in line.split())
            print(render_shelf(permutation_to_shelf(values)))
    return 0


# ── asympt ────────────────────────────────────────────────────────────────


def _cmd_asympt(args: argparse.Namespace) -> int:
    p = PatternId.from_name(args.cls)
    ns = [int(x) for x in args.n.split(",")]
    report = asymptotics.ratio_report(p, ns)
    sys.stdout.write(report.to_csv())
    return 0


# ── verify ────────────────────────────────────────────────────────────────


class _Checker:
    def __init__(self) -> None:
        self.failures = 0

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        if ok:
            print(f"ok: {name}")
        else:
            self.failures += 1
            print(f"MISMATCH: {name}" + (f" ({detail})" if detail else ""))


def _verify_counts(ck: _Checker, surveys: dict[int, ShelfSurvey], n_max: int) -> None:
    for cls in CLASS_NAMES:
        actual, base, _ = _class_spec(cls)
        from_series = series.series_counts(base, n_max)
        enum = [surveys[n].count(actual) for n in range(n_max + 1)]
        if actual is None:
            grammar = [sum(1 for _ in enumerate_shelves(n, ordered=False))
                       for n in range(n_max + 1)]
        else:
            grammar = [sum(1 for _ in generate_avoiders(n, actual))
                       for n in range(n_max + 1)]
        ck.check(f"counts {cls} enum == series", enum == from_series,
                 f"{enum} != {from_series}")
        ck.check(f"counts {cls} grammar == series", grammar == from_series,
                 f"{grammar} != {from_series}")


def _verify_distributions(ck: _Checker, surveys: dict[int, ShelfSurvey], n_max: int) -> None:
    for cls in CLASS_NAMES:
        actual, base, mirrored = _class_spec(cls)
        table = series.distribution_series(base, n_max)
        if mirrored:
            table = series.mirror_distribution_table(table)
        ok = all(surveys[n].distribution(actual) == table[n] for n in range(n_max + 1))
        ck.check(f"distribution {cls} enum == series", ok)
        counts = series.series_counts(base, n_max)
        sums = [int(row.evaluate(1)) for row in table]
        ck.check(f"distribution {cls} row sums == counts", sums == counts)
        if mirrored:
            pops = series.mirror_popularity_series(base, n_max)
        else:
            pops = series.popularity_series(base, n_max)
        enum_pops = [surveys[n].popularity(actual) for n in range(n_max + 1)]
        ck.check(f"popularity {cls} enum == series", enum_pops == pops,
                 f"{enum_pops} != {pops}")
        if cls in ("all", "l-then-r", "ll", "rr", "r-then-l"):
            rec = _recurrence_popularity(cls, n_max)
            ck.check(f"popularity {cls} recurrence == series", rec == pops)


def _verify_bijections(ck: _Checker, n_max: int) -> None:
    for n in range(n_max + 1):
        parts = list(bijections.enumerate_partitions(n))
        images = [bijections.partition_to_shelf(p) for p in parts]
        ok = (len(set(map(render_shelf, images))) == len(parts)
              and all(avoids(t, PatternId.L_THEN_R) for t in images)
              and all(bijections.shelf_to_partition(t) == p
                      for p, t in zip(parts, images))
              and len(parts) == series.series_counts(PatternId.L_THEN_R, max(n, 1))[n])
        ck.check(f"partition bijection n={n}", ok)
    for n in range(n_max + 1):
        jts = list(bijections.enumerate_jtrees(n))
        images = [bijections.jtree_to_shelf(j) for j in jts]
        ok = (len(set(map(render_shelf, images))) == len(jts)
              and all(avoids(t, PatternId.SIBLINGS_INC) for t in images)
              and all(bijections.shelf_to_jtree(t) == j for j, t in zip(jts, images))
              and len(jts) == series.series_counts(PatternId.SIBLINGS_INC, max(n, 1))[n])
        ck.check(f"jtree bijection n={n}", ok)
    for n in range(1, n_max + 1):
        uts = list(bijections.enumerate_unordered(n))
        images = [bijections.unordered_to_LL_avoider(u) for u in uts]
        ok = (len(set(map(render_shelf, images))) == len(uts)
              and all(avoids(t, PatternId.LL) for t in images)
              and all(bijections.LL_avoider_to_unordered(t) == u
                      for u, t in zip(uts, images))
              and len(uts) == series.series_counts(PatternId.LL, max(n - 1, 1))[n - 1])
        ck.check(f"unordered bijection n={n}", ok)


def _verify_asymptotics(ck: _Checker) -> None:
    grid = [0.0, 1e-6, 1e-3, 0.5, 1.0, math.e, 10.0, 1e2, 1e4, 1e6]
    worst = 0.0
    for x in grid:
        w = asymptotics.lambert_w(x)
        worst = max(worst, abs(w * math.exp(w) - x) / max(x, 1.0))
    ck.check("lambert_w residual <= 1e-12", worst <= 1e-12, f"worst {worst:.2e}")
    for p in (PatternId.LL, PatternId.SIBLINGS_INC):
        report = asymptotics.ratio_report(p, [50, 100])
        r50, r100 = (abs(row.log_ratio) for row in report.rows)
        ck.check(f"asympt {p.value} |log ratio| < 0.1 at n=100", r100 < 0.1,
                 f"{r100:.4f}")
        ck.check(f"asympt {p.value} improves 50 -> 100", r100 < r50)
    report = asymptotics.ratio_report(PatternId.L_THEN_R, [100, 400])
    r100, r400 = (abs(row.log_ratio) for row in report.rows)
    ck.check("asympt l-then-r improves 100 -> 400", r400 < r100,
             f"{r100:.4f} -> {r400:.4f}")


def _cmd_verify(args: argparse.Namespace) -> int:
    ck = _Checker()
    n_max = args.n_max
    needs_surveys = args.suite in ("all", "counts", "distributions")
    surveys = {n: ShelfSurvey(n) for n in range(n_max + 1)} if needs_surveys else {}
    if args.suite in ("all", "counts"):
        _verify_counts(ck, surveys, n_max)
    if args.suite in ("all", "distributions"):
        _verify_distributions(ck, surveys, n_max)
    if args.suite in ("all", "bijections"):
        _verify_bijections(ck, n_max)
    if args.suite in ("all", "asymptotics"):
        _verify_asymptotics(ck)
    if ck.failures:
        print(f"{ck.failures} mismatch(es)")
        return 1
    return 0


# ── parser ────────────────────────────────────────────────────────────────


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treeshelves",
        description="Exact enumeration of treeshelves and their pattern classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_class(p: argparse.ArgumentParser, choices: Sequence[str]) -> None:
        p.add_argument("--class", dest="cls", required=True, choices=choices)

    p = sub.add_parser("count", help="counting sequence of a pattern class")
    add_class(p, CLASS_NAMES)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--method", choices=("enum", "series", "grammar"), default="series")
    p.add_argument("--format", choices=("text", "json", "bfile"), default="text")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="list all treeshelves of one size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--avoid", choices=[x.value for x in PatternId], default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("distribution", help="left-child distribution rows")
    add_class(p, CLASS_NAMES)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_distribution)

    p = sub.add_parser("popularity", help="total left children per size")
    add_class(p, CLASS_NAMES)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--method", choices=("enum", "series", "recurrence"), default="series")
    p.add_argument("--format", choices=("text", "json", "bfile"), default="text")
    p.set_defaults(func=_cmd_popularity)

    p = sub.add_parser("bijection", help="apply one of the bijections line by line")
    p.add_argument("--which", choices=("partition", "jtree", "unordered"), required=True)
    p.add_argument("--direction", choices=("fwd", "inv"), required=True)
    p.add_argument("--input", default="-", help="input file, '-' for stdin")
    p.set_defaults(func=_cmd_bijection)

    p = sub.add_parser("verify", help="cross-check matrix; exit 1 on mismatch")
    p.add_argument("--suite", choices=("all", "counts", "distributions",
                                       "bijections", "asymptotics"), default="all")
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("asympt", help="exact vs estimate CSV report")
    add_class(p, tuple(x.value for x in CONSTRUCTIVE_PATTERNS))
    p.add_argument("--n", required=True, help="comma-separated sizes, each >= 2")
    p.set_defaults(func=_cmd_asympt)

    p = sub.add_parser("perm", help="treeshelf <-> permutation, line by line")
    p.add_argument("--direction", choices=("to", "from"), required=True)
    p.add_argument("--input", default="-", help="input file, '-' for stdin")
    p.set_defaults(func=_cmd_perm)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except EnumerationLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
