"""Command line front end.

Subcommands: enumerate, verify, render, canonicalize, rootcode, expand,
flype-class.  Exit codes: 0 success, 1 verification mismatch, 2 invalid
input, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from . import cascade, catalog, tables
from .canonical import canonical_code
from .cascade import CodeError, CodeFormatError, format_code, parse_code
from .enumeration import CLASSES, CountsTable, enumerate_all
from .flype import flype_class
from .maps import BOUNDARY, PlanarMap
from .rootcode import invariant_root_code

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_BAD_INPUT = 2
EXIT_IO = 3


def _level_path(outdir: Path, n: int) -> Path:
    return outdir / f"catalog_n{n:02d}.txt"


def cmd_enumerate(args) -> int:
    classes = args.classes or ["proj"]
    outdir = Path(args.out) if args.out else None
    start = None
    if outdir is not None:
        outdir.mkdir(parents=True, exist_ok=True)
        if args.resume:
            for n in range(args.max_n, 0, -1):
                path = _level_path(outdir, n)
                if path.exists():
                    start = (n, catalog.read_catalog(path))
                    print(f"resuming from completed level n={n}", flush=True)
                    break

    def sink(n: int, codes) -> None:
        if outdir is not None:
            catalog.write_catalog(_level_path(outdir, n), codes)
        print(f"n={n}: {len(codes)} codes", flush=True)

    t0 = time.perf_counter()
    result = enumerate_all(
        args.max_n,
        classes=tuple(classes),
        sink=sink,
        workers=args.workers,
        start=start,
        legs=args.legs,
    )
    dt = time.perf_counter() - t0
    for cls in classes:
        totals = result[cls].totals(args.max_n)
        print(f"{cls}: " + " ".join(str(t) for t in totals))
    if outdir is not None:
        catalog.write_counts_tsv(outdir / "counts.tsv", result)
        from .render import report_figures

        written = report_figures(result, outdir / "figures")
        print(f"wrote {outdir / 'counts.tsv'} and {len(written)} figure(s)")
    print(f"done in {dt:.1f}s")
    return EXIT_OK


def cmd_verify(args) -> int:
    classes = args.classes or ["proj", "alt", "reduced"]
    for cls in classes:
        if cls not in tables.REFERENCE:
            print(f"no reference table for class {cls!r}", file=sys.stderr)
            return EXIT_BAD_INPUT
    if args.max_n > tables.MAX_N:
        print(f"reference data stops at n={tables.MAX_N}", file=sys.stderr)
        return EXIT_BAD_INPUT
    if args.counts:
        got: Dict[str, Dict[Tuple[int, int], int]] = catalog.read_counts_tsv(
            Path(args.counts)
        )
    else:
        result = enumerate_all(args.max_n, classes=tuple(classes), workers=args.workers)
        got = {cls: dict(result[cls].entries) for cls in classes}
    failures = []
    for cls in classes:
        expected = tables.reference_cells(cls, args.max_n)
        actual = got.get(cls, {})
        keys = {k for k in expected} | {k for k in actual if k[0] <= args.max_n}
        for n, k in sorted(keys):
            e = expected.get((n, k), 0)
            a = actual.get((n, k), 0)
            if e != a:
                failures.append((cls, n, k, e, a))
    if failures:
        for cls, n, k, e, a in failures:
            print(f"MISMATCH class={cls} n={n} k={k} expected={e} got={a}")
        return EXIT_MISMATCH
    print(f"all cells match for n <= {args.max_n} ({', '.join(classes)})")
    return EXIT_OK


def cmd_render(args) -> int:
    from .render import STYLES, render_svg

    if args.style not in STYLES:
        print(f"unknown style {args.style!r}", file=sys.stderr)
        return EXIT_BAD_INPUT
    code = parse_code(args.code)
    doc = render_svg(code, style=args.style)
    if args.out:
        Path(args.out).write_text(doc, encoding="ascii")
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(doc)
    return EXIT_OK


def cmd_canonicalize(args) -> int:
    code = parse_code(args.code)
    print(format_code(canonical_code(cascade.expand(code))))
    return EXIT_OK


def cmd_rootcode(args) -> int:
    code = parse_code(args.code)
    irc, _ = invariant_root_code(cascade.expand(code))
    print(" ".join(str(x) for x in irc))
    return EXIT_OK


def _describe_map(m: PlanarMap) -> List[str]:
    lines = [f"n={m.n} k={m.k}"]
    for v in range(m.n):
        entries = []
        for d in m.crossing_rotation(v):
            t = m.twin[d]
            if t >= 4 * m.n:
                entries.append(f"B{t - 4 * m.n}")
            else:
                entries.append(f"v{t >> 2}")
        lines.append(f"v{v}: " + " ".join(entries))
    return lines


def cmd_expand(args) -> int:
    code = parse_code(args.code)
    for line in _describe_map(cascade.expand(code)):
        print(line)
    return EXIT_OK


def cmd_flype_class(args) -> int:
    code = parse_code(args.code)
    orbit = flype_class(code)
    rep = min(orbit)
    members = [rep] + [c for c in orbit if c != rep]
    print(" ".join(format_code(c) for c in members))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tanglecascade",
        description="Enumerate prime connected tangle projections via cascade codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="generate catalogs and count tables")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--class", dest="classes", action="append", choices=CLASSES)
    p.add_argument("--legs", type=int, default=None, help="restrict counts to one k")
    p.add_argument("--out", type=str, default=None, help="output directory")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--resume", action="store_true",
                   help="continue from the last completed level file in --out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="compare counts against the reference tables")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--class", dest="classes", action="append",
                   choices=("proj", "alt", "reduced"))
    p.add_argument("--counts", type=str, default=None,
                   help="verify a counts.tsv file instead of recomputing")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a code as SVG")
    p.add_argument("code")
    p.add_argument("--style", choices=("cascade", "disk"), default="cascade")
    p.add_argument("--out", type=str, default=None)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("canonicalize", help="canonical cascade code of a code")
    p.add_argument("code")
    p.set_defaults(func=cmd_canonicalize)

    p = sub.add_parser("rootcode", help="invariant root code of a code's projection")
    p.add_argument("code")
    p.set_defaults(func=cmd_rootcode)

    p = sub.add_parser("expand", help="print the expanded map of a code")
    p.add_argument("code")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("flype-class", help="flype orbit of a code")
    p.add_argument("code")
    p.set_defaults(func=cmd_flype_class)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CodeFormatError, CodeError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
