"""Command-line interface.

Exit statuses: 0 ok, 2 argument or domain error, 3 unsupported (strip
generation), 4 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Iterable, Sequence

from .enumeration import GasketKey, MasterEquationViolation, enumerate_gaskets, quintet, workers_from_env
from .frames import PAIR_LABELS, frame_of, frame_transition, integral_frames_predicate
from .matrix_report import dump_matrices, report
from .numerics import decimal_str, rat_str
from .render import RenderOptions, render_svg
from .symbols import StripUnsupported, generate, reflect, root_configs

EXIT_OK, EXIT_USAGE, EXIT_UNSUPPORTED, EXIT_IO = 0, 2, 3, 4
MAX_WALK_DEPTH = 8


class CliError(Exception):
    def __init__(self, message: str, status: int = EXIT_USAGE):
        super().__init__(message)
        self.status = status


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return rat_str(v)
    return str(v)


def _json_value(v):
    if isinstance(v, Fraction):
        return rat_str(v)
    return v


def emit(rows: Sequence[dict], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        for row in rows:
            out.write(json.dumps({k: _json_value(v) for k, v in row.items()}, ensure_ascii=False) + "\n")
        return
    if not rows:
        return
    fields = list(rows[0])
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(fields)
        for row in rows:
            writer.writerow([_cell(row[f]) for f in fields])
        return
    cells = [[_cell(row[f]) for f in fields] for row in rows]
    widths = [max(len(f), *(len(c[i]) for c in cells)) for i, f in enumerate(fields)]
    out.write("  ".join(f.rjust(w) for f, w in zip(fields, widths)).rstrip() + "\n")
    for c in cells:
        out.write("  ".join(v.rjust(w) for v, w in zip(c, widths)).rstrip() + "\n")


def _key(text: str) -> GasketKey:
    try:
        return GasketKey.parse(text)
    except MasterEquationViolation as exc:
        raise CliError(str(exc)) from None


def _max_bend(key: GasketKey, value) -> int:
    return quintet(key).b4 if value is None else value


def cmd_enumerate(args) -> int:
    if args.max_bend < 0:
        raise CliError("--max-bend must be non-negative")
    records = enumerate_gaskets(args.max_bend, args.irreducible_only, workers=workers_from_env())
    rows = []
    for rec in records:
        row = {"B": rec.key.B, "mu": rec.key.mu, "k": rec.key.k, "n": rec.key.n}
        row.update({f"b{i}": b for i, b in enumerate(rec.quintet)})
        row.update({"shift": rec.shift, "symmetry": str(rec.symmetry), "reducible": rec.reducible})
        rows.append(row)
    emit(rows, args.format)
    return EXIT_OK


def _packing(args):
    key = _key(args.key)
    try:
        return generate(key, _max_bend(key, args.max_bend))
    except StripUnsupported as exc:
        raise CliError(str(exc), EXIT_UNSUPPORTED) from None
    except ValueError as exc:
        raise CliError(str(exc)) from None


def cmd_generate(args) -> int:
    packing = _packing(args)
    rows = []
    for c in packing.circles:
        cx, cy = c.center
        rows.append({
            "bend": c.bend,
            "x_dot": c.x_dot,
            "y_dot": c.y_dot,
            "r": c.radius,
            "cx_decimal": decimal_str(cx),
            "cy_decimal": decimal_str(cy),
        })
    emit(rows, args.format)
    return EXIT_OK


def _walks(depth: int) -> Iterable[tuple[int, ...]]:
    """Non-backtracking reflection sequences of length 1..depth."""
    frontier = [()]
    for _ in range(depth):
        frontier = [p + (i,) for p in frontier for i in range(1, 5) if not p or p[-1] != i]
        yield from frontier


def cmd_frames(args) -> int:
    key = _key(args.key)
    if key.B == 0:
        raise CliError("the strip gasket has no circle symbols", EXIT_UNSUPPORTED)
    if not 0 <= args.depth <= MAX_WALK_DEPTH:
        raise CliError(f"--depth must be in 0..{MAX_WALK_DEPTH}")
    predicate = integral_frames_predicate(key)
    root = root_configs(key)[0]
    states = {(): (root, frame_of(root), True)}
    paths = [()] + list(_walks(args.depth))
    rows = []
    for path in paths:
        if path:
            config, frame, ok = states[path[:-1]]
            config = reflect(config, path[-1])
            frame = frame_transition(frame, path[-1])
            ok = ok and frame == frame_of(config)
            states[path] = (config, frame, ok)
        _, frame, ok = states[path]
        for label, t in zip(PAIR_LABELS, frame.triples):
            rows.append({
                "path": ".".join(map(str, path)) or "root",
                "depth": len(path),
                "pair": label,
                "delta": t.delta,
                "gamma": t.gamma,
                "h": t.h,
                "integral": t.is_integral,
                "consistent": ok,
                "k_divides_2B2": predicate,
            })
    emit(rows, args.format)
    return EXIT_OK


def cmd_render(args) -> int:
    packing = _packing(args)
    try:
        opts = RenderOptions(
            width_px=args.width,
            label_mode=args.labels,
            draw_frame=args.draw_frame,
            min_radius_px=Fraction(args.min_radius),
        )
    except ValueError as exc:
        raise CliError(str(exc)) from None
    svg = render_svg(packing, opts)
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc}", EXIT_IO) from None
    print(f"circles: {len(packing.circles)}")
    return EXIT_OK


def cmd_matrices(args) -> int:
    sys.stdout.write(report() if args.report else dump_matrices())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apollonian",
        description="Integral Apollonian gaskets in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list gaskets by root bend")
    p.add_argument("--max-bend", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--irreducible-only", dest="irreducible_only", action="store_true", default=True)
    group.add_argument("--all", dest="irreducible_only", action="store_false",
                       help="include reducible integer multiples")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("generate", help="list the circles of one gasket")
    p.add_argument("--key", required=True, help="B,MU,K,N")
    p.add_argument("--max-bend", type=int, default=None,
                   help="largest bend to include (default: fifth principal bend)")
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("frames", help="principal frame and reflection walks")
    p.add_argument("--key", required=True, help="B,MU,K,N")
    p.add_argument("--depth", type=int, default=0)
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p.set_defaults(func=cmd_frames)

    p = sub.add_parser("render", help="write an SVG drawing")
    p.add_argument("--key", required=True, help="B,MU,K,N")
    p.add_argument("--max-bend", type=int, default=None)
    p.add_argument("--out", required=True)
    p.add_argument("--labels", choices=("none", "bends", "symbols"), default="none")
    p.add_argument("--draw-frame", action="store_true")
    p.add_argument("--width", type=int, default=800)
    p.add_argument("--min-radius", default="1/2", help="cull circles below this pixel radius")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("matrices", help="dump derived transition matrices")
    p.add_argument("--report", action="store_true", help="compare with the printed matrices")
    p.set_defaults(func=cmd_matrices)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.status


if __name__ == "__main__":
    sys.exit(main())
