"""Command-line surface: classification, heights, polygons, image boundaries
and parameter sweeps as CSV/JSON plot data.

Exit codes: 0 success, 2 invalid arguments, 3 mathematical degeneracy,
4 I/O failure.  CSV output uses shortest round-trip float formatting and LF
line endings, so identical arguments produce byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import cartography, height, singularity
from .errors import DegenerateSystemError, SemitoricError
from .model import ModelParams

JSON_SCHEMA = "semitoric-invariants/1"

EXIT_OK = 0
EXIT_BAD_ARGS = 2
EXIT_DEGENERATE = 3
EXIT_IO = 4


def _fmt(x) -> str:
    """Shortest round-trip decimal form of a float (empty for None)."""
    if x is None:
        return ""
    return repr(float(x))


def _params_from(args) -> ModelParams:
    return ModelParams(args.R1, args.R2, args.s1, args.s2)


def _add_param_flags(sp):
    sp.add_argument("--R1", type=float, required=True)
    sp.add_argument("--R2", type=float, required=True)
    sp.add_argument("--s1", type=float, required=True)
    sp.add_argument("--s2", type=float, required=True)


def _emit(text: str, out_path: str | None):
    if out_path is None:
        sys.stdout.write(text)
        return
    with open(out_path, "w", newline="") as fh:
        fh.write(text)


def cmd_classify(args) -> int:
    params = _params_from(args)
    e = singularity.discriminant_E(params)
    reports = singularity.classify_fixed_points(params)
    degenerate = any(r.kind == "degenerate" for r in reports)
    nff = None if degenerate else singularity.n_ff(params)
    verdict = singularity.check_semitoric(params, grid_n=20)
    if args.json:
        payload = {
            "schema": JSON_SCHEMA,
            "command": "classify",
            "params": {"R1": params.r1, "R2": params.r2,
                       "s1": params.s1, "s2": params.s2},
            "E": e,
            "n_ff": nff,
            "degenerate": degenerate,
            "is_semitoric": verdict.is_semitoric,
            "fixed_points": [{"id": r.point_id, "kind": r.kind}
                             for r in reports],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"E = {_fmt(e)}")
        for r in reports:
            print(f"{r.point_id}: {r.kind}")
        if degenerate:
            print("degenerate: E = 0 within band; not semitoric")
        else:
            print(f"n_FF = {nff}")
            print(f"semitoric: {'yes' if verdict.is_semitoric else 'no'}")
    return EXIT_DEGENERATE if degenerate else EXIT_OK


def cmd_height(args) -> int:
    params = _params_from(args)
    if args.method == "closed":
        inv = height.height_closed(params)
    elif args.method == "quadrature":
        work = height._ns_frame(params)
        h1 = height.height_oracle("NS", work)
        inv = height.HeightInvariant(h1, 2.0 - h1, height.case_id(work),
                                     "quadrature")
    else:
        inv = height.height_both(params)
    if args.json:
        payload = {
            "schema": JSON_SCHEMA,
            "command": "height",
            "h1": inv.h1, "h2": inv.h2,
            "case": inv.case_ns,
            "method": inv.method,
            "ill_conditioned": inv.ill_conditioned,
        }
        if inv.method == "both":
            payload["discrepancy"] = inv.discrepancy
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"h1 = {_fmt(inv.h1)}")
        print(f"h2 = {_fmt(inv.h2)}")
        print(f"case = {inv.case_ns}")
        if inv.method == "both":
            print(f"|closed - oracle| = {_fmt(inv.discrepancy)}")
        if inv.ill_conditioned:
            print("ill-conditioned: E within the near-degenerate band")
    return EXIT_OK


def _parse_cuts(text: str):
    table = {"+": 1, "-": -1}
    if len(text) != 2 or any(ch not in table for ch in text):
        raise ValueError(f"cuts must be two of '+'/'-', got {text!r}")
    return table[text[0]], table[text[1]]


def cmd_polygon(args) -> int:
    params = _params_from(args)
    cuts = _parse_cuts(args.cuts)
    poly = cartography.polygon_representative(params, cuts)
    work = cartography._ns_frame(params)
    r1, R = work.r1, work.R

    def unscale(v):
        return r1 * (v[0] + 1.0 - R), r1 * v[1]

    if args.json:
        payload = {
            "schema": JSON_SCHEMA,
            "command": "polygon",
            "cuts": list(poly.cuts),
            "ff_l": list(poly.ff_l),
            "vertices_scaled": [list(v) for v in poly.vertices],
            "vertices_unscaled": [list(unscale(v)) for v in poly.vertices],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        lines = ["l_scaled,y_scaled,L,Y"]
        for v in poly.vertices:
            u = unscale(v)
            lines.append(",".join([_fmt(v[0]), _fmt(v[1]),
                                   _fmt(u[0]), _fmt(u[1])]))
        lines.append(f"# cuts = {poly.cuts}, ff_l = {poly.ff_l}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_image(args) -> int:
    params = _params_from(args)
    if args.samples < 16:
        raise ValueError("--samples must be >= 16")
    ib = cartography.image_boundary(params, args.samples)
    lines = ["l,h_min,h_max,kind"]
    for l, h_min, h_max in ib.samples:
        lines.append(",".join([_fmt(l), _fmt(h_min), _fmt(h_max), "sample"]))
    for l, h in ib.ff_values:
        lines.append(",".join([_fmt(l), _fmt(h), _fmt(h), "ff"]))
    for l, h in ib.corner_values:
        lines.append(",".join([_fmt(l), _fmt(h), _fmt(h), "corner"]))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _sweep_cell(quantity, r1, r2, s1, s2):
    params = ModelParams(r1, r2, s1, s2)
    e = singularity.discriminant_E(params)
    if quantity == "E":
        return [_fmt(s1), _fmt(s2), _fmt(e), ""]
    try:
        nff = singularity.n_ff(params)
    except DegenerateSystemError:
        if quantity == "nff":
            return [_fmt(s1), _fmt(s2), "", "degenerate"]
        return [_fmt(s1), _fmt(s2), "", "", "degenerate"]
    if quantity == "nff":
        return [_fmt(s1), _fmt(s2), str(nff), ""]
    if nff == 0:
        return [_fmt(s1), _fmt(s2), "", "", "no-focus-focus"]
    inv = height.height_closed(params)
    flag = "ill-conditioned" if inv.ill_conditioned else ""
    return [_fmt(s1), _fmt(s2), _fmt(inv.h1), _fmt(inv.h2), flag]


def cmd_sweep(args) -> int:
    for count in (args.s1_count, args.s2_count):
        if count < 2:
            raise ValueError("axis counts must be >= 2")
    for lo, hi in ((args.s1_start, args.s1_stop),
                   (args.s2_start, args.s2_stop)):
        if not (0.0 <= lo <= 1.0 and 0.0 <= hi <= 1.0 and lo < hi):
            raise ValueError("axis ranges must be increasing within [0, 1]")
    s1s = np.linspace(args.s1_start, args.s1_stop, args.s1_count)
    s2s = np.linspace(args.s2_start, args.s2_stop, args.s2_count)
    cells = [(float(a), float(b)) for a in s1s for b in s2s]

    def work(cell):
        return _sweep_cell(args.quantity, args.R1, args.R2, *cell)

    if args.parallel:
        threads = int(os.environ.get("SEMITORIC_THREADS",
                                     os.cpu_count() or 1))
        with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
            rows = list(pool.map(work, cells))
    else:
        rows = [work(c) for c in cells]
    header = {"E": "s1,s2,E,flag",
              "nff": "s1,s2,n_ff,flag",
              "height": "s1,s2,h1,h2,flag"}[args.quantity]
    lines = [header] + [",".join(r) for r in rows]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semitoric",
        description="Invariants of a coupled-spin family on S2 x S2: "
                    "singularity classification, height invariant, polygon "
                    "representatives, momentum-image data.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("classify", help="fixed-point types and n_FF")
    _add_param_flags(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("height", help="height invariant (h1, h2)")
    _add_param_flags(sp)
    sp.add_argument("--method", choices=("closed", "quadrature", "both"),
                    default="both")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_height)

    sp = sub.add_parser("polygon", help="polygon representative vertices")
    _add_param_flags(sp)
    sp.add_argument("--cuts", default="++",
                    help="cut directions, e.g. '++', '+-'")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_polygon)

    sp = sub.add_parser("image", help="momentum-map image boundary CSV")
    _add_param_flags(sp)
    sp.add_argument("--samples", type=int, default=64)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_image)

    sp = sub.add_parser("sweep", help="parameter-grid CSV of a quantity")
    sp.add_argument("--R1", type=float, required=True)
    sp.add_argument("--R2", type=float, required=True)
    sp.add_argument("--quantity", choices=("nff", "height", "E"),
                    required=True)
    sp.add_argument("--s1-start", type=float, default=0.0)
    sp.add_argument("--s1-stop", type=float, default=1.0)
    sp.add_argument("--s1-count", type=int, default=51)
    sp.add_argument("--s2-start", type=float, default=0.0)
    sp.add_argument("--s2-stop", type=float, default=1.0)
    sp.add_argument("--s2-count", type=int, default=51)
    sp.add_argument("--parallel", action="store_true")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DegenerateSystemError as exc:
        print(f"degenerate: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (ValueError, SemitoricError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
