"""Command line entry point: ``canonvdw <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from itertools import islice
from pathlib import Path

from .coloring import Coloring, max_window_density, normalize, random_coloring, scan_coloring
from .counting import (
    CountingQuery,
    pair_ratio,
    moment_count,
    moment_count_bruteforce,
    pair_count,
    pair_count_windowed,
)
from .fourier import holder_chain_report
from .harness import ExperimentConfig, default_window, emit_report, proof_pipeline, scaling_study
from .patterns import PatternFamily, XDomain, enumerate_instances
from .polynomial import format_poly, parse_poly
from .search import DEFAULT_CAP, canonical_vdw_number, mono_vdw_number


def _read_ints(path: str) -> list[int]:
    text = Path(path).read_text()
    tokens = text.replace(",", " ").split()
    return [int(t) for t in tokens]


def load_coloring(spec: str, N: int | None, seed: int) -> Coloring:
    """``random:r[,seed]`` or a file of color ids (one per line or comma separated)."""
    if spec.startswith("random:"):
        parts = spec[len("random:"):].split(",")
        r = int(parts[0])
        if len(parts) > 1:
            seed = int(parts[1])
        if N is None:
            raise SystemExit("--N is required for random colorings")
        return random_coloring(N, r, seed)
    ids = _read_ints(spec)
    if N is not None and len(ids) != N:
        raise SystemExit(f"coloring file has {len(ids)} entries, expected N={N}")
    return normalize(ids)


def _config(args, experiment: str, **params) -> ExperimentConfig:
    return ExperimentConfig(
        experiment=experiment,
        family=getattr(args, "polys", "") or getattr(args, "f", "") or "",
        grid=params.pop("grid", []),
        seed=args.seed,
        epsilon=getattr(args, "epsilon", None),
        out=args.out,
        fmt=args.format,
        params=params,
    )


# -- subcommands --------------------------------------------------------------

def cmd_enumerate(args):
    fam = PatternFamily.parse(args.polys)
    it = enumerate_instances(fam, args.N, XDomain.parse(args.xdom))
    if args.limit is not None:
        it = islice(it, args.limit)
    rows = [inst.as_dict() for inst in it]
    cfg = _config(args, "enumerate", N=args.N, xdom=args.xdom, limit=args.limit)
    if args.format == "json":
        return cfg, "".join(json.dumps(r, sort_keys=True) + "\n" for r in rows)
    return cfg, rows


def cmd_analyze(args):
    fam = PatternFamily.parse(args.polys)
    dom = XDomain.parse(args.xdom)
    c = load_coloring(args.coloring, args.N, args.seed)
    L = args.L_min if args.L_min is not None else default_window(fam, c.N, dom)
    row = {"N": c.N, "num_colors": c.num_colors,
           "scan": scan_coloring(c, fam, dom).as_dict(),
           "density": max_window_density(c, L).as_dict()}
    return _config(args, "analyze", N=c.N, xdom=args.xdom, coloring=args.coloring, L_min=L), [row]


def cmd_count_pairs(args):
    A = _read_ints(args.set)
    f = parse_poly(args.f)
    row = {"size": len(set(A)), "f": format_poly(f), "n": args.n,
           "pairs": str(pair_count(A, f, args.n))}
    if args.windowed:
        total, m = pair_count_windowed(A, f, args.n)
        row.update(window_sum=str(total), m=m)
    if args.s is not None and f.degree >= 2 and A:
        row["ratio"] = pair_ratio(A, f, args.n, args.s)
    return _config(args, "count-pairs", set=args.set, n=args.n, windowed=args.windowed), [row]


def cmd_moment(args):
    q = CountingQuery(parse_poly(args.f), args.n, args.s)
    row = {"f": format_poly(q.f), "n": q.n, "s": q.s, "moment": str(moment_count(q))}
    if args.bruteforce:
        row["bruteforce"] = str(moment_count_bruteforce(q))
    return _config(args, "moment", n=q.n, s=q.s, bruteforce=args.bruteforce), [row]


def cmd_fourier_check(args):
    A = _read_ints(args.set)
    rep = holder_chain_report(A, parse_poly(args.f), args.n, args.s, strict=False)
    return _config(args, "fourier-check", set=args.set, n=args.n, s=args.s), [rep.as_dict()]


def cmd_vdw_search(args):
    fam = PatternFamily.parse(args.polys)
    dom = XDomain.parse(args.xdom)
    degen = not args.ignore_degenerate
    if args.mode == "canonical":
        res = canonical_vdw_number(fam, dom, args.cap, degen)
    else:
        if args.colors is None:
            raise SystemExit("--colors is required in mono mode")
        res = mono_vdw_number(fam, args.colors, dom, args.cap, degen)
    row = res.as_dict()
    return _config(args, "vdw-search", mode=args.mode, colors=args.colors, cap=args.cap,
                   xdom=args.xdom, degenerate_mono=degen), [row]


def cmd_scaling_study(args):
    grid = [int(t) for t in args.grid.split(",")]
    rows = scaling_study(parse_poly(args.f), args.s, grid)
    for r in rows:
        if r["moment"] is not None:
            r["moment"] = str(r["moment"])
    return _config(args, "scaling-study", s=args.s, grid=grid), rows


def cmd_pipeline(args):
    fam = PatternFamily.parse(args.polys)
    c = load_coloring(args.coloring, args.N, args.seed)
    rep = proof_pipeline(c, fam, args.L_min, XDomain.parse(args.xdom), args.epsilon)
    return _config(args, "pipeline", N=c.N, coloring=args.coloring, L_min=args.L_min,
                   xdom=args.xdom), [rep]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="write the report here (relative to $CANONVDW_OUTPUT_DIR if set)")
    common.add_argument("--golden", help="compare output bytes with this file; written if missing")

    ap = argparse.ArgumentParser(prog="canonvdw", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("enumerate", cmd_enumerate, "list instances inside [1, N] (JSON lines or CSV)")
    p.add_argument("--polys", required=True, help='e.g. "y; 2*y; y^2" or "0,1; 0,2"')
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--xdom", default="any", choices=("any", "nonneg", "pos"))
    p.add_argument("--limit", type=int)

    p = add("analyze", cmd_analyze, "scan a coloring and its window densities")
    p.add_argument("--polys", required=True)
    p.add_argument("--N", type=int)
    p.add_argument("--coloring", required=True, help='file or "random:r,seed"')
    p.add_argument("--xdom", default="any", choices=("any", "nonneg", "pos"))
    p.add_argument("--L-min", dest="L_min", type=int)

    p = add("count-pairs", cmd_count_pairs, "pairs (x, y) in A x [n] with x + f(y) in A")
    p.add_argument("--set", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, help="also report the normalized ratio for this s")
    p.add_argument("--windowed", action="store_true")

    p = add("moment", cmd_moment, "exact even moment of the exponential sum of f")
    p.add_argument("--f", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--bruteforce", action="store_true")

    p = add("fourier-check", cmd_fourier_check, "numeric check of the Hölder/Parseval chain")
    p.add_argument("--set", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)

    p = add("vdw-search", cmd_vdw_search, "exact canonical or monochromatic vdW numbers")
    p.add_argument("--polys", required=True)
    p.add_argument("--mode", choices=("canonical", "mono"), default="canonical")
    p.add_argument("--colors", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--xdom", default="any", choices=("any", "nonneg", "pos"))
    p.add_argument("--ignore-degenerate", action="store_true",
                   help="degenerate instances never count as monochromatic")

    p = add("scaling-study", cmd_scaling_study, "moment / n^(s-d) along a grid of n")
    p.add_argument("--f", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--grid", required=True, help="ascending comma-separated n values")

    p = add("pipeline", cmd_pipeline, "density + scan + union bound for one coloring")
    p.add_argument("--polys", required=True)
    p.add_argument("--N", type=int)
    p.add_argument("--coloring", required=True)
    p.add_argument("--xdom", default="any", choices=("any", "nonneg", "pos"))
    p.add_argument("--L-min", dest="L_min", type=int)
    p.add_argument("--epsilon", type=float)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg, rows = args.func(args)
    if isinstance(rows, str):
        text = rows
        path = cfg.output_path()
        if path is not None:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8", newline="\n")
    else:
        text = emit_report(cfg, rows)
    if args.golden:
        golden = Path(args.golden)
        if golden.exists():
            if golden.read_bytes() != text.encode("utf-8"):
                print(f"golden mismatch: {golden}", file=sys.stderr)
                return 1
        else:
            golden.parent.mkdir(parents=True, exist_ok=True)
            golden.write_bytes(text.encode("utf-8"))
    if cfg.out is None:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
