"""Reproducible experiments and deterministic report files."""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .coloring import (
    Coloring,
    max_window_density,
    non_rainbow_upper_bound,
    scan_coloring,
)
from .counting import MAX_HISTOGRAM_LENGTH, CountingQuery, moment_count, poly_values
from .patterns import PatternFamily, XDomain, count_instances, y_bound
from .polynomial import IntPolynomial, format_poly

OUTPUT_DIR_ENV = "CANONVDW_OUTPUT_DIR"


@dataclass
class ExperimentConfig:
    experiment: str
    family: str = ""
    grid: list[int] = field(default_factory=list)
    seed: int = 0
    epsilon: float | None = None
    out: str | None = None
    fmt: str = "json"
    generator: str = "splitmix64"
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.fmt not in ("csv", "json"):
            raise ValueError(f"unknown format {self.fmt!r}")
        if any(b <= a for a, b in zip(self.grid, self.grid[1:])):
            raise ValueError("grid must be strictly ascending")

    def as_dict(self) -> dict:
        d = asdict(self)
        d.pop("out")
        return d

    def output_path(self) -> Path | None:
        if self.out is None:
            return None
        p = Path(self.out)
        base = os.environ.get(OUTPUT_DIR_ENV)
        if base and not p.is_absolute():
            p = Path(base) / p
        return p


def scaling_study(f: IntPolynomial, s: int, n_grid: Sequence[int],
                  max_length: int = MAX_HISTOGRAM_LENGTH) -> list[dict]:
    """Exact moments and ``moment / n**(s-d)`` along an ascending grid of n.

    A row whose dense histogram would exceed ``max_length`` is marked skipped.
    """
    if not n_grid or any(b <= a for a, b in zip(n_grid, n_grid[1:])):
        raise ValueError("n_grid must be nonempty and strictly ascending")
    d = f.degree
    rows = []
    for n in n_grid:
        vals = poly_values(f, n)
        length = (s // 2) * int(vals.max() - vals.min()) + 1
        if length > max_length:
            rows.append({"n": n, "moment": None, "ratio": None, "status": "skipped"})
            continue
        m = moment_count(CountingQuery(f, n, s))
        ratio = float(Fraction(m) / Fraction(n) ** (s - d))
        rows.append({"n": n, "moment": m, "ratio": ratio, "status": "ok"})
    return rows


def default_window(fam: PatternFamily, N: int, dom: XDomain = XDomain.ANY) -> int:
    """``n**D`` clipped to [1, N], with ``n`` the exact y-range."""
    n = y_bound(fam, N, dom)
    D = fam.D or 1
    return max(1, min(N, n ** D))


def proof_pipeline(c: Coloring, fam: PatternFamily, L_min: int | None = None,
                   dom: XDomain = XDomain.ANY, epsilon: float | None = None) -> dict:
    """Density, instance scan and the pairwise union bound for one coloring."""
    if fam.k < 2:
        raise ValueError("the pipeline needs k >= 2")
    dom = XDomain.parse(dom)
    if L_min is None:
        L_min = default_window(fam, c.N, dom)
    density = max_window_density(c, L_min)
    scan = scan_coloring(c, fam, dom)
    union = non_rainbow_upper_bound(c, fam, dom)
    verdict = {
        "rainbow": scan.rainbow > 0,
        "non_rainbow_lt_total": scan.non_rainbow < scan.total,
        "mono_witness": scan.mono_witness is not None,
    }
    if epsilon is not None:
        verdict["density_le_epsilon"] = density.worst <= epsilon
    return {
        "N": c.N,
        "num_colors": c.num_colors,
        "family": [format_poly(p) for p in fam.polys],
        "D": fam.D,
        "n": y_bound(fam, c.N, dom),
        "instances": count_instances(fam, c.N, dom),
        "density": density.as_dict(),
        "scan": scan.as_dict(),
        "union_bound": union,
        "verdict": verdict,
    }


# -- serialization -----------------------------------------------------------

def _flatten(row: dict, prefix: str = "") -> dict:
    out = {}
    for key, val in row.items():
        name = f"{prefix}{key}"
        if isinstance(val, dict):
            out.update(_flatten(val, name + "."))
        else:
            out[name] = val
    return out


def _cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.12g}"
    if isinstance(v, (list, tuple)):
        return " ".join(_cell(x) for x in v)
    return str(v)


def render_report(config: ExperimentConfig, rows: Sequence[dict],
                  columns: Sequence[str] | None = None) -> str:
    if config.fmt == "json":
        payload = {"config": config.as_dict(), "rows": list(rows)}
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    flat = [_flatten(r) for r in rows]
    if columns is None:
        columns = []
        for r in flat:
            columns.extend(k for k in r if k not in columns)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in flat:
        w.writerow([_cell(r.get(col)) for col in columns])
    return buf.getvalue()


def emit_report(config: ExperimentConfig, rows: Sequence[dict],
                columns: Sequence[str] | None = None) -> str:
    """Render and, if the config names an output path, write the report.

    Returns the rendered text. Bytes depend only on config and rows.
    """
    text = render_report(config, rows, columns)
    path = config.output_path()
    if path is not None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise OSError(f"cannot write report to {path}: {exc}") from exc
    return text
