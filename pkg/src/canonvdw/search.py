"""Exact canonical and monochromatic van der Waerden numbers for small families.

Colorings of ``1..N`` are built left to right in restricted-growth form, so
each set partition is visited once. An instance is checked as soon as its
largest element is colored; a branch dies on the first forbidden instance.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .coloring import Coloring, iter_rgs, scan_coloring
from .patterns import PatternFamily, XDomain, enumerate_instances

DEFAULT_CAP = 40


class Mode(enum.Enum):
    CANONICAL = "canonical"
    MONO = "mono"


class _CapReached(Exception):
    pass


@dataclass
class SearchResult:
    mode: Mode
    cap: int
    threshold: int | None
    witness: Coloring | None
    nodes: int = 0
    prunes: int = 0
    colors: int | None = None
    # avoiding[N] = number of avoiding colorings of [N]; exact when complete or exhaustive
    avoiding: list[int] = field(default_factory=list)
    complete: bool = True

    @property
    def lower_bound(self) -> int:
        """Every value below this is known to admit an avoiding coloring."""
        return self.threshold if self.threshold is not None else self.cap + 1

    def as_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "colors": self.colors,
            "cap": self.cap,
            "threshold": self.threshold,
            "lower_bound": self.lower_bound,
            "found": self.threshold is not None,
            "witness": self.witness.colors.tolist() if self.witness is not None else [],
            "nodes": self.nodes,
            "prunes": self.prunes,
            "avoiding": self.avoiding,
            "complete": self.complete,
        }


def _instances_by_completion(fam: PatternFamily, cap: int, dom: XDomain,
                             degenerate_mono: bool) -> list[list[tuple[tuple[int, ...], bool]]]:
    """For each element v, the instances whose largest element is v.

    Each entry is (distinct zero-based indices, degenerate flag).
    """
    table: list[list[tuple[tuple[int, ...], bool]]] = [[] for _ in range(cap + 1)]
    seen = set()
    for inst in enumerate_instances(fam, cap, dom):
        idx = tuple(sorted({v - 1 for v in inst.values}))
        deg = inst.degenerate
        if deg and not degenerate_mono:
            continue
        if (idx, deg) in seen:
            continue
        seen.add((idx, deg))
        table[idx[-1] + 1].append((idx, deg))
    return table


def _search(fam: PatternFamily, dom: XDomain, cap: int, mode: Mode, r: int | None,
            degenerate_mono: bool, exhaustive: bool = False) -> SearchResult:
    if cap < 1:
        raise ValueError("cap must be positive")
    dom = XDomain.parse(dom)
    k = fam.k
    table = _instances_by_completion(fam, cap, dom, degenerate_mono)
    colors: list[int] = []
    best: list[int] = []
    avoiding = [1] + [0] * cap
    stats = {"nodes": 0, "prunes": 0}
    canonical = mode is Mode.CANONICAL

    def forbidden(v: int) -> bool:
        for idx, deg in table[v]:
            seen = {colors[i] for i in idx}
            if len(seen) == 1:
                return True
            if canonical and not deg and len(seen) == k:
                return True
        return False

    def extend(top: int) -> None:
        nonlocal best, hit_cap
        v = len(colors) + 1
        limit = top + 2 if r is None else min(top + 2, r)
        for c in range(limit):
            stats["nodes"] += 1
            colors.append(c)
            if forbidden(v):
                stats["prunes"] += 1
            else:
                avoiding[v] += 1
                if v > len(best):
                    best = colors.copy()
                if v == cap:
                    if not exhaustive:
                        raise _CapReached
                    hit_cap = True
                else:
                    extend(max(top, c))
            colors.pop()

    hit_cap = False
    try:
        extend(-1)
    except _CapReached:
        hit_cap = True
    complete = not hit_cap
    n_best = len(best)
    threshold = n_best + 1 if complete else None
    witness = Coloring(best) if best else None
    return SearchResult(mode, cap, threshold, witness, stats["nodes"], stats["prunes"],
                        r, avoiding if complete or exhaustive else avoiding[:n_best + 1], complete)


def canonical_vdw_number(fam: PatternFamily, dom: XDomain = XDomain.ANY,
                         cap: int = DEFAULT_CAP, degenerate_mono: bool = True,
                         exhaustive: bool = False) -> SearchResult:
    """Least N such that every coloring of [N], with any number of colors,
    has a monochromatic or a rainbow instance.

    By default the search stops at the first avoiding coloring of [cap].
    With exhaustive=True it keeps going, so the avoiding counts up to cap are
    exact even when no threshold is found.
    """
    if fam.k < 2:
        raise ValueError("the canonical search needs k >= 2")
    return _search(fam, dom, cap, Mode.CANONICAL, None, degenerate_mono, exhaustive)


def mono_vdw_number(fam: PatternFamily, r: int, dom: XDomain = XDomain.ANY,
                    cap: int = DEFAULT_CAP, degenerate_mono: bool = True,
                    exhaustive: bool = False) -> SearchResult:
    """Least N such that every r-coloring of [N] has a monochromatic instance."""
    if r < 1:
        raise ValueError("r must be positive")
    return _search(fam, dom, cap, Mode.MONO, r, degenerate_mono, exhaustive)


def verify_witness(c: Coloring, fam: PatternFamily, dom: XDomain = XDomain.ANY,
                   mode: Mode | str = Mode.CANONICAL, degenerate_mono: bool = True) -> bool:
    """Check a coloring with the streaming scanner, independently of the search."""
    mode = Mode(mode)
    rep = scan_coloring(c, fam, dom)
    mono = rep.mono if degenerate_mono else rep.mono - rep.degenerate_mono
    if mono:
        return False
    return mode is Mode.MONO or rep.rainbow == 0


def count_avoiding_bruteforce(fam: PatternFamily, N: int, dom: XDomain = XDomain.ANY,
                              mode: Mode | str = Mode.CANONICAL, r: int | None = None,
                              degenerate_mono: bool = True) -> int:
    """Number of restricted-growth colorings of [N] that avoid, without pruning."""
    if N == 0:
        return 1
    return sum(verify_witness(Coloring(s), fam, dom, mode, degenerate_mono)
               for s in iter_rgs(N, r))
