"""Colorings of [N], monochromatic/rainbow classification and window densities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterator, Sequence

import numpy as np

from .patterns import PatternFamily, PatternInstance, XDomain, iter_y_slices


class Coloring:
    """A coloring of ``[1, N]`` in restricted-growth form.

    ``colors[i]`` is the color of the integer ``i + 1``. Construction checks
    the restricted-growth invariant; use :func:`normalize` for arbitrary labels.
    """

    __slots__ = ("colors", "num_colors")

    def __init__(self, colors: Sequence[int] | np.ndarray):
        arr = np.array(colors, dtype=np.int64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("a coloring needs a nonempty 1-d sequence of ids")
        running = np.maximum.accumulate(arr)
        if arr[0] != 0 or np.any(arr[1:] > running[:-1] + 1) or np.any(arr < 0):
            raise ValueError("colors are not a restricted-growth string; use normalize()")
        arr.setflags(write=False)
        self.colors = arr
        self.num_colors = int(running[-1]) + 1

    @property
    def N(self) -> int:
        return int(self.colors.size)

    def color(self, v: int) -> int:
        if not 1 <= v <= self.N:
            raise ValueError(f"element {v} outside [1, {self.N}]")
        return int(self.colors[v - 1])

    def classes(self) -> list[np.ndarray]:
        """Color classes as sorted arrays of elements of [1, N]."""
        order = np.argsort(self.colors, kind="stable")
        bounds = np.searchsorted(self.colors[order], np.arange(self.num_colors + 1))
        return [order[bounds[c]:bounds[c + 1]] + 1 for c in range(self.num_colors)]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Coloring) and np.array_equal(self.colors, other.colors)

    def __hash__(self) -> int:
        return hash(self.colors.tobytes())

    def __len__(self) -> int:
        return self.N

    def __repr__(self) -> str:
        if self.N <= 20:
            return f"Coloring({self.colors.tolist()})"
        return f"Coloring(N={self.N}, num_colors={self.num_colors})"

    @classmethod
    def uniform(cls, N: int) -> "Coloring":
        return cls(np.zeros(N, dtype=np.int64))

    @classmethod
    def distinct(cls, N: int) -> "Coloring":
        return cls(np.arange(N))


def normalize(raw: Sequence[Hashable]) -> Coloring:
    """Relabel colors by order of first appearance."""
    if len(raw) == 0:
        raise ValueError("cannot normalize an empty coloring")
    seen: dict[Hashable, int] = {}
    out = [seen.setdefault(label, len(seen)) for label in raw]
    return Coloring(out)


def iter_rgs(N: int, max_colors: int | None = None) -> Iterator[tuple[int, ...]]:
    """All restricted-growth strings of length N, lexicographically."""
    if N == 0:
        yield ()
        return
    cap = N if max_colors is None else max_colors
    s = [0] * N
    top = [0] * N  # top[i] = max(s[0..i])
    while True:
        yield tuple(s)
        i = N - 1
        while i > 0 and (s[i] > top[i - 1] or s[i] + 1 >= cap):
            i -= 1
        if i == 0:
            return
        s[i] += 1
        top[i] = max(top[i - 1], s[i])
        for j in range(i + 1, N):
            s[j] = 0
            top[j] = top[i]


# -- seeded random colorings -------------------------------------------------

GENERATORS = ("splitmix64",)
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)


def splitmix64(seed: int, count: int) -> np.ndarray:
    """Counter-based SplitMix64: output i is the mix of ``seed + (i+1)*golden``."""
    with np.errstate(over="ignore"):
        z = np.uint64(seed % (1 << 64)) + _GOLDEN * np.arange(1, count + 1, dtype=np.uint64)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        return z ^ (z >> np.uint64(31))


def random_coloring(N: int, r: int, seed: int, generator: str = "splitmix64") -> Coloring:
    """Element i gets label ``splitmix64(seed)[i-1] mod r``, then normalized."""
    if generator not in GENERATORS:
        raise ValueError(f"unknown generator {generator!r}")
    if r < 1:
        raise ValueError("need at least one color")
    labels = splitmix64(seed, N) % np.uint64(r)
    _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
    remap = np.empty(len(first), dtype=np.int64)
    remap[np.argsort(first)] = np.arange(len(first))
    return Coloring(remap[inverse])


# -- classification ----------------------------------------------------------

def classify_instance(c: Coloring, inst: PatternInstance) -> dict[str, bool]:
    cols = [c.color(v) for v in inst.values]
    return {"mono": len(set(cols)) == 1, "rainbow": len(set(cols)) == len(cols)}


@dataclass
class ScanReport:
    total: int = 0
    mono: int = 0
    rainbow: int = 0
    non_rainbow: int = 0
    degenerate: int = 0
    degenerate_mono: int = 0
    mono_witness: PatternInstance | None = None
    rainbow_witness: PatternInstance | None = None

    def as_dict(self) -> dict:
        return {
            "total": self.total, "mono": self.mono, "rainbow": self.rainbow,
            "non_rainbow": self.non_rainbow, "degenerate": self.degenerate,
            "degenerate_mono": self.degenerate_mono,
            "mono_witness": self.mono_witness.as_dict() if self.mono_witness else None,
            "rainbow_witness": self.rainbow_witness.as_dict() if self.rainbow_witness else None,
        }


def _slice_colors(c: Coloring, vals: list[int], lo: int, hi: int) -> np.ndarray:
    # row i holds the colors of x + p_i(y) for x = lo..hi
    start = np.array(vals, dtype=np.int64)[:, None] + (lo - 1)
    return c.colors[start + np.arange(hi - lo + 1)]


def scan_coloring(c: Coloring, fam: PatternFamily, dom: XDomain = XDomain.ANY) -> ScanReport:
    """Count monochromatic and rainbow instances in one pass over y-slices."""
    rep = ScanReport()
    pairs = list(combinations(range(fam.k), 2))
    for y, vals, lo, hi in iter_y_slices(fam, c.N, dom):
        cols = _slice_colors(c, vals, lo, hi)
        m = hi - lo + 1
        mono = np.all(cols == cols[0], axis=0)
        rainbow = np.ones(m, dtype=bool)
        for i, j in pairs:
            rainbow &= cols[i] != cols[j]
        n_mono = int(mono.sum())
        n_rain = int(rainbow.sum())
        rep.total += m
        rep.mono += n_mono
        rep.rainbow += n_rain
        if len(set(vals)) < len(vals):
            rep.degenerate += m
            rep.degenerate_mono += n_mono
        if rep.mono_witness is None and n_mono:
            x = lo + int(np.argmax(mono))
            rep.mono_witness = PatternInstance(x, y, tuple(x + v for v in vals))
        if rep.rainbow_witness is None and n_rain:
            x = lo + int(np.argmax(rainbow))
            rep.rainbow_witness = PatternInstance(x, y, tuple(x + v for v in vals))
    rep.non_rainbow = rep.total - rep.rainbow
    return rep


def non_rainbow_upper_bound(c: Coloring, fam: PatternFamily, dom: XDomain = XDomain.ANY) -> int:
    """Sum over color classes and pairs i < j of instances with both
    ``x + p_i(y)`` and ``x + p_j(y)`` in the class."""
    if fam.k < 2:
        raise ValueError("the union bound needs k >= 2")
    pairs = list(combinations(range(fam.k), 2))
    total = 0
    for _, vals, lo, hi in iter_y_slices(fam, c.N, dom):
        cols = _slice_colors(c, vals, lo, hi)
        for i, j in pairs:
            total += int(np.count_nonzero(cols[i] == cols[j]))
    return total


# -- window densities --------------------------------------------------------

@dataclass(frozen=True)
class DensityReport:
    L_min: int
    count: int
    length: int
    color: int
    start: int

    @property
    def worst(self) -> float:
        return self.count / self.length

    @property
    def exact(self) -> Fraction:
        return Fraction(self.count, self.length)

    def as_dict(self) -> dict:
        return {"L_min": self.L_min, "worst": self.worst, "count": self.count,
                "length": self.length, "argmax": {"color": self.color, "start": self.start,
                                                   "length": self.length}}


def max_window_density(c: Coloring, L_min: int, chunk_cells: int = 1 << 22) -> DensityReport:
    """Exact max of ``|A ∩ [x, x+L)| / L`` over classes A and windows with ``L >= L_min``.

    Only lengths below ``2*L_min`` are scanned: a longer window splits into two
    windows of length >= L_min, one of which is at least as dense. Ties keep
    the first hit in scan order, so the result is deterministic.
    """
    N = c.N
    if not 1 <= L_min <= N:
        raise ValueError(f"L_min must lie in [1, {N}]")
    best = (-1, 1, 0, 0)  # count, length, color, start
    per_chunk = max(1, chunk_cells // (N + 1))
    L_hi = min(2 * L_min - 1, N)
    for c0 in range(0, c.num_colors, per_chunk):
        ids = np.arange(c0, min(c0 + per_chunk, c.num_colors))
        onehot = (c.colors[None, :] == ids[:, None]).astype(np.int32)
        prefix = np.zeros((len(ids), N + 1), dtype=np.int32)
        np.cumsum(onehot, axis=1, out=prefix[:, 1:])
        for L in range(L_min, L_hi + 1):
            counts = prefix[:, L:] - prefix[:, :-L]
            flat = int(np.argmax(counts))
            row, start = divmod(flat, counts.shape[1])
            cnt = int(counts[row, start])
            if cnt * best[1] > best[0] * L:
                best = (cnt, L, int(ids[row]), start + 1)
    return DensityReport(L_min, *best)
