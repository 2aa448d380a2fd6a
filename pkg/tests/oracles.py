"""Independent brute-force oracles.

Nothing here calls into the package's counting, scanning or search code;
polynomials are plain coefficient lists evaluated by ``poly``.
"""

from __future__ import annotations

from itertools import product

import numpy as np


def poly(coeffs, y):
    return sum(c * y ** i for i, c in enumerate(coeffs))


def instances(polys, N, xdom="any", ymax=None):
    """All (x, y, values) with every value in [1, N], by a plain double loop.

    y runs up to ``ymax`` (default N, enough when every pairwise difference
    satisfies |g(y)| >= y for y >= 2). For k == 1, x itself lies in [1, N].
    """
    k = len(polys)
    xlo = {"any": None, "nonneg": 0, "pos": 1}[xdom]
    out = []
    ymax = ymax if ymax is not None else N
    for y in range(1, ymax + 1):
        vals = [poly(p, y) for p in polys]
        if k >= 2 and max(vals) - min(vals) > N - 1:
            continue
        for x in range(-abs(max(vals)) - abs(min(vals)) - N, N + abs(min(vals)) + 1):
            if xlo is not None and x < xlo:
                continue
            if k == 1 and not 1 <= x <= N:
                continue
            v = [x + t for t in vals]
            if all(1 <= t <= N for t in v):
                out.append((x, y, tuple(v)))
    return out


def pair_count(A, coeffs, n):
    S = set(A)
    return sum(1 for x in S for y in range(1, n + 1) if x + poly(coeffs, y) in S)


def moment(coeffs, n, s):
    vals = [poly(coeffs, y) for y in range(1, n + 1)]
    h = s // 2
    return sum(1 for t in product(vals, repeat=s) if sum(t[:h]) == sum(t[h:]))


def moment_direct(coeffs, n, s):
    """Moment via bincount of half-sums and direct numpy convolution."""
    vals = np.array([poly(coeffs, y) for y in range(1, n + 1)], dtype=np.int64)
    lo = int(vals.min())
    h = np.bincount(vals - lo).astype(np.int64)
    acc = np.array([1], dtype=np.int64)
    for _ in range(s // 2):
        acc = np.convolve(acc, h)
    return int(sum(int(v) * int(v) for v in acc))


def window_density(colors, L_min):
    """Max over classes and windows of length >= L_min, as (count, length)."""
    N = len(colors)
    best = (0, 1)
    for c in set(colors):
        for start in range(N):
            cnt = 0
            for end in range(start, N):
                cnt += colors[end] == c
                L = end - start + 1
                if L >= L_min and cnt * best[1] > best[0] * L:
                    best = (cnt, L)
    return best


def _rgs_extend(rows, mx):
    counts = mx.astype(np.int64) + 2
    rep = np.repeat(np.arange(len(rows)), counts)
    starts = np.repeat(np.cumsum(counts) - counts, counts)
    new = (np.arange(len(rep)) - starts).astype(np.int8)
    return np.hstack([rows[rep], new[:, None]]), np.maximum(mx[rep], new)


def _rgs_prefixes(P):
    def rec(prefix, top):
        if len(prefix) == P:
            yield prefix
            return
        for c in range(top + 2):
            yield from rec(prefix + [c], max(top, c))
    yield from rec([0], 0)


def count_canonical_avoiders(polys, N, xdom="any", prefix_len=7):
    """Restricted-growth colorings of [N] with no monochromatic and no rainbow
    instance, counted by full enumeration (no pruning), vectorized in numpy.

    Degenerate instances count as monochromatic when their values share a color.
    """
    insts = [v for _, _, v in instances(polys, N, xdom)]
    k = len(polys)
    P = min(prefix_len, N)
    total = 0
    for pre in _rgs_prefixes(P):
        rows = np.array([pre], dtype=np.int8)
        mx = np.array([max(pre)], dtype=np.int8)
        for _ in range(N - P):
            rows, mx = _rgs_extend(rows, mx)
        alive = np.ones(len(rows), dtype=bool)
        for vals in insts:
            cols = rows[:, [v - 1 for v in vals]]
            mono = np.all(cols == cols[:, :1], axis=1)
            rainbow = np.ones(len(rows), dtype=bool)
            for i in range(k):
                for j in range(i + 1, k):
                    rainbow &= cols[:, i] != cols[:, j]
            alive &= ~(mono | rainbow)
        total += int(alive.sum())
    return total


def count_mono_avoiders(polys, N, r, xdom="any"):
    """Colorings of [N] with at most r colors (up to renaming) and no
    monochromatic instance, by enumerating all r**N labelings."""
    insts = [v for _, _, v in instances(polys, N, xdom)]
    seen = set()
    for labels in product(range(r), repeat=N):
        ok = all(len({labels[v - 1] for v in vals}) > 1 for vals in insts)
        if ok:
            relabel = {}
            seen.add(tuple(relabel.setdefault(c, len(relabel)) for c in labels))
    return len(seen)
