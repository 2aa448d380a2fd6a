"""Polynomial progressions ``x + p_1(y), ..., x + p_k(y)`` inside ``[1, N]``."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .polynomial import (
    IntPolynomial,
    difference,
    evaluate,
    family_max_diff_degree,
    format_poly,
    growth_cutoff,
    parse_family,
)


class XDomain(enum.Enum):
    ANY = "any"
    NONNEG = "nonneg"
    POS = "pos"

    @property
    def lower(self) -> int | None:
        return {XDomain.ANY: None, XDomain.NONNEG: 0, XDomain.POS: 1}[self]

    @classmethod
    def parse(cls, text: str | "XDomain") -> "XDomain":
        if isinstance(text, XDomain):
            return text
        aliases = {"any": cls.ANY, "anyinteger": cls.ANY, "z": cls.ANY,
                   "nonneg": cls.NONNEG, "nonnegative": cls.NONNEG,
                   "pos": cls.POS, "positive": cls.POS}
        try:
            return aliases[text.strip().lower()]
        except KeyError:
            raise ValueError(f"unknown x-domain {text!r}") from None


@dataclass(frozen=True)
class PatternFamily:
    polys: tuple[IntPolynomial, ...]
    D: int | None = field(init=False, compare=False)

    def __init__(self, polys: Sequence[IntPolynomial]):
        polys = tuple(polys)
        if not polys:
            raise ValueError("a family needs at least one polynomial")
        for p in polys:
            if not p.vanishes_at_zero():
                raise ValueError(f"{format_poly(p)} does not vanish at 0")
        if len(set(polys)) != len(polys):
            raise ValueError("polynomials in a family must be pairwise distinct")
        object.__setattr__(self, "polys", polys)
        D = family_max_diff_degree(polys) if len(polys) >= 2 else None
        object.__setattr__(self, "D", D)

    @classmethod
    def parse(cls, text: str) -> "PatternFamily":
        return cls(parse_family(text))

    @property
    def k(self) -> int:
        return len(self.polys)

    def values_at(self, y: int) -> list[int]:
        return [evaluate(p, y) for p in self.polys]

    def __str__(self) -> str:
        return "{" + ", ".join(format_poly(p) for p in self.polys) + "}"


@dataclass(frozen=True)
class PatternInstance:
    x: int
    y: int
    values: tuple[int, ...]

    @property
    def degenerate(self) -> bool:
        return len(set(self.values)) < len(self.values)

    def as_dict(self) -> dict:
        return {"x": self.x, "y": self.y, "values": list(self.values),
                "degenerate": self.degenerate}


def _scan_limit(fam: PatternFamily, N: int) -> int:
    """Exclusive upper limit on y beyond which no instance fits in [1, N].

    Every instance forces ``|g(y)| <= N - 1`` for each pairwise difference
    ``g``; for ``k == 1`` the base point ``x`` is itself in ``[1, N]`` so
    ``g = p_1`` plays that role.
    """
    if fam.k == 1:
        gaps = [fam.polys[0]]
    else:
        gaps = [difference(p, q) for p, q in combinations(fam.polys, 2)]
    gaps = [g for g in gaps if g.degree >= 1]
    if not gaps:
        raise ValueError("the single-polynomial family {0} has instances for every y")
    return min(growth_cutoff(g, N) for g in gaps)


def x_interval(fam: PatternFamily, N: int, dom: XDomain, y: int) -> tuple[int, int]:
    """Inclusive range of admissible x for this y (empty when lo > hi)."""
    vals = fam.values_at(y)
    lo = 1 - min(vals)
    hi = N - max(vals)
    if dom.lower is not None:
        lo = max(lo, dom.lower)
    if fam.k == 1:
        lo, hi = max(lo, 1), min(hi, N)
    return lo, hi


def iter_y_slices(fam: PatternFamily, N: int, dom: XDomain = XDomain.ANY
                  ) -> Iterator[tuple[int, list[int], int, int]]:
    """Yield ``(y, values_at_y, x_lo, x_hi)`` for every y with a nonempty x-range."""
    if N < 1:
        raise ValueError("N must be positive")
    dom = XDomain.parse(dom)
    for y in range(1, _scan_limit(fam, N)):
        vals = fam.values_at(y)
        lo, hi = x_interval(fam, N, dom, y)
        if lo <= hi:
            yield y, vals, lo, hi


def y_bound(fam: PatternFamily, N: int, dom: XDomain = XDomain.ANY) -> int:
    best = 0
    for y, _, _, _ in iter_y_slices(fam, N, dom):
        best = y
    return best


def enumerate_instances(fam: PatternFamily, N: int, dom: XDomain = XDomain.ANY
                        ) -> Iterator[PatternInstance]:
    """All instances inside [1, N], ordered by y then x."""
    for y, vals, lo, hi in iter_y_slices(fam, N, dom):
        for x in range(lo, hi + 1):
            yield PatternInstance(x, y, tuple(x + v for v in vals))


def count_instances(fam: PatternFamily, N: int, dom: XDomain = XDomain.ANY) -> int:
    return sum(hi - lo + 1 for _, _, lo, hi in iter_y_slices(fam, N, dom))
