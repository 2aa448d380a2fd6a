"""Integer polynomials in one variable with checked 64-bit evaluation."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


def check_int64(value: int, what: str = "value") -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise OverflowError(f"{what} {value} does not fit in a signed 64-bit integer")
    return value


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, ``coeffs[i]`` multiplying ``y**i``.

    Trailing zero coefficients are stripped on construction so that equality
    is coefficient-wise on the normalized form. The zero polynomial has
    ``coeffs == ()`` and ``degree == -1``.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        for c in cs:
            check_int64(c, "coefficient")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, coeff: int, power: int) -> "IntPolynomial":
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def vanishes_at_zero(self) -> bool:
        return not self.coeffs or self.coeffs[0] == 0

    def __call__(self, y: int) -> int:
        return evaluate(self, y)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return difference(self, other)

    def __str__(self) -> str:
        return format_poly(self)


def evaluate(p: IntPolynomial, y: int) -> int:
    """Exact ``p(y)``; raises OverflowError if any Horner step leaves int64."""
    check_int64(y, "argument")
    acc = 0
    for c in reversed(p.coeffs):
        acc = check_int64(acc * y, "intermediate")
        acc = check_int64(acc + c, "intermediate")
    return acc


def difference(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    n = max(len(p.coeffs), len(q.coeffs))
    a = p.coeffs + (0,) * (n - len(p.coeffs))
    b = q.coeffs + (0,) * (n - len(q.coeffs))
    return IntPolynomial(x - y for x, y in zip(a, b))


def family_max_diff_degree(polys: Sequence[IntPolynomial]) -> int:
    """Largest degree of ``p_i - p_j`` over all unordered pairs ``i != j``."""
    if len(polys) < 2:
        raise ValueError("need at least two polynomials")
    best = -1
    for p, q in combinations(polys, 2):
        g = difference(p, q)
        if g.is_zero:
            raise ValueError(f"duplicate polynomial {format_poly(p)}")
        best = max(best, g.degree)
    return best


def growth_cutoff(g: IntPolynomial, bound: int) -> int:
    """Smallest Y >= 1 with ``|g(y)| >= bound`` for every ``y >= Y``.

    Uses ``|g(y)| >= y**(D-1) * (|a_D|*y - sum_{i<D} |a_i|)`` for ``y >= 1``.
    """
    if g.degree < 1:
        raise ValueError("cutoff needs a nonconstant polynomial")
    lower = sum(abs(c) for c in g.coeffs[:-1])
    lead = abs(g.leading)
    return max(1, -(-(lower + bound) // lead))


# -- text syntax -------------------------------------------------------------

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(\*?\s*y\s*(?:\^\s*(\d+))?)?")


def parse_poly(text: str) -> IntPolynomial:
    """Parse ``"0,0,1"`` (low-to-high coefficients) or ``"2*y^2 - y + 3"``."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    if "y" not in s:
        if "," in s or re.fullmatch(r"[+-]?\d+", s.replace(" ", "")):
            return IntPolynomial(int(t) for t in s.split(","))
        raise ValueError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, int] = {}
    pos = 0
    compact = s.replace(" ", "")
    while pos < len(compact):
        m = _TERM.match(compact, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at {compact[pos:]!r}")
        sign, digits, ypart, power = m.groups()
        if pos > 0 and not sign:
            raise ValueError(f"missing operator in {text!r}")
        if not digits and not ypart:
            raise ValueError(f"dangling sign in {text!r}")
        if digits and ypart and not ypart.startswith("*"):
            raise ValueError(f"use '*' between coefficient and y in {text!r}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        e = (int(power) if power else 1) if ypart else 0
        coeffs[e] = coeffs.get(e, 0) + c
        pos = m.end()
    top = max(coeffs)
    return IntPolynomial(coeffs.get(i, 0) for i in range(top + 1))


def parse_family(text: str) -> list[IntPolynomial]:
    """Polynomials separated by ``;``, e.g. ``"y; 2*y; y^2"``."""
    return [parse_poly(part) for part in text.split(";") if part.strip()]


def format_poly(p: IntPolynomial) -> str:
    if p.is_zero:
        return "0"
    out = []
    for e in range(p.degree, -1, -1):
        c = p.coeffs[e]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = "y" if e == 1 else f"y^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text
