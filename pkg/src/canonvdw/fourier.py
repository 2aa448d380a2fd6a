"""Exponential sums sampled on uniform grids ``t_j = j / M``.

A trigonometric polynomial with integer frequencies in ``[lo, hi]`` has grid
average equal to its integral over ``[0, 1]`` as long as no nonzero multiple
of ``M`` lies in ``[lo, hi]``. Samples are built from integer frequencies
reduced mod ``M`` and an inverse FFT, so large frequencies lose no precision.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .counting import CountingQuery, as_int_set, poly_values
from .polynomial import IntPolynomial

ROUNDING_TOL = 1e-6
CHAIN_TOL = 1e-9
OVERSAMPLE = 8


class GridError(ArithmeticError):
    """A grid average failed to round to an integer within tolerance."""


class HolderChainError(ArithmeticError):
    def __init__(self, step: str, message: str):
        super().__init__(f"{step}: {message}")
        self.step = step


@dataclass(frozen=True)
class FourierGrid:
    M: int
    values: np.ndarray = field(repr=False)
    freq_lo: int
    freq_hi: int

    @property
    def nodes(self) -> np.ndarray:
        return np.arange(self.M) / self.M

    def exact_for(self, lo: int | None = None, hi: int | None = None) -> bool:
        """True if no nonzero multiple of M falls in ``[lo, hi]``."""
        lo = self.freq_lo if lo is None else lo
        hi = self.freq_hi if hi is None else hi
        first = -(-lo // self.M) * self.M  # smallest multiple >= lo
        return first > hi or (first == 0 and self.M > hi)

    def mean(self) -> complex:
        return complex(self.values.mean())


def alias_free_size(lo: int, hi: int) -> int:
    """Smallest grid size that integrates frequencies in ``[lo, hi]`` exactly,
    up to the cheap sufficient choice ``max(|lo|, |hi|) + 1``."""
    return max(abs(lo), abs(hi)) + 1


def _sample(freqs: np.ndarray, M: int) -> np.ndarray:
    bins = np.bincount(np.mod(freqs, M), minlength=M).astype(np.float64)
    return np.fft.ifft(bins) * M


def sample_set_transform(A, M: int) -> FourierGrid:
    """Samples of ``sum_{x in A} e(t x)``."""
    if M < 1:
        raise ValueError("M must be positive")
    arr = as_int_set(A)
    if arr.size == 0:
        return FourierGrid(M, np.zeros(M, dtype=complex), 0, 0)
    return FourierGrid(M, _sample(arr, M), int(arr[0]), int(arr[-1]))


def sample_phase_sum(f: IntPolynomial, n: int, M: int) -> FourierGrid:
    """Samples of ``F(t) = sum_{y=1}^n e(t f(y))``."""
    if M < 1 or n < 1:
        raise ValueError("M and n must be positive")
    vals = poly_values(f, n)
    return FourierGrid(M, _sample(vals, M), int(vals.min()), int(vals.max()))


def _round_average(avg: complex, what: str) -> int:
    result = int(round(avg.real))
    slack = ROUNDING_TOL * (abs(result) + 1)
    if abs(avg.imag) > slack or abs(avg.real - result) > slack:
        raise GridError(f"{what}: grid average {avg} is not an integer within {slack:g}")
    return result


def _pair_frequency_range(arr: np.ndarray, f_lo: int, f_hi: int) -> tuple[int, int]:
    span = int(arr[-1] - arr[0])
    return f_lo - span, f_hi + span


def pair_integral(A, f: IntPolynomial, n: int) -> int:
    """Integral of ``|1_A^(t)|^2 F(t)``, i.e. the number of ``x + f(y) = z`` in A."""
    arr = as_int_set(A)
    if arr.size == 0:
        return 0
    vals = poly_values(f, n)
    lo, hi = _pair_frequency_range(arr, int(vals.min()), int(vals.max()))
    M = alias_free_size(lo, hi)
    SA = sample_set_transform(arr, M)
    F = sample_phase_sum(f, n, M)
    assert SA.exact_for(lo, hi)
    return _round_average(complex(np.mean(np.abs(SA.values) ** 2 * F.values)), "pair integral")


def moment_integral(q: CountingQuery) -> int:
    """Integral of ``|F(t)|^s`` on a grid with ``M > s * span(f)``."""
    vals = poly_values(q.f, q.n)
    span = int(vals.max() - vals.min())
    M = q.s * span + 1
    F = sample_phase_sum(q.f, q.n, M)
    h = q.s // 2
    assert F.exact_for(-h * span, h * span)
    return _round_average(complex(np.mean(np.abs(F.values) ** q.s)), "moment integral")


@dataclass
class ChainReport:
    size: int
    s: int
    M: int
    lhs: float
    holder: float
    sup_bound: float
    parseval: float
    sup_norm: float
    verdict: bool
    failed_step: str | None = None

    def as_dict(self) -> dict:
        return {
            "size": self.size, "s": self.s, "M": self.M,
            "steps": {"lhs": self.lhs, "holder": self.holder,
                      "sup_bound": self.sup_bound, "parseval": self.parseval},
            "sup_norm": self.sup_norm, "verdict": self.verdict,
            "failed_step": self.failed_step,
        }


def holder_chain_report(A, f: IntPolynomial, n: int, s: int, *, strict: bool = True,
                        tol: float = CHAIN_TOL) -> ChainReport:
    """Evaluate the four stages of the local pair-count bound on one grid.

    Stages: the pair integral, its Hölder bound with exponents ``s/(s-1)``
    and ``s``, the bound after ``|1_A^| <= |A|``, and the closed form after
    Parseval. With ``strict`` a violated stage raises HolderChainError.
    """
    arr = as_int_set(A)
    if arr.size == 0:
        raise ValueError("A must be nonempty")
    if s < 2 or s % 2:
        raise ValueError("s must be an even integer >= 2")
    vals = poly_values(f, n)
    f_lo, f_hi = int(vals.min()), int(vals.max())
    spanA, spanF = int(arr[-1] - arr[0]), f_hi - f_lo
    lo, hi = _pair_frequency_range(arr, f_lo, f_hi)
    widest = max(2 * spanA + spanF, s * spanF, 1)
    M = max(OVERSAMPLE * widest + 1, alias_free_size(lo, hi))
    SA = sample_set_transform(arr, M).values
    F = sample_phase_sum(f, n, M).values
    size = int(arr.size)

    absA = np.abs(SA)
    lhs_c = complex(np.mean(absA ** 2 * F))
    frac = float(np.mean(absA ** (2 * s / (s - 1))))
    energy = float(np.mean(absA ** 2))
    moment = float(np.mean(np.abs(F) ** s))
    outer = 1 - 1 / s

    lhs = lhs_c.real
    holder = frac ** outer * moment ** (1 / s)
    sup_bound = (size ** (2 / (s - 1)) * energy) ** outer * moment ** (1 / s)
    parseval = (size ** ((s + 1) / (s - 1))) ** outer * moment ** (1 / s)
    rep = ChainReport(size, s, M, lhs, holder, sup_bound, parseval,
                      float(absA.max()), verdict=True)

    checks = [
        ("lhs<=holder", abs(lhs_c) <= holder * (1 + tol) + tol),
        ("holder<=sup_bound", holder <= sup_bound * (1 + tol)),
        ("sup_bound==parseval", abs(sup_bound - parseval) <= tol * parseval),
        ("sup_norm<=|A|", rep.sup_norm <= size * (1 + tol)),
    ]
    for step, ok in checks:
        if not ok:
            rep.verdict = False
            rep.failed_step = step
            if strict:
                raise HolderChainError(step, f"violated for |A|={size}, n={n}, s={s}: {rep.as_dict()}")
            break
    return rep
