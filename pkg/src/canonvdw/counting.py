"""Exact pair counts and Diophantine moment counts.

The moment of the exponential sum ``F(t) = sum_{y<=n} e(t f(y))`` of even
order ``s`` equals the number of solutions of
``f(y_1)+...+f(y_{s/2}) = f(y_{s/2+1})+...+f(y_s)`` with all ``y_i`` in
``[1, n]``; here it is computed as ``sum_v h(v)**2`` where ``h`` is the
``s/2``-fold representation function of the values of ``f``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterable

import numpy as np

from .polynomial import INT64_MAX, IntPolynomial, evaluate

DIRECT_WORK_LIMIT = 1 << 24
MAX_HISTOGRAM_LENGTH = 1 << 27
BRUTEFORCE_CAP = 10**8


def as_int_set(A: Iterable[int] | np.ndarray) -> np.ndarray:
    """Sorted array of the distinct integers in ``A``."""
    return np.unique(np.asarray(list(A) if not isinstance(A, np.ndarray) else A,
                                dtype=np.int64))


def poly_values(f: IntPolynomial, n: int) -> np.ndarray:
    return np.array([evaluate(f, y) for y in range(1, n + 1)], dtype=np.int64)


# -- exact convolution -------------------------------------------------------

def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13):
        if m % p == 0:
            return m == p
    d, r = m - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 7, 61):  # deterministic below 4.7e9
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def random_prime31(rng: random.Random) -> int:
    while True:
        cand = rng.randrange(1 << 30, 1 << 31) | 1
        if _is_prime(cand):
            return cand


def eval_mod(coeffs: np.ndarray, r: int, p: int, block: int = 1024) -> int:
    """``sum_i coeffs[i] * r**i mod p`` with int64-safe block powers (p < 2**31)."""
    m = len(coeffs)
    if m == 0:
        return 0
    small = np.empty(block, dtype=np.int64)
    acc = 1
    for i in range(block):
        small[i] = acc
        acc = acc * r % p
    big = np.empty((m + block - 1) // block, dtype=np.int64)
    step, acc = acc, 1
    for i in range(len(big)):
        big[i] = acc
        acc = acc * step % p
    idx = np.arange(m)
    powers = small[idx % block] * big[idx // block] % p
    terms = (np.asarray(coeffs, dtype=np.int64) % p) * powers % p
    return int(terms.sum() % p)


def convolve_exact(a: np.ndarray, b: np.ndarray, rng: random.Random | None = None) -> np.ndarray:
    """Exact integer convolution of two non-negative int64 arrays.

    Small products use direct convolution. Larger ones go through a real FFT,
    are rounded, and are then checked by evaluating both sides of
    ``c(r) = a(r) b(r)`` modulo a random 31-bit prime; a failed check falls
    back to the direct method.
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.size == 0 or b.size == 0:
        return np.zeros(0, dtype=np.int64)
    if int(a.sum()) * int(b.max()) > INT64_MAX // 2:
        raise OverflowError("convolution entries would exceed the int64 range")
    if a.size * b.size <= DIRECT_WORK_LIMIT:
        return np.convolve(a, b)
    out_len = a.size + b.size - 1
    size = 1 << (out_len - 1).bit_length()
    spec = np.fft.rfft(a.astype(np.float64), size) * np.fft.rfft(b.astype(np.float64), size)
    c = np.rint(np.fft.irfft(spec, size)[:out_len]).astype(np.int64)
    rng = rng or random.Random(out_len)
    p = random_prime31(rng)
    r = rng.randrange(2, p - 1)
    if eval_mod(c, r, p) != eval_mod(a, r, p) * eval_mod(b, r, p) % p or np.any(c < 0):
        return np.convolve(a, b)
    return c


# -- histograms --------------------------------------------------------------

@dataclass(frozen=True)
class ValueHistogram:
    """``counts[i]`` tuples have value sum ``offset + i``."""

    offset: int
    counts: np.ndarray

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def __getitem__(self, v: int) -> int:
        i = v - self.offset
        return int(self.counts[i]) if 0 <= i < len(self.counts) else 0

    def as_dict(self) -> dict[int, int]:
        nz = np.nonzero(self.counts)[0]
        return {int(self.offset + i): int(self.counts[i]) for i in nz}

    def convolve(self, other: "ValueHistogram", rng: random.Random | None = None) -> "ValueHistogram":
        return ValueHistogram(self.offset + other.offset,
                              convolve_exact(self.counts, other.counts, rng))

    def square_sum(self) -> int:
        return int((self.counts.astype(object) ** 2).sum())


def value_histogram(f: IntPolynomial, n: int, folds: int, seed: int = 0) -> ValueHistogram:
    """Representation function of ``f(y_1) + ... + f(y_folds)``, ``y_i`` in ``[1, n]``."""
    if folds < 1 or n < 1:
        raise ValueError("need folds >= 1 and n >= 1")
    vals = poly_values(f, n)
    lo, hi = int(vals.min()), int(vals.max())
    if max(abs(lo), abs(hi)) * folds > INT64_MAX:
        raise OverflowError("value sums leave the int64 range")
    if folds * (hi - lo) + 1 > MAX_HISTOGRAM_LENGTH:
        raise OverflowError(f"histogram range {folds * (hi - lo) + 1} exceeds the dense limit")
    base = ValueHistogram(lo, np.bincount(vals - lo).astype(np.int64))
    rng = random.Random(seed)
    result: ValueHistogram | None = None
    power, k = base, folds
    while True:
        if k & 1:
            result = power if result is None else result.convolve(power, rng)
        k >>= 1
        if not k:
            break
        power = power.convolve(power, rng)
    return result


@dataclass(frozen=True)
class CountingQuery:
    f: IntPolynomial
    n: int
    s: int

    def __post_init__(self):
        if self.s < 2 or self.s % 2:
            raise ValueError("s must be an even integer >= 2")
        if self.n < 1:
            raise ValueError("n must be positive")

    @property
    def d(self) -> int:
        return self.f.degree

    @classmethod
    def canonical(cls, f: IntPolynomial, n: int) -> "CountingQuery":
        """Query with ``s = 8**(d-1)``."""
        return cls(f, n, 8 ** (f.degree - 1))


def moment_count(q: CountingQuery) -> int:
    return value_histogram(q.f, q.n, q.s // 2).square_sum()


def moment_count_bruteforce(q: CountingQuery) -> int:
    """Direct enumeration over all ``s``-tuples; refuses more than 10**8 tuples."""
    if q.n ** q.s > BRUTEFORCE_CAP:
        raise ValueError(f"n**s = {q.n ** q.s} exceeds the brute-force cap {BRUTEFORCE_CAP}")
    vals = [evaluate(q.f, y) for y in range(1, q.n + 1)]
    h = q.s // 2
    return sum(1 for t in product(vals, repeat=q.s) if sum(t[:h]) == sum(t[h:]))


# -- pair counts -------------------------------------------------------------

def pair_count(A, f: IntPolynomial, n: int) -> int:
    """Number of ``(x, y)`` in ``A x [1, n]`` with ``x + f(y)`` in ``A``."""
    arr = as_int_set(A)
    if arr.size == 0:
        return 0
    total = 0
    for shift in poly_values(f, n):
        target = arr + shift
        pos = np.searchsorted(arr, target)
        pos[pos == arr.size] = 0
        total += int(np.count_nonzero(arr[pos] == target))
    return total


def pair_count_windowed(A, f: IntPolynomial, n: int) -> tuple[int, int]:
    """Sum of pair counts over the windows ``A ∩ [i*m, (i+2)*m)``.

    ``m`` is ``max |f(y)|`` over ``y`` in ``[1, n]``; only windows meeting ``A``
    are visited. Returns ``(window_sum, m)``.
    """
    arr = as_int_set(A)
    if arr.size == 0:
        raise ValueError("A must be nonempty")
    if f.degree < 1:
        raise ValueError("f must be nonconstant")
    m = int(np.abs(poly_values(f, n)).max())
    if m == 0:
        raise ValueError("f vanishes on [1, n]; windows degenerate")
    q = np.unique(arr // m)
    windows = np.unique(np.concatenate([q - 1, q]))
    total = 0
    for i in windows:
        lo, hi = np.searchsorted(arr, [i * m, (i + 2) * m])
        if hi > lo:
            total += pair_count(arr[lo:hi], f, n)
    return total, m


def pair_ratio(A, f: IntPolynomial, n: int, s: int) -> float:
    """``pair_count / (|A|**(1+1/s) * n**(1-d/s))``; defined for ``deg f >= 2``."""
    arr = as_int_set(A)
    if arr.size == 0:
        raise ValueError("A must be nonempty")
    d = f.degree
    if d < 2:
        raise ValueError("the local pair bound needs deg f >= 2")
    return pair_count(arr, f, n) / (arr.size ** (1 + 1 / s) * n ** (1 - d / s))
