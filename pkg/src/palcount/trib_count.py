"""Counting palindrome occurrences in prefixes of the Tribonacci word.

Mirror of :mod:`palcount.fib_count`. Block m covers positions
``[k_{m+3} - 1, k_{m+4} - 2]`` (length t_{m-1}) and equals blocks m-3, m-2,
m-1 concatenated, plus one. The fractional closed forms are evaluated with
:class:`fractions.Fraction` and must come out integral.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from itertools import accumulate

from palcount.fib_count import CountSlice, DEFAULT_CUTOFF, exact_div
from palcount.sequences import kernel_index, kernel_number, trib

_BASE = (None, 1, 1, 2, 1, 2, 2, 3)  # b(1..7)


def _integral(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"closed form produced non-integer {x}")
    return x.numerator


def window(n: int) -> int:
    """The m >= 1 with k_{m+3} <= n + 1 < k_{m+4}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return kernel_index(n + 1) - 3


_lock = threading.Lock()
_values: list[int] = list(_BASE[1:])
_cumulative: list[int] = [0, *accumulate(_BASE[1:])]
_built_block = 3


def _grow(n: int) -> None:
    global _built_block
    with _lock:
        while len(_values) < n:
            m = _built_block + 1
            lo, hi = kernel_number(m) - 2, kernel_number(m + 3) - 2
            block = [v + 1 for v in _values[lo:hi]]
            _cumulative.extend(accumulate(block, initial=_cumulative.pop()))
            _values.extend(block)
            _built_block = m


def materialize(n: int) -> list[int]:
    """[b(1), ..., b(n)] built from scratch, bypassing the shared cache."""
    values = list(_BASE[1:])
    m = 3
    while len(values) < n:
        m += 1
        values.extend(v + 1 for v in values[kernel_number(m) - 2: kernel_number(m + 3) - 2])
    return values[:n]


def b_block(m: int) -> CountSlice:
    """Block m: the values b(k_{m+3} - 1), ..., b(k_{m+4} - 2)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    lo, hi = kernel_number(m + 3) - 1, kernel_number(m + 4) - 2
    _grow(hi)
    return CountSlice(lo, tuple(_values[lo - 1: hi]))


def b_table(n: int) -> list[int]:
    """[b(1), ..., b(n)] from the materialized blocks."""
    _grow(n)
    return _values[:n]


def big_b_table(n: int) -> list[int]:
    """[B(0), B(1), ..., B(n)] from the materialized blocks."""
    _grow(n)
    return _cumulative[: n + 1]


def b(n: int) -> int:
    """Number of palindrome occurrences ending at position n."""
    m = window(n)
    extra = 0
    while m > 3:
        n -= trib(m - 1)
        extra += 1
        m = window(n)
    return _BASE[n] + extra


def d(m: int) -> int:
    """D(m), the sum of block m, m >= 1."""
    if m < 1:
        raise ValueError("m must be >= 1")
    t0, t1, t2 = trib(m), trib(m - 1), trib(m - 2)
    return exact_div(m * (3 * t0 + 7 * t1 + 2 * t2) + 3 * t0 - 3 * t1 + 4 * t2, 22)


def big_b_at_kernel_landmark(m: int) -> int:
    """B(k_{m+4} - 2), m >= 0 (the value at m = 0 is B(0) = 0)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    t0, t1, t2 = trib(m), trib(m + 1), trib(m + 2)
    value = (
        Fraction(m, 44) * (8 * t2 + 4 * t1 - 2 * t0)
        - Fraction(1, 44) * (9 * t2 - 3 * t0)
        + Fraction(3, 4)
    )
    return _integral(value)


def big_b_at_trib(m: int) -> int:
    """B(t_m), m >= 0."""
    if m < 0:
        raise ValueError("m must be >= 0")
    t0, t1, t2 = trib(m), trib(m - 1), trib(m - 2)
    value = (
        Fraction(m, 22) * (10 * t0 + 5 * t1 + 3 * t2)
        + Fraction(1, 22) * (-23 * t0 + 12 * t1 - 5 * t2)
        + m
        + Fraction(3, 2)
    )
    return _integral(value)


def thresholds(m: int) -> tuple[int, int]:
    """(alpha_m, beta_m): where window m switches from block m-3 to m-2 to m-1."""
    alpha = kernel_number(m + 3) + trib(m - 4)
    return alpha, alpha + trib(m - 3)


def partial_sum_b(n: int) -> int:
    """Sum of b(i) over k_{m+3} - 1 <= i <= n, where k_{m+3} <= n + 1 < k_{m+4}."""
    m = window(n)
    total = 0
    while m > 3:
        total += n - kernel_number(m + 3) + 2
        alpha, beta = thresholds(m)
        if n + 1 < alpha:
            target = m - 3
        elif n + 1 < beta:
            target = m - 2
            total += d(m - 3)
        else:
            target = m - 1
            total += d(m - 3) + d(m - 2)
        n -= trib(m - 1)
        m = window(n)
        assert m == target, (m, target)
    return total + sum(_BASE[kernel_number(m + 3) - 1: n + 1])


def big_b(n: int, method: str = "auto", cutoff: int = DEFAULT_CUTOFF) -> int:
    """B(n), the number of palindrome occurrences in the length-n prefix.

    Methods as for :func:`palcount.fib_count.big_a`.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if method == "auto":
        method = "blocks" if n < cutoff else "closed"
    if method == "blocks":
        _grow(n)
        return _cumulative[n]
    if method == "closed":
        return big_b_at_kernel_landmark(window(n) - 1) + partial_sum_b(n)
    raise ValueError(f"unknown method {method!r}")
