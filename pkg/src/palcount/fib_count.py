"""Counting palindrome occurrences in prefixes of the Fibonacci word.

``a(n)`` is the number of (palindrome, occurrence) pairs ending exactly at
position n, and ``big_a(n)`` is their total inside the length-n prefix.
Positions are grouped in blocks ``[f_m - 1, f_{m+1} - 2]``; each block is the
two previous blocks concatenated with every entry raised by one.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import accumulate

from palcount.sequences import fib, fib_index

DEFAULT_CUTOFF = 10_000

_BASE = (None, 1, 1, 2)  # a(1), a(2), a(3)


@dataclass(frozen=True)
class CountSlice:
    """Per-position counts starting at 1-based position ``start``."""

    start: int
    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("CountSlice must be non-empty")

    @property
    def stop(self) -> int:
        """Last position covered (inclusive)."""
        return self.start + len(self.values) - 1

    def __len__(self):
        return len(self.values)

    def __getitem__(self, position: int) -> int:
        if not self.start <= position <= self.stop:
            raise IndexError(position)
        return self.values[position - self.start]

    def total(self) -> int:
        return sum(self.values)


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def window(n: int) -> int:
    """The m with f_m <= n + 1 < f_{m+1}, i.e. the block holding position n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return fib_index(n + 1)


# ---------------------------------------------------------------------------
# Materialized blocks
# ---------------------------------------------------------------------------

_lock = threading.Lock()
_values: list[int] = [1, 1, 2]   # a(1..), grown block by block
_cumulative: list[int] = [0, 1, 2, 4]  # _cumulative[n] == A(n)
_built_block = 2


def _grow(n: int) -> None:
    global _built_block
    with _lock:
        while len(_values) < n:
            m = _built_block + 1
            lo, hi = fib(m - 2) - 2, fib(m) - 2
            block = [v + 1 for v in _values[lo:hi]]
            _cumulative.extend(accumulate(block, initial=_cumulative.pop()))
            _values.extend(block)
            _built_block = m


def materialize(n: int) -> list[int]:
    """[a(1), ..., a(n)] built from scratch, bypassing the shared cache."""
    values = [1, 1, 2]
    m = 2
    while len(values) < n:
        m += 1
        values.extend(v + 1 for v in values[fib(m - 2) - 2: fib(m) - 2])
    return values[:n]


def a_block(m: int) -> CountSlice:
    """Block m: the values a(f_m - 1), ..., a(f_{m+1} - 2)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    _grow(fib(m + 1) - 2)
    return CountSlice(fib(m) - 1, tuple(_values[fib(m) - 2: fib(m + 1) - 2]))


def a_table(n: int) -> list[int]:
    """[a(1), ..., a(n)] from the materialized blocks."""
    _grow(n)
    return _values[:n]


def big_a_table(n: int) -> list[int]:
    """[A(0), A(1), ..., A(n)] from the materialized blocks."""
    _grow(n)
    return _cumulative[: n + 1]


# ---------------------------------------------------------------------------
# Logarithmic evaluation
# ---------------------------------------------------------------------------

def a(n: int) -> int:
    """Number of palindrome occurrences ending at position n.

    Each block entry equals the entry f_{m-1} positions earlier plus one,
    so we walk down the blocks instead of building them.
    """
    m = window(n)
    extra = 0
    while m > 2:
        n -= fib(m - 1)
        extra += 1
        m = m - 1 if n + 1 >= fib(m - 1) else m - 2
    return _BASE[n] + extra


def c(m: int) -> int:
    """C(m) = A(f_{m+1} - 2) - A(f_m - 2), the sum of block m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return exact_div((m + 1) * fib(m + 1) + (m - 2) * fib(m - 1), 5)


def a_landmarks(m: int) -> tuple[int, int, int]:
    """(a(f_m - 2), a(f_m - 1), a(f_m)) in closed form, m >= 2."""
    if m < 2:
        raise ValueError("m must be >= 2")
    return m - 1, (m + 1) // 2, (m + 2) // 2


def big_a_before_fib(m: int) -> int:
    """A(f_m - 2) in closed form, m >= 1."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return exact_div((m - 3) * fib(m + 2) + (m - 1) * fib(m), 5) + 2


def big_a_at_fib(m: int) -> int:
    """A(f_m) in closed form, m >= 0."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return exact_div((m - 3) * fib(m + 2) + (m - 1) * fib(m), 5) + m + 3


def partial_sum_a(n: int) -> int:
    """Sum of a(i) over f_m - 1 <= i <= n, where f_m <= n + 1 < f_{m+1}.

    Each step maps n into block m-2 (when n + 1 < 2 f_{m-1}) or block m-1,
    adding the skipped block sum C(m-2) in the second case.
    """
    m = window(n)
    total = 0
    while m > 2:
        total += n - fib(m) + 2
        if n + 1 < 2 * fib(m - 1):
            n -= fib(m - 1)
            m -= 2
        else:
            total += c(m - 2)
            n -= fib(m - 1)
            m -= 1
    return total + sum(_BASE[fib(m) - 1: n + 1])


def big_a(n: int, method: str = "auto", cutoff: int = DEFAULT_CUTOFF) -> int:
    """A(n), the number of palindrome occurrences in the length-n prefix.

    ``method`` is ``"closed"`` (closed-form landmark plus the partial-sum
    recursion), ``"blocks"`` (sum of materialized blocks) or ``"auto"``,
    which uses blocks below ``cutoff`` and the closed path above it.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if method == "auto":
        method = "blocks" if n < cutoff else "closed"
    if method == "blocks":
        _grow(n)
        return _cumulative[n]
    if method == "closed":
        return big_a_before_fib(window(n)) + partial_sum_a(n)
    raise ValueError(f"unknown method {method!r}")
