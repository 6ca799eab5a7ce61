"""Fibonacci / Tribonacci words and the integer sequences that index them.

Positions are 1-based throughout: ``factor(w, i, j)`` is the slice
``w[i..j]`` and ``factor(w, i, i - 1)`` is the empty word. Words are plain
``str`` over the letters ``a``, ``b``, ``c``.
"""
from __future__ import annotations

import bisect
import threading
from dataclasses import dataclass

import numpy as np

FIB = "fib"
TRIB = "trib"
FAMILIES = (FIB, TRIB)


def check_family(family: str) -> str:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return family


# ---------------------------------------------------------------------------
# Words
# ---------------------------------------------------------------------------

def factor(w: str, i: int, j: int) -> str:
    """Return ``w[i..j]`` with 1-based inclusive bounds."""
    if i < 1 or j < i - 1 or j > len(w):
        raise IndexError(f"factor [{i},{j}] out of range for word of length {len(w)}")
    return w[i - 1:j]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


# ---------------------------------------------------------------------------
# Memoized integer sequences
# ---------------------------------------------------------------------------

class _Table:
    """Growable memo table for a sequence indexed from ``first``."""

    def __init__(self, first: int, seed: list[int], step):
        self.first = first
        self._values = list(seed)
        self._step = step
        self._lock = threading.Lock()

    def __call__(self, m: int) -> int:
        idx = m - self.first
        if idx < 0:
            raise ValueError(f"index {m} below domain start {self.first}")
        values = self._values
        if idx >= len(values):
            with self._lock:
                while len(values) <= idx:
                    values.append(self._step(values))
        return values[idx]

    def index_le(self, n: int) -> int:
        """Largest index m with value(m) <= n; the sequence must be non-decreasing."""
        values = self._values
        if values[-1] <= n:
            with self._lock:
                while values[-1] <= n:
                    values.append(self._step(values))
        return bisect.bisect_right(values, n) - 1 + self.first


_fib = _Table(-2, [0, 1], lambda v: v[-1] + v[-2])
_trib = _Table(-2, [0, 1, 1], lambda v: v[-1] + v[-2] + v[-3])
_kern = _Table(0, [0, 1, 1], lambda v: v[-1] + v[-2] + v[-3] - 1)


def fib(m: int) -> int:
    """f_m with f_{-2}=0, f_{-1}=1, f_m=f_{m-1}+f_{m-2}."""
    return _fib(m)


def trib(m: int) -> int:
    """t_m with t_{-2}=0, t_{-1}=t_0=1, t_m=t_{m-1}+t_{m-2}+t_{m-3}."""
    return _trib(m)


def kernel_number(m: int) -> int:
    """k_m with k_0=0, k_1=k_2=1, k_m=k_{m-1}+k_{m-2}+k_{m-3}-1.

    ``k_m`` is the length of the Tribonacci kernel word of order ``m``.
    """
    return _kern(m)


def fib_index(n: int) -> int:
    """Largest m >= 0 with f_m <= n (n >= 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _fib.index_le(n)


def trib_index(n: int) -> int:
    """Largest m >= 0 with t_m <= n (n >= 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _trib.index_le(n)


def kernel_index(n: int) -> int:
    """Largest j with k_j <= n (n >= 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _kern.index_le(n)


# ---------------------------------------------------------------------------
# Prefixes
# ---------------------------------------------------------------------------

_word_lock = threading.Lock()
_fib_words = ["b", "a"]          # F_{-1}, F_0
_trib_words = ["", "c", "a", "ab"]  # T_{-2}, T_{-1}, T_0, T_1


def fib_word(m: int) -> str:
    """F_m = sigma^m(a); F_{-1}=b, F_{-2} is empty."""
    if m == -2:
        return ""
    if m < -2:
        raise ValueError("m must be >= -2")
    with _word_lock:
        while len(_fib_words) <= m + 1:
            _fib_words.append(_fib_words[-1] + _fib_words[-2])
        return _fib_words[m + 1]


def trib_word(m: int) -> str:
    """T_m = tau^m(a); T_{-1}=c, T_{-2} is empty."""
    if m < -2:
        raise ValueError("m must be >= -2")
    with _word_lock:
        while len(_trib_words) <= m + 2:
            _trib_words.append(_trib_words[-1] + _trib_words[-2] + _trib_words[-3])
        return _trib_words[m + 2]


def fib_prefix(n: int) -> str:
    """The length-``n`` prefix of the Fibonacci word."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ""
    return fib_word(fib_index(n) + 1)[:n]


def trib_prefix(n: int) -> str:
    """The length-``n`` prefix of the Tribonacci word."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ""
    return trib_word(trib_index(n) + 1)[:n]


def prefix(family: str, n: int) -> str:
    return fib_prefix(n) if check_family(family) == FIB else trib_prefix(n)


# ---------------------------------------------------------------------------
# Numeration and letter counts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbelianVector:
    a: int
    b: int
    c: int = 0

    def __add__(self, other: "AbelianVector") -> "AbelianVector":
        return AbelianVector(self.a + other.a, self.b + other.b, self.c + other.c)

    @property
    def length(self) -> int:
        return self.a + self.b + self.c


def zeckendorf(n: int) -> list[int]:
    """Greedy Fibonacci representation of ``n`` as strictly decreasing indices.

    The indices never differ by less than two; a trailing unit is written
    as f_{-1}, so ``zeckendorf(4) == [2, -1]``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    out = []
    while n > 0:
        if n == 1:
            out.append(-1)
            break
        m = fib_index(n)
        out.append(m)
        n -= fib(m)
    return out


def trib_representation(n: int) -> list[int]:
    """Greedy Tribonacci representation of ``n``: strictly decreasing m >= 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = []
    while n > 0:
        m = trib_index(n)
        out.append(m)
        n -= trib(m)
    return out


def abelian_fib(n: int) -> AbelianVector:
    """Letter counts of the Fibonacci prefix of length ``n``.

    The prefix factors as F_{m_1} F_{m_2} ... along the Zeckendorf digits,
    and |F_m|_a = f_{m-1}, |F_m|_b = f_{m-2}.
    """
    a = b = 0
    for m in zeckendorf(n):
        m = max(m, 0)  # the trailing unit block is F_0 = a
        a += fib(m - 1)
        b += fib(m - 2)
    return AbelianVector(a, b)


def abelian_trib(n: int) -> AbelianVector:
    """Letter counts of the Tribonacci prefix of length ``n``.

    Uses T[1, t_m + r] = T_m T[1, r] for the greedy digit m, with
    |T_m| = (t_{m-1}, t_{m-2}, t_{m-3}) for m >= 1 and T_0 = a.
    """
    a = b = c = 0
    for m in trib_representation(n):
        if m == 0:
            a += 1
        else:
            a += trib(m - 1)
            b += trib(m - 2)
            c += trib(m - 3)
    return AbelianVector(a, b, c)


def floor_phi(p: int) -> int:
    """Exact floor(p * (sqrt(5) - 1) / 2) for p >= 0, integers only.

    Equals the number of a's in the Fibonacci prefix of length p - 1.
    """
    if p < 0:
        raise ValueError("p must be >= 0")
    if p == 0:
        return 0
    return abelian_fib(p - 1).a


def floor_phi_table(n: int) -> np.ndarray:
    """``out[p] == floor_phi(p)`` for 0 <= p <= n, as an int64 array."""
    out = np.zeros(n + 1, dtype=np.int64)
    if n >= 2:
        letters = np.frombuffer(fib_prefix(n - 1).encode(), dtype=np.uint8)
        out[2:] = np.cumsum(letters == ord("a"))
    return out
