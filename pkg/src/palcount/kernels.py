"""Kernel (singular) words, kernel lookup, and palindrome occurrence positions.

Every palindromic factor of either word is determined by its maximal kernel
K_m and an offset i; ``PalCode`` carries that pair. Occurrence positions are
last-letter positions, 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from palcount.sequences import (
    FIB,
    TRIB,
    abelian_trib,
    check_family,
    fib,
    fib_word,
    floor_phi,
    is_palindrome,
    kernel_number,
    prefix,
    trib,
    trib_word,
)

MIN_ORDER = {FIB: -1, TRIB: 1}


class NotAFactorError(ValueError):
    """Raised when a word does not occur in the requested infinite word."""


@dataclass(frozen=True)
class KernelId:
    family: str
    order: int

    def __post_init__(self):
        check_family(self.family)
        if self.order < MIN_ORDER[self.family]:
            raise ValueError(
                f"{self.family} kernel order must be >= {MIN_ORDER[self.family]}, got {self.order}"
            )

    @property
    def length(self) -> int:
        return kernel_length(self.family, self.order)

    def word(self) -> str:
        return kernel_word(self.family, self.order)


def _check_order(family: str, m: int) -> None:
    KernelId(family, m)


def _fib_last_letter(m: int) -> str:
    return "a" if m % 2 == 0 else "b"


def _trib_last_letter(m: int) -> str:
    return "abc"[m % 3]


def kernel_length(family: str, m: int) -> int:
    _check_order(family, m)
    return fib(m) if family == FIB else kernel_number(m)


@lru_cache(maxsize=None)
def kernel_word(family: str, m: int) -> str:
    """The kernel word K_m of ``family``; always a palindrome."""
    _check_order(family, m)
    if family == FIB:
        # delta_{m+1} F_m delta_m^{-1}
        return _fib_last_letter(m + 1) + fib_word(m)[:-1]
    if m <= 3:
        return "abc"[m - 1]
    return _trib_last_letter(m - 1) + trib_word(m - 3)[: kernel_number(m) - 1]


def occurrence_size(family: str, m: int) -> int:
    """Number of palindromes whose maximal kernel is K_m (f_{m+1} or t_{m-1})."""
    _check_order(family, m)
    return fib(m + 1) if family == FIB else trib(m - 1)


def _envelope_length(family: str, m: int) -> int:
    # palindromes with kernel K_m are centered factors of K_{m+3} (Fib) / K_{m+4} (Trib)
    return fib(m + 3) if family == FIB else kernel_number(m + 4)


# ---------------------------------------------------------------------------
# Factor membership and maximal kernel
# ---------------------------------------------------------------------------

def _search_length(family: str, length: int) -> int:
    # every factor of length L first occurs within 2.62L (Fib) / 6.2L (Trib)
    return 4 * length + 8 if family == FIB else 8 * length + 16


def is_factor(w: str, family: str) -> bool:
    check_family(family)
    if w == "":
        return True
    return w in prefix(family, _search_length(family, len(w)))


@dataclass(frozen=True)
class KernelMatch:
    """Maximal kernel K_order found in a factor, starting at ``position`` (1-based)."""

    family: str
    order: int
    position: int


def ker(w: str, family: str) -> KernelMatch:
    """Locate the maximal kernel word occurring in the factor ``w``."""
    check_family(family)
    if not w:
        raise ValueError("the empty word has no kernel")
    if not is_factor(w, family):
        raise NotAFactorError(f"{w!r} is not a factor of the {family} word")
    best = None
    m = MIN_ORDER[family]
    while kernel_length(family, m) <= len(w):
        idx = w.find(kernel_word(family, m))
        if idx >= 0:
            best = (m, idx)
        m += 1
    order, idx = best
    if w.find(kernel_word(family, order), idx + 1) >= 0:
        raise AssertionError(f"maximal kernel occurs twice in {w!r}")
    return KernelMatch(family, order, idx + 1)


# ---------------------------------------------------------------------------
# Palindrome codes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PalCode:
    """Palindrome with maximal kernel K_m, written K_{m+3}[i+1, f_{m+3}-i] for
    the Fibonacci word and K_{m+4}[i+1, k_{m+4}-i] for the Tribonacci word."""

    family: str
    m: int
    i: int

    def __post_init__(self):
        size = occurrence_size(self.family, self.m)
        if not 1 <= self.i <= size:
            raise ValueError(f"offset i={self.i} outside [1, {size}] for order {self.m}")

    @property
    def length(self) -> int:
        return _envelope_length(self.family, self.m) - 2 * self.i

    def decode(self) -> str:
        order = self.m + 3 if self.family == FIB else self.m + 4
        env = kernel_word(self.family, order)
        return env[self.i: len(env) - self.i]


def encode(w: str, family: str) -> PalCode:
    """PalCode of a palindromic factor ``w``."""
    if not w or not is_palindrome(w):
        raise ValueError(f"{w!r} is not a non-empty palindrome")
    match = ker(w, family)
    i, rem = divmod(_envelope_length(family, match.order) - len(w), 2)
    if rem:
        raise AssertionError(f"length parity mismatch for {w!r}")
    return PalCode(family, match.order, i)


def all_codes(family: str, max_order: int):
    """Yield every PalCode with kernel order up to ``max_order``."""
    for m in range(MIN_ORDER[family], max_order + 1):
        for i in range(1, occurrence_size(family, m) + 1):
            yield PalCode(family, m, i)


# ---------------------------------------------------------------------------
# Occurrence positions
# ---------------------------------------------------------------------------

def pos_kernel_fib(m: int, p: int) -> int:
    """Last position of the p-th occurrence of K_m in the Fibonacci word."""
    _check_order(FIB, m)
    if p < 1:
        raise ValueError("p must be >= 1")
    return p * fib(m + 1) + (floor_phi(p) + 1) * fib(m) - 1


def pos_kernel_trib(m: int, p: int) -> int:
    """Last position of the p-th occurrence of K_m in the Tribonacci word."""
    _check_order(TRIB, m)
    if p < 1:
        raise ValueError("p must be >= 1")
    ab = abelian_trib(p - 1)
    return (
        p * trib(m - 1)
        + ab.a * (trib(m - 2) + trib(m - 3))
        + ab.b * trib(m - 2)
        + kernel_number(m)
        - 1
    )


def pos_kernel(family: str, m: int, p: int) -> int:
    return pos_kernel_fib(m, p) if check_family(family) == FIB else pos_kernel_trib(m, p)


def pos_letter(family: str, letter: str, p: int) -> int:
    """P(letter, p): position of the p-th occurrence of a single letter."""
    return pos_kernel(family, MIN_ORDER[family] + "abc".index(letter), p)


def pos_palindrome(code: PalCode | str, p: int, family: str | None = None) -> int:
    """Last position of the p-th occurrence of a palindrome.

    ``code`` may be a PalCode or a palindromic word (``family`` required).
    """
    if isinstance(code, str):
        if family is None:
            raise ValueError("family is required when passing a word")
        code = encode(code, family)
    return pos_kernel(code.family, code.m, p) + occurrence_size(code.family, code.m) - code.i


def first_occurrence_length_check(code: PalCode) -> bool:
    """True iff the palindrome's first occurrence is a prefix of the word."""
    return code.length == pos_palindrome(code, 1)
