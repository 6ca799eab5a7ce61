"""Occurrence intervals and the recursive, cylinder and chain structures.

``interval(family, m, p)`` is the set of last positions of the p-th
occurrences of all palindromes whose maximal kernel is K_m; it is a run of
consecutive integers. ``decompose`` splits it into the child intervals of
smaller kernels that end at the same positions.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from palcount.kernels import (
    MIN_ORDER,
    KernelId,
    encode,
    is_factor,
    kernel_length,
    occurrence_size,
    pos_kernel,
    pos_letter,
)
from palcount.sequences import (
    FIB,
    check_family,
    fib,
    fib_index,
    is_palindrome,
    kernel_index,
    kernel_number,
)

CYLINDERS = {FIB: ("a", "b", "aa"), "trib": ("a", "b", "c", "aa")}


@dataclass(frozen=True)
class OccInterval:
    family: str
    m: int
    p: int
    lo: int
    hi: int

    @property
    def kernel(self) -> KernelId:
        return KernelId(self.family, self.m)

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, position: int) -> bool:
        return self.lo <= position <= self.hi

    def label(self) -> str:
        return f"<K{self.m},{self.p}>[{self.lo},{self.hi}]"

    def as_dict(self) -> dict:
        return {"family": self.family, "m": self.m, "p": self.p,
                "lo": str(self.lo), "hi": str(self.hi)}


def interval(family: str, m: int, p: int) -> OccInterval:
    lo = pos_kernel(family, m, p)
    return OccInterval(family, m, p, lo, lo + occurrence_size(family, m) - 1)


def chain(family: str, m: int) -> OccInterval:
    """The first-occurrence interval <K_m, 1>; consecutive orders tile the integers."""
    return interval(family, m, 1)


def decompose(iv: OccInterval) -> list[OccInterval]:
    """Child intervals of ``iv``, ordered by position.

    Above the base orders the children tile [lo, hi]. For the single-letter
    kernels b (both words) and c (Tribonacci) they tile [lo + 1, hi]: the
    lowest position holds the bare letter, which has no shorter palindromic
    suffix. The letter a is a leaf.
    """
    fam, m, p = iv.family, iv.m, iv.p

    def child(order: int, letter: str) -> OccInterval:
        return interval(fam, order, pos_letter(fam, letter, p) + 1)

    if fam == FIB:
        if m >= 1:
            return [child(m - 2, "b"), child(m - 1, "a")]
        if m == 0:
            return [child(-1, "a")]
        return []
    if m >= 4:
        return [child(m - 3, "c"), child(m - 2, "b"), child(m - 1, "a")]
    if m == 3:
        return [child(1, "b"), child(2, "a")]
    if m == 2:
        return [child(1, "a")]
    return []


def covered_span(iv: OccInterval) -> tuple[int, int] | None:
    """The range the children of ``iv`` tile, or None for a leaf."""
    if iv.m == MIN_ORDER[iv.family]:
        return None
    base = iv.family == FIB and iv.m == 0 or iv.family != FIB and iv.m in (2, 3)
    return (iv.lo + 1 if base else iv.lo), iv.hi


def structure_tree(iv: OccInterval, depth: int | None = None) -> dict:
    node = iv.as_dict()
    if depth is None or depth > 0:
        node["children"] = [
            structure_tree(ch, None if depth is None else depth - 1) for ch in decompose(iv)
        ]
    else:
        node["children"] = []
    return node


def structure_edges(iv: OccInterval, depth: int | None = None) -> list[tuple[OccInterval, OccInterval]]:
    out = []
    stack = [(iv, depth)]
    while stack:
        node, left = stack.pop()
        if left is not None and left <= 0:
            continue
        kids = decompose(node)
        out.extend((node, ch) for ch in kids)
        stack.extend((ch, None if left is None else left - 1) for ch in reversed(kids))
    return out


def export_edges(iv: OccInterval, depth: int | None = None) -> str:
    return "".join(f"{a.label()} -> {b.label()}\n" for a, b in structure_edges(iv, depth))


def export_json(iv: OccInterval, depth: int | None = None) -> str:
    return json.dumps(structure_tree(iv, depth), indent=2)


# ---------------------------------------------------------------------------
# Palindromic prefixes, cylinders, counts by length
# ---------------------------------------------------------------------------

def is_palprefix(family: str, n: int) -> bool:
    """Whether the length-n prefix is a palindrome (n = f_m - 2 or k_m - 2)."""
    check_family(family)
    if n < 1:
        raise ValueError("n must be >= 1")
    if family == FIB:
        return fib(fib_index(n + 2)) == n + 2
    return kernel_number(kernel_index(n + 2)) == n + 2


def cylinder_of(w: str, family: str) -> str:
    """Cylinder label of a palindromic factor: its middle letter, or "aa" if even."""
    check_family(family)
    if not w or not is_palindrome(w):
        raise ValueError(f"{w!r} is not a non-empty palindrome")
    if not is_factor(w, family):
        raise ValueError(f"{w!r} is not a factor of the {family} word")
    return "aa" if len(w) % 2 == 0 else w[len(w) // 2]


def pal_count_by_length(family: str, n: int) -> int:
    """Number of distinct palindromic factors of length exactly n.

    Counts kernel orders m admitting an offset i with envelope length - 2i == n.
    """
    check_family(family)
    if n < 1:
        raise ValueError("n must be >= 1")
    count = 0
    m = MIN_ORDER[family]
    while kernel_length(family, m) <= n:
        envelope = fib(m + 3) if family == FIB else kernel_number(m + 4)
        i, odd = divmod(envelope - n, 2)
        if not odd and 1 <= i <= occurrence_size(family, m):
            count += 1
        m += 1
    return count


def kernel_of_palindrome(w: str, family: str) -> int:
    """Maximal kernel order of a palindromic factor."""
    return encode(w, family).m
