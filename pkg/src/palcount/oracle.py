"""Brute-force ground truth on materialized words.

Nothing here uses kernel words or closed forms: counts come from a
palindromic tree (eertree) built over the literal word, cross-checked by a
quadratic centre-expansion scanner.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

from palcount.fib_count import CountSlice
from palcount.sequences import check_family, prefix


class PalTree:
    """Palindromic tree of a word.

    Node 0 is the imaginary root of length -1, node 1 the empty palindrome;
    every other node is one distinct non-empty palindromic factor.
    """

    def __init__(self, word: str):
        self.word = word
        length = [-1, 0]
        link = [0, 0]
        depth = [0, 0]       # palindromic suffixes of the node, itself included
        first_end = [0, 0]   # 1-based end of the first occurrence
        edges: list[dict] = [{}, {}]
        occ = [0, 0]
        ends = [1] * (len(word) + 1)  # longest palindromic suffix node per position
        last = 1
        for i, ch in enumerate(word):
            cur = last
            while True:
                j = i - length[cur] - 1
                if j >= 0 and word[j] == ch:
                    break
                cur = link[cur]
            nxt = edges[cur].get(ch)
            if nxt is None:
                nxt = len(length)
                length.append(length[cur] + 2)
                edges.append({})
                first_end.append(i + 1)
                occ.append(0)
                if length[nxt] == 1:
                    suf = 1
                else:
                    suf = link[cur]
                    while True:
                        j = i - length[suf] - 1
                        if j >= 0 and word[j] == ch:
                            break
                        suf = link[suf]
                    suf = edges[suf][ch]
                link.append(suf)
                depth.append(depth[suf] + 1)
                edges[cur][ch] = nxt
            occ[nxt] += 1
            ends[i + 1] = nxt
            last = nxt
        # creation order is non-decreasing in length, so links point backwards
        for v in range(len(length) - 1, 1, -1):
            occ[link[v]] += occ[v]
        self._length = length
        self._link = link
        self._depth = depth
        self._first_end = first_end
        self._occ = occ
        self._ends = ends

    def __len__(self) -> int:
        """Number of distinct non-empty palindromic factors."""
        return len(self._length) - 2

    def suffix_counts(self) -> list[int]:
        """Entry n-1 is the number of palindromic suffixes of word[1..n]."""
        depth, ends = self._depth, self._ends
        return [depth[ends[n]] for n in range(1, len(self.word) + 1)]

    def distinct_counts(self) -> list[int]:
        """Entry n-1 is the number of distinct palindromes in word[1..n]."""
        new = [0] * (len(self.word) + 1)
        for e in self._first_end[2:]:
            new[e] += 1
        return list(accumulate(new))[1:]

    def suffix_palindromes(self, position: int) -> list[str]:
        """Palindromes ending at 1-based ``position``, longest first."""
        out = []
        v = self._ends[position]
        while v > 1:
            out.append(self.word[position - self._length[v]: position])
            v = self._link[v]
        return out

    def palindromes(self) -> dict[str, int]:
        """Every distinct palindromic factor mapped to its occurrence count."""
        return {
            self.word[e - n: e]: k
            for n, e, k in zip(self._length[2:], self._first_end[2:], self._occ[2:])
        }

    def total_occurrences(self) -> int:
        return sum(self._occ[2:])


def pal_suffix_counts(w: str) -> CountSlice:
    """Per-position palindromic-suffix counts of ``w`` via the palindromic tree."""
    if not w:
        raise ValueError("word must be non-empty")
    return CountSlice(1, tuple(PalTree(w).suffix_counts()))


def naive_suffix_counts(w: str) -> list[int]:
    """Same as :func:`pal_suffix_counts`, by expanding around every centre."""
    n = len(w)
    counts = [0] * n
    for centre in range(2 * n - 1):
        lo, hi = centre // 2, (centre + 1) // 2
        while lo >= 0 and hi < n and w[lo] == w[hi]:
            counts[hi] += 1
            lo -= 1
            hi += 1
    return counts


def distinct_palindromes(w: str) -> int:
    """Number of distinct non-empty palindromic factors of ``w``."""
    return len(PalTree(w))


# ---------------------------------------------------------------------------
# Occurrences and gaps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Occurrences:
    factor: str
    last_positions: tuple[int, ...]


def occurrences(factor: str, text: str, limit: int | None = None) -> Occurrences:
    """Last positions (1-based) of every occurrence of ``factor`` in ``text``."""
    if not factor:
        raise ValueError("factor must be non-empty")
    out = []
    start = text.find(factor)
    while start >= 0 and (limit is None or len(out) < limit):
        out.append(start + len(factor))
        start = text.find(factor, start + 1)
    return Occurrences(factor, tuple(out))


@dataclass(frozen=True)
class Gap:
    """Word between consecutive occurrences; ``inverse`` marks an overlap."""

    word: str
    inverse: bool = False

    def __str__(self):
        if not self.word:
            return "ε"
        return f"({self.word})^-1" if self.inverse else self.word


def gap_sequence(factor: str, text: str) -> list[Gap]:
    """Gaps G_1, G_2, ... between consecutive occurrences of ``factor`` in ``text``."""
    ends = occurrences(factor, text).last_positions
    if len(ends) < 2:
        raise ValueError(f"{factor!r} occurs fewer than twice")
    size = len(factor)
    gaps = []
    for prev_end, next_end in zip(ends, ends[1:]):
        next_start = next_end - size + 1
        if next_start > prev_end:
            gaps.append(Gap(text[prev_end: next_start - 1]))
        else:
            gaps.append(Gap(text[next_start - 1: prev_end], inverse=True))
    return gaps


def gap_projection_check(factor: str, family: str, depth: int) -> bool:
    """True iff the first ``depth`` gaps of ``factor``, relabelled a, b, c in
    order of first appearance, spell the prefix of the infinite word."""
    check_family(family)
    length = max(64, 8 * len(factor))
    while True:
        text = prefix(family, length)
        ends = occurrences(factor, text, limit=depth + 1).last_positions
        if len(ends) > depth:
            break
        if not ends and length > 64 * (len(factor) + 8):
            raise ValueError(f"{factor!r} is not a factor of the {family} word")
        length *= 2
    gaps = gap_sequence(factor, text[: ends[depth]])[:depth]
    labels: dict[Gap, str] = {}
    alphabet = "ab" if family == "fib" else "abc"
    out = []
    for g in gaps:
        if g not in labels:
            if len(labels) == len(alphabet):
                return False
            labels[g] = alphabet[len(labels)]
        out.append(labels[g])
    return "".join(out) == prefix(family, depth)
