"""Invariant sweeps behind ``palcount verify``.

Each suite takes the family and size limits and returns a list of failure
messages (empty means pass). Suites that do not apply to a family return
None.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt

from palcount import fib_count, trib_count
from palcount.kernels import MIN_ORDER, kernel_word, pos_letter
from palcount.oracle import PalTree
from palcount.sequences import (
    FIB,
    TRIB,
    abelian_fib,
    abelian_trib,
    fib,
    floor_phi,
    floor_phi_table,
    is_palindrome,
    kernel_number,
    prefix,
    trib,
    trib_prefix,
)
from palcount.structures import chain, covered_span, decompose, interval, is_palprefix, pal_count_by_length

MAX_REPORTED = 20


def _counts(family):
    if family == FIB:
        return fib_count.a_table, fib_count.big_a
    return trib_count.b_table, trib_count.big_b


def oracle_equivalence(family: str, n_max: int, p_max: int):
    per_position, big = _counts(family)
    tree = PalTree(prefix(family, n_max))
    fails = []
    running = 0
    for n, (fast, truth) in enumerate(zip(per_position(n_max), tree.suffix_counts()), start=1):
        running += truth
        if fast != truth:
            fails.append(f"n={n}: block value {fast} != tree {truth}")
        elif big(n, method="closed") != running:
            fails.append(f"n={n}: closed total {big(n, method='closed')} != {running}")
        if len(fails) >= MAX_REPORTED:
            break
    return fails


def interval_partition(family: str, n_max: int, p_max: int):
    fails = []
    for m in range(MIN_ORDER[family] + 1, 13):
        for p in range(1, min(p_max, 100) + 1):
            iv = interval(family, m, p)
            kids = decompose(iv)
            lo, hi = covered_span(iv)
            if kids[0].lo != lo or kids[-1].hi != hi:
                fails.append(f"{iv.label()}: children cover [{kids[0].lo},{kids[-1].hi}]")
            for left, right in zip(kids, kids[1:]):
                if left.hi + 1 != right.lo:
                    fails.append(f"{iv.label()}: gap between {left.label()} and {right.label()}")
    return fails


def chain_tiling(family: str, n_max: int, p_max: int):
    nxt = 1
    m = MIN_ORDER[family]
    fails = []
    while nxt <= n_max:
        iv = chain(family, m)
        if iv.lo != nxt:
            fails.append(f"chain {m} starts at {iv.lo}, expected {nxt}")
            break
        nxt = iv.hi + 1
        m += 1
    return fails


def palprefix(family: str, n_max: int, p_max: int):
    w = prefix(family, n_max)
    return [
        f"n={n}" for n in range(1, n_max + 1)
        if is_palprefix(family, n) != is_palindrome(w[:n])
    ][:MAX_REPORTED]


def richness(family: str, n_max: int, p_max: int):
    counts = PalTree(prefix(family, n_max)).distinct_counts()
    return [f"n={n}: {k} distinct" for n, k in enumerate(counts, start=1) if k != n][:MAX_REPORTED]


def cylinder(family: str, n_max: int, p_max: int):
    # every factor of length L occurs early, so short lengths are complete in the prefix
    limit = max(1, n_max // 16)
    seen = {}
    for w in PalTree(prefix(family, n_max)).palindromes():
        seen[len(w)] = seen.get(len(w), 0) + 1
    fails = []
    for n in range(1, limit + 1):
        k = pal_count_by_length(family, n)
        if k != seen.get(n, 0):
            fails.append(f"length {n}: {k} vs oracle {seen.get(n, 0)}")
        if family == FIB and k != (2 if n % 2 else 1):
            fails.append(f"length {n}: {k} breaks the parity rule")
    return fails[:MAX_REPORTED]


def kernel_containment(family: str, n_max: int, p_max: int):
    fails = []
    if family == FIB:
        for m in range(-1, 12):
            if kernel_word(FIB, m) in kernel_word(FIB, m + 1):
                fails.append(f"K{m} occurs in K{m + 1}")
    else:
        for m in range(4, 13):
            k = kernel_word(TRIB, m)
            if kernel_word(TRIB, m - 1) in k or kernel_word(TRIB, m - 2) in k:
                fails.append(f"K{m - 1} or K{m - 2} occurs in K{m}")
            if kernel_word(TRIB, m - 3) not in k:
                fails.append(f"K{m - 3} missing from K{m}")
    return fails


def phi_positions(family: str, n_max: int, p_max: int):
    if family != FIB:
        return None
    table = floor_phi_table(3 * p_max + 2)
    fails = []
    for p in range(1, p_max + 1):
        fp = int(table[p])
        if (int(table[p + fp + 1]) != p or int(table[2 * p + fp + 1]) != p + fp
                or int(table[p + fp]) != p - 1 or int(table[2 * p + fp]) != p + fp):
            fails.append(f"p={p}")
            if len(fails) >= MAX_REPORTED:
                break
    for p in range(0, 3 * p_max + 3, max(1, p_max // 1000)):
        if int(table[p]) != (isqrt(5 * p * p) - p) // 2:
            fails.append(f"floor_phi table wrong at {p}")
    return fails


def letter_positions(family: str, n_max: int, p_max: int):
    if family != TRIB:
        return None
    p_top = min(p_max, 10_000)
    length = pos_letter(TRIB, "c", p_top) + 1
    w = trib_prefix(length)
    cum = {ch: [0] * (length + 1) for ch in "abc"}
    for i, ch in enumerate(w, start=1):
        for x in "abc":
            cum[x][i] = cum[x][i - 1] + (ch == x)
    fails = []
    for p in range(1, p_top + 1):
        pa, pb, pc = (pos_letter(TRIB, x, p) for x in "abc")
        prev = abelian_trib(p - 1)
        ok = (
            cum["a"][pa] == cum["b"][pb] == cum["c"][pc] == p
            and cum["a"][pb] == pa and cum["b"][pa] == prev.a
            and cum["a"][pc] == pb and cum["b"][pc] == pa
        )
        if not ok:
            fails.append(f"p={p}")
            if len(fails) >= MAX_REPORTED:
                break
    return fails


def identities(family: str, n_max: int, p_max: int):
    fails = []
    if family == FIB:
        for m in range(-1, 30):
            conv = sum(fib(i) * fib(m - i - 1) for i in range(-1, m + 1))
            if 5 * conv != (m + 2) * fib(m + 2) + (m + 4) * fib(m):
                fails.append(f"convolution m={m}")
        for m in range(1, 30):
            conv = sum(fib(i) * fib(m - i - 2) for i in range(-1, m)) - fib(m - 1)
            if fib_count.c(m) != conv:
                fails.append(f"C({m}) closed form vs convolution")
            if m >= 3 and fib_count.c(m) != fib_count.c(m - 1) + fib_count.c(m - 2) + fib(m - 1):
                fails.append(f"C recurrence m={m}")
            if fib_count.big_a_before_fib(m + 1) - fib_count.big_a_before_fib(m) != fib_count.c(m):
                fails.append(f"telescoping m={m}")
        for p in range(0, 10_000):
            if floor_phi(p) != (isqrt(5 * p * p) - p) // 2 or abelian_fib(p).length != p:
                fails.append(f"floor_phi p={p}")
        return fails
    for m in range(3, 61):
        if 2 * kernel_number(m) != trib(m - 3) + trib(m - 5) + 1:
            fails.append(f"kernel-number halving m={m}")
    for m in range(0, 61):
        if 2 * sum(trib(i) for i in range(m + 1)) != trib(m) + trib(m + 2) - 3:
            fails.append(f"trib prefix sum m={m}")
        if m >= 1 and 2 * sum(kernel_number(i) for i in range(1, m + 1)) != trib(m - 2) + trib(m - 3) + m:
            fails.append(f"kernel-number prefix sum m={m}")
    for m in range(1, 31):
        if trib_count.d(m) != sum(trib(i) * trib(m - i - 2) for i in range(-1, m - 1)):
            fails.append(f"D({m}) closed form vs convolution")
        if m >= 4 and trib_count.d(m) != sum(trib_count.d(m - j) for j in (1, 2, 3)) + trib(m - 1):
            fails.append(f"D recurrence m={m}")
        weighted = sum((i + 1) * trib(i) for i in range(m + 1))
        rhs = Fraction(m, 2) * (trib(m + 2) + trib(m)) - Fraction(trib(m - 1) + trib(m - 2), 2) + Fraction(3, 2)
        if weighted != rhs:
            fails.append(f"weighted sum m={m}")
        if m >= 3:
            jump = trib_count.d(m) + trib_count.d(m - 1) - 2 * kernel_number(m + 1) + 4
            if trib_count.big_b_at_trib(m) - trib_count.big_b_at_trib(m - 3) != jump:
                fails.append(f"three-step jump m={m}")
    return fails


def closed_forms(family: str, n_max: int, p_max: int):
    fails = []
    if family == FIB:
        for m in range(2, 41):
            if fib_count.big_a_before_fib(m) != fib_count.big_a(fib(m) - 2, method="closed"):
                fails.append(f"A(f_{m}-2)")
            if fib_count.big_a_at_fib(m) != fib_count.big_a(fib(m), method="closed"):
                fails.append(f"A(f_{m})")
            if fib_count.a_landmarks(m) != tuple(fib_count.a(fib(m) + k) for k in (-2, -1, 0)):
                fails.append(f"a landmarks m={m}")
        return fails
    for m in range(1, 41):
        if trib_count.big_b_at_kernel_landmark(m) != trib_count.big_b(kernel_number(m + 4) - 2, method="closed"):
            fails.append(f"B(k_{m + 4}-2)")
        if trib_count.big_b_at_trib(m) != trib_count.big_b(trib(m), method="closed"):
            fails.append(f"B(t_{m})")
    return fails


SUITES = {
    "oracle-equivalence": oracle_equivalence,
    "interval-partition": interval_partition,
    "chain-tiling": chain_tiling,
    "palprefix": palprefix,
    "richness": richness,
    "cylinder": cylinder,
    "kernel-containment": kernel_containment,
    "phi-positions": phi_positions,
    "letter-positions": letter_positions,
    "identities": identities,
    "closed-forms": closed_forms,
}
