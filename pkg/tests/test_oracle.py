import pytest
from hypothesis import given, strategies as st

from palcount.oracle import (
    Gap,
    PalTree,
    distinct_palindromes,
    gap_projection_check,
    gap_sequence,
    naive_suffix_counts,
    occurrences,
    pal_suffix_counts,
)
from palcount.sequences import FIB, TRIB, fib_prefix


@given(st.text(alphabet="abc", min_size=1, max_size=60))
def test_tree_matches_naive(w):
    tree = PalTree(w)
    assert tree.suffix_counts() == naive_suffix_counts(w)
    brute = {w[i:j] for i in range(len(w)) for j in range(i + 1, len(w) + 1) if w[i:j] == w[i:j][::-1]}
    assert set(tree.palindromes()) == brute
    assert tree.total_occurrences() == sum(naive_suffix_counts(w))


def test_occurrence_counts():
    tree = PalTree("abaababaab")
    pals = tree.palindromes()
    assert pals["aba"] == 3 and pals["a"] == 6 and pals["baab"] == 2
    assert tree.suffix_palindromes(8) == ["ababa", "aba", "a"]
    assert tree.suffix_palindromes(10) == ["baababaab", "baab", "b"]


def test_distinct_counts_rich():
    w = fib_prefix(200)
    assert PalTree(w).distinct_counts() == list(range(1, 201))
    assert distinct_palindromes("abab") == 4


def test_slice():
    s = pal_suffix_counts("abaab")
    assert s.values == (1, 1, 2, 2, 2)
    with pytest.raises(ValueError):
        pal_suffix_counts("")


def test_gaps():
    gaps = gap_sequence("aba", fib_prefix(13))
    assert [str(g) for g in gaps] == ["ε", "(a)^-1", "ε"]
    assert str(Gap("")) == "ε"
    with pytest.raises(ValueError):
        gap_sequence("bb", fib_prefix(20))


@pytest.mark.parametrize("factor,family", [("a", FIB), ("aba", FIB), ("abaaba", FIB),
                                           ("a", TRIB), ("aca", TRIB), ("abacaba", TRIB)])
def test_gap_projection(factor, family):
    assert gap_projection_check(factor, family, 200)


def test_occurrences_limit():
    assert occurrences("a", "aaaa", limit=2).last_positions == (1, 2)
