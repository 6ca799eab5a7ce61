from math import isqrt

import pytest
from hypothesis import given, strategies as st

from palcount.sequences import (
    FIB,
    AbelianVector,
    abelian_fib,
    abelian_trib,
    check_family,
    factor,
    fib,
    fib_index,
    fib_prefix,
    fib_word,
    floor_phi,
    floor_phi_table,
    is_palindrome,
    kernel_index,
    kernel_number,
    prefix,
    trib,
    trib_index,
    trib_prefix,
    trib_representation,
    trib_word,
    zeckendorf,
)


def test_initial_values():
    assert [fib(m) for m in range(-2, 8)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]
    assert [trib(m) for m in range(-2, 8)] == [0, 1, 1, 2, 4, 7, 13, 24, 44, 81]
    assert [kernel_number(m) for m in range(0, 9)] == [0, 1, 1, 1, 2, 3, 5, 9, 16]


def test_words():
    assert fib_word(0) == "a"
    assert fib_word(4) == "abaababa"
    assert trib_word(3) == "abacaba"
    assert trib_prefix(13) == "abacabaabacab"
    for m in range(12):
        assert len(fib_word(m)) == fib(m)
        assert len(trib_word(m)) == trib(m)
    assert prefix(FIB, 5) == fib_prefix(5)
    with pytest.raises(ValueError):
        check_family("lucas")


def test_factor_and_palindrome():
    w = fib_prefix(8)
    assert factor(w, 2, 4) == "baa"
    assert is_palindrome("abaaba") and not is_palindrome("ab")


@pytest.mark.parametrize("index_fn,seq", [(fib_index, fib), (trib_index, trib)])
def test_index_is_floor_inverse(index_fn, seq):
    for n in range(1, 500):
        m = index_fn(n)
        assert seq(m) <= n < seq(m + 1) or seq(m + 1) == seq(m)


def test_kernel_index():
    for n in range(1, 500):
        j = kernel_index(n)
        assert kernel_number(j) <= n < kernel_number(j + 1)


def test_zeckendorf():
    assert zeckendorf(33) == [6, 4, 2, -1]
    assert zeckendorf(0) == []


@given(st.integers(min_value=0, max_value=10 ** 30))
def test_zeckendorf_sums_and_gaps(n):
    digits = zeckendorf(n)
    assert sum(fib(m) for m in digits) == n
    assert all(x - y >= 2 for x, y in zip(digits, digits[1:]))


@given(st.integers(min_value=0, max_value=10 ** 30))
def test_trib_representation_sums(n):
    digits = trib_representation(n)
    assert sum(trib(m) for m in digits) == n
    # greedy: no three consecutive indices
    assert all(not (x - 1 == y and y - 1 == z) for x, y, z in zip(digits, digits[1:], digits[2:]))


def test_abelian_vectors_match_prefixes():
    fw, tw = fib_prefix(3000), trib_prefix(3000)
    for n in range(0, 3000, 7):
        assert abelian_fib(n) == AbelianVector(fw[:n].count("a"), fw[:n].count("b"))
        assert abelian_trib(n) == AbelianVector(*(tw[:n].count(x) for x in "abc"))


@given(st.integers(min_value=0, max_value=10 ** 40))
def test_floor_phi_exact(p):
    assert floor_phi(p) == (isqrt(5 * p * p) - p) // 2


def test_floor_phi_table():
    table = floor_phi_table(5000)
    assert [int(table[p]) for p in range(5001)] == [floor_phi(p) for p in range(5001)]
