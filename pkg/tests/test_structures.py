import json

import pytest

from palcount.fib_count import a_table
from palcount.kernels import MIN_ORDER, pos_kernel
from palcount.sequences import FIB, TRIB, is_palindrome, prefix
from palcount.structures import (
    OccInterval,
    chain,
    covered_span,
    cylinder_of,
    decompose,
    export_edges,
    export_json,
    interval,
    is_palprefix,
    kernel_of_palindrome,
    pal_count_by_length,
    structure_edges,
)
from palcount.trib_count import b_table


def test_fib_k4_edges():
    root = interval(FIB, 4, 1)
    assert root.label() == "<K4,1>[20,32]"
    edges = [(x.label(), y.label()) for x, y in structure_edges(root, depth=2)]
    assert edges == [
        ("<K4,1>[20,32]", "<K2,3>[20,24]"),
        ("<K4,1>[20,32]", "<K3,2>[25,32]"),
        ("<K2,3>[20,24]", "<K0,8>[20,21]"),
        ("<K2,3>[20,24]", "<K1,5>[22,24]"),
        ("<K3,2>[25,32]", "<K1,6>[25,27]"),
        ("<K3,2>[25,32]", "<K2,4>[28,32]"),
    ]


def test_export_formats():
    root = interval(TRIB, 5, 2)
    tree = json.loads(export_json(root, depth=1))
    assert tree["m"] == 5 and len(tree["children"]) == 3
    assert all(ch["children"] == [] for ch in tree["children"])
    assert export_edges(root, depth=1).count("\n") == 3


@pytest.mark.parametrize("family,table", [(FIB, a_table), (TRIB, b_table)])
def test_intervals_cover_counts(family, table):
    """a(n) / b(n) is the number of intervals <K_m,p> containing n."""
    n_max = 3000
    hits = [0] * (n_max + 1)
    m = MIN_ORDER[family]
    while pos_kernel(family, m, 1) <= n_max:
        p = 1
        while (iv := interval(family, m, p)).lo <= n_max:
            for n in range(iv.lo, min(iv.hi, n_max) + 1):
                hits[n] += 1
            p += 1
        m += 1
    assert hits[1:] == table(n_max)


def test_partition(family):
    for m in range(MIN_ORDER[family], 10):
        for p in range(1, 30):
            iv = interval(family, m, p)
            kids = decompose(iv)
            span = covered_span(iv)
            if span is None:
                assert kids == []
                continue
            assert (kids[0].lo, kids[-1].hi) == span
            assert all(x.hi + 1 == y.lo for x, y in zip(kids, kids[1:]))
            assert all(ch.m < m for ch in kids)


def test_chain_tiles(family):
    nxt, m = 1, MIN_ORDER[family]
    while nxt < 10 ** 6:
        iv = chain(family, m)
        assert iv.lo == nxt
        nxt, m = iv.hi + 1, m + 1


def test_interval_dataclass():
    iv = OccInterval(FIB, 2, 1, 3, 5)
    assert iv.size == 3 and 4 in iv and 6 not in iv
    assert iv.as_dict()["lo"] == "3"


def test_palprefix(family):
    w = prefix(family, 3000)
    assert all(is_palprefix(family, n) == is_palindrome(w[:n]) for n in range(1, 3001))


def test_cylinders():
    assert cylinder_of("abaaba", FIB) == "aa"
    assert cylinder_of("bab", FIB) == "a"
    assert cylinder_of("acabaca", TRIB) == "b"
    with pytest.raises(ValueError):
        cylinder_of("ab", FIB)
    with pytest.raises(ValueError):
        cylinder_of("bb", FIB)


def test_counts_by_length():
    assert [pal_count_by_length(FIB, n) for n in range(1, 9)] == [2, 1, 2, 1, 2, 1, 2, 1]
    assert [pal_count_by_length(TRIB, n) for n in range(1, 9)] == [3, 1, 3, 1, 3, 1, 3, 1]


def test_kernel_of_palindrome():
    assert kernel_of_palindrome("abaaba", FIB) == 1
    assert kernel_of_palindrome("aca", TRIB) == 3
