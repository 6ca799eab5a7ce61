"""Exact counts of repeated palindromes in Fibonacci and Tribonacci prefixes."""
from palcount.fib_count import a, big_a
from palcount.sequences import FIB, TRIB, fib, fib_prefix, trib, trib_prefix
from palcount.trib_count import b, big_b

__version__ = "0.1.0"

__all__ = [
    "FIB", "TRIB", "a", "b", "big_a", "big_b",
    "fib", "trib", "fib_prefix", "trib_prefix",
]
