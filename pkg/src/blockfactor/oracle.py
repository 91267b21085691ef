"""Brute-force ground truth used by the tests and the benchmark validator."""

from math import isqrt
from typing import Optional

__all__ = ["oracle_divisors_in", "oracle_smallest_factor", "is_prime", "sieve"]

MAX_RANGE = 10**7


def oracle_divisors_in(n: int, lo: int, hi: int) -> set[int]:
    """Every d in [lo, hi] (d >= 1) dividing n, by direct enumeration."""
    if hi - lo > MAX_RANGE:
        raise ValueError(f"range wider than {MAX_RANGE}")
    return {d for d in range(max(lo, 1), hi + 1) if n % d == 0}


def oracle_smallest_factor(n: int) -> Optional[int]:
    """Smallest non-trivial divisor of n, or None when n is prime."""
    if n < 2:
        raise ValueError("n must be >= 2")
    root = isqrt(n)
    if root - 2 > MAX_RANGE:
        raise ValueError("n too large for brute force")
    for d in range(2, root + 1):
        if n % d == 0:
            return d
    return None


def is_prime(n: int) -> bool:
    return n >= 2 and oracle_smallest_factor(n) is None


def sieve(limit: int) -> bytearray:
    """flags[k] == 1 iff k is prime, for 0 <= k <= limit."""
    flags = bytearray([1]) * (limit + 1)
    flags[:2] = b"\x00\x00"[: min(2, limit + 1)]
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return flags
