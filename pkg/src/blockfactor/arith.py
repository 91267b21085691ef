"""Exact integer primitives.

Every quantity that decides correctness goes through these helpers, so none
of them touch floating point.  Python ints are unbounded, which covers the
intermediates of size about n**(4/3) without a separate wide-integer path.
"""

from math import isqrt

__all__ = [
    "isqrt",
    "icbrt",
    "ceil_cbrt",
    "block_halfwidth",
    "nearest_div",
    "divides",
]


def icbrt(v: int) -> int:
    """Return the largest t >= 0 with t**3 <= v."""
    if v < 0:
        raise ValueError("cube root of a negative number")
    if v < 8:
        return 1 if v else 0
    if v.bit_length() <= 150:
        # Float seed, off by at most a few units at this size; the loops
        # below make the result exact.
        x = int(round(v ** (1.0 / 3.0)))
    else:
        # 2**ceil(bits/3) is an upper bound, and integer Newton decreases
        # monotonically from above until it reaches the floor root.
        x = 1 << -(-v.bit_length() // 3)
        while True:
            y = (2 * x + v // (x * x)) // 3
            if y >= x:
                break
            x = y
    while x * x * x > v:
        x -= 1
    while (x + 1) ** 3 <= v:
        x += 1
    return x


def ceil_cbrt(v: int) -> int:
    """Return the smallest t >= 0 with t**3 >= v."""
    r = icbrt(v)
    return r if r * r * r == v else r + 1


def block_halfwidth(x: int, n: int) -> int:
    """Largest h >= 0 with 17*n*h**3 <= x**3, i.e. floor(x / (17n)**(1/3))."""
    if n < 1 or x < 1:
        raise ValueError("block_halfwidth needs n >= 1 and x >= 1")
    # h**3 is an integer, so h**3 <= x**3/(17n) iff h**3 <= floor(x**3/(17n)).
    return icbrt(x ** 3 // (17 * n))


def nearest_div(p: int, q: int) -> int:
    """Nearest integer to p/q, with exact halves rounded down."""
    if q == 0:
        raise ZeroDivisionError("nearest_div by zero")
    t, r = divmod(p, q)
    return t + 1 if r > q - r else t


def divides(d: int, n: int) -> bool:
    if d == 0:
        raise ZeroDivisionError("divisibility by zero is undefined")
    return n % d == 0
