"""Test every integer of a block [x - h_left, x + h_right] for dividing n at once.

A convergent b/q of n/x**2 (denominator at most 4*h_left) and a = [q*n/x]
give the integer quadratic

    g(h) = (q*n - a*x) + (b*x - a)*h + b*h**2,

and g(h) = (x + h) * eps(h) where q*n/(x + h) = a - b*h + eps(h).  If
|eps(h)| < 1 on the whole block, any divisor x + h of n forces eps(h) = 0,
hence g(h) = 0.  That bound is checked exactly for each block
(certify_block) instead of being assumed from the choice of widths.
"""

from dataclasses import dataclass, field, fields
from math import isqrt
from typing import Optional

from .arith import block_halfwidth, nearest_div
from .cf import convergent_bounded

__all__ = [
    "BlockQuadratic",
    "Block",
    "ScanStats",
    "ScanResult",
    "build_quadratic",
    "integer_roots_in",
    "certify_block",
    "asym_half_widths",
    "scan_block",
]

# Linear shrink steps tried before switching to bisection.
_LINEAR_SHRINK = 8


@dataclass(frozen=True)
class BlockQuadratic:
    c0: int
    c1: int
    c2: int

    def __call__(self, h: int) -> int:
        return self.c0 + self.c1 * h + self.c2 * h * h

    def is_zero(self) -> bool:
        return self.c0 == 0 and self.c1 == 0 and self.c2 == 0


@dataclass(frozen=True)
class Block:
    """Candidates x - h_left .. x + h_right; ``certified`` means the bound held."""

    x: int
    h_left: int
    h_right: int
    certified: bool = True

    @property
    def lo(self) -> int:
        return self.x - self.h_left

    @property
    def hi(self) -> int:
        return self.x + self.h_right


@dataclass
class ScanStats:
    """Operation counters for one run; only ever incremented."""

    blocks_scanned: int = 0
    trial_divisions: int = 0
    convergent_steps: int = 0
    quadratics_solved: int = 0
    roots_tested: int = 0
    hR_below_hL_events: int = 0

    def merge(self, other: "ScanStats") -> None:
        for f in fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class ScanResult:
    block: Block
    divisors: tuple = field(default=())

    @property
    def divisor(self) -> Optional[int]:
        return self.divisors[0] if self.divisors else None


def build_quadratic(n: int, x: int, b: int, q: int) -> BlockQuadratic:
    """Coefficients of g for the approximations a/q of n/x and b/q of n/x**2."""
    if x < 1 or q < 1:
        raise ValueError("build_quadratic needs x >= 1 and q >= 1")
    qn = q * n
    a = nearest_div(qn, x)
    return BlockQuadratic(qn - a * x, b * x - a, b)


def integer_roots_in(quad: BlockQuadratic, lo: int, hi: int) -> set[int]:
    """Integers h in [lo, hi] with quad(h) == 0."""
    c0, c1, c2 = quad.c0, quad.c1, quad.c2
    if c2 == 0:
        if c1 == 0:
            if c0 == 0:
                raise ValueError("quadratic vanishes identically")
            return set()
        h, r = divmod(-c0, c1)
        return {h} if r == 0 and lo <= h <= hi else set()
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        return set()
    s = isqrt(disc)
    if s * s != disc:
        return set()
    roots = set()
    for num in (-c1 + s, -c1 - s):
        h, r = divmod(num, 2 * c2)
        if r == 0 and lo <= h <= hi:
            roots.add(h)
    return roots


def _certified(n: int, x: int, h_left: int, h_right: int, e1: int, e2: int, q: int) -> bool:
    # B < 1 scaled by x**3 * (x - h_left), with |eps1| = e1/x and
    # |eps2/q'| = e2/x**2.
    d = x - h_left
    m = h_left if h_left > h_right else h_right
    xx = x * x
    tail = h_left * h_left * x
    right = h_right * h_right * d
    if right > tail:
        tail = right
    return e1 * xx * d + m * e2 * x * d + q * n * tail < xx * x * d


def certify_block(
    n: int, x: int, h_left: int, h_right: int, b: int, q: int, quad: BlockQuadratic
) -> bool:
    """Exact check that |eps(h)| < 1 for all h in [-h_left, h_right].

    True means: for every such h, (x + h) | n implies quad(h) == 0.
    """
    if not 0 <= h_left < x:
        raise ValueError("need 0 <= h_left < x")
    if h_right < 0:
        raise ValueError("need h_right >= 0")
    return _certified(n, x, h_left, h_right, abs(quad.c0), abs(q * n - b * x * x), q)


def _shrink_right(n, x, h_left, h_right, e1, e2, q) -> Optional[int]:
    """Largest certified width <= h_right for this h_left, or None."""
    for _ in range(_LINEAR_SHRINK):
        if _certified(n, x, h_left, h_right, e1, e2, q):
            return h_right
        if h_right == 0:
            return None
        h_right -= 1
    if not _certified(n, x, h_left, 0, e1, e2, q):
        return None
    lo, hi = 0, h_right
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _certified(n, x, h_left, mid, e1, e2, q):
            lo = mid
        else:
            hi = mid - 1
    return lo


def asym_half_widths(
    n: int,
    x: int,
    b: int,
    q: int,
    quad: BlockQuadratic,
    stats: Optional[ScanStats] = None,
    h_left: Optional[int] = None,
) -> tuple[int, int]:
    """Left width from the symmetric rule, right width widened by the error sizes.

    The right width is min(2Ax/(5E), sqrt(3Ax**2/(5qn))) rounded down, where
    A = x - |c0| and E = |qn - bx**2|, then trimmed until the block certifies.
    A formula value below h_left is counted in ``stats`` and raised to h_left.
    ``h_left`` may be passed in when the caller already has it.
    """
    if h_left is None:
        h_left = block_halfwidth(x, n)
    if q > 4 * h_left:
        raise ValueError(f"convergent denominator {q} exceeds 4*h_left = {4 * h_left}")
    e1 = abs(quad.c0)
    e2 = abs(q * n - b * x * x)
    big_a = x - e1
    h_right = isqrt(3 * big_a * x * x // (5 * q * n))
    if e2:
        h_right = min(h_right, 2 * big_a * x // (5 * e2))
    if h_right < h_left:
        if stats is not None:
            stats.hR_below_hL_events += 1
        h_right = h_left
    shrunk = _shrink_right(n, x, h_left, h_right, e1, e2, q)
    if shrunk is None:
        # Only reachable off the n >= 400 regime; the caller shrinks h_left.
        return h_left, 0
    return h_left, shrunk


def scan_block(
    n: int,
    x: int,
    h_left: Optional[int],
    h_right: Optional[int] = None,
    stats: Optional[ScanStats] = None,
) -> ScanResult:
    """Find the divisors of n among x - h_left .. x + h_right with one quadratic.

    ``h_right=None`` selects the asymmetric widths (``h_left=None`` then means
    the default left width).  Widths are shrunk, right side first, until the
    block certifies, and the returned Block reports the widths actually
    covered.  Divisors are the values x + h > 1 dividing n, sorted ascending.
    """
    if stats is None:
        stats = ScanStats()
    asym = h_right is None
    if h_left is None:
        h_left = block_halfwidth(x, n)
    if not 0 <= h_left < x:
        raise ValueError("need 0 <= h_left < x")

    conv = convergent_bounded(n, x * x, max(1, 4 * h_left))
    stats.convergent_steps += conv.steps
    b, q = conv.b, conv.q
    quad = build_quadratic(n, x, b, q)
    e1 = abs(quad.c0)
    e2 = abs(q * n - b * x * x)

    if asym:
        if h_left >= 1:
            h_left, h_right = asym_half_widths(n, x, b, q, quad, stats, h_left)
        else:
            h_right = 0
    certified = _shrink_right(n, x, h_left, h_right, e1, e2, q)
    while certified is None:
        # |eps1| <= 1/2 makes the single point h = 0 always certify.
        h_left -= 1
        certified = _shrink_right(n, x, h_left, h_right, e1, e2, q)
    h_right = certified

    stats.blocks_scanned += 1
    stats.quadratics_solved += 1
    found = set()
    for h in integer_roots_in(quad, -h_left, h_right):
        stats.roots_tested += 1
        d = x + h
        if d > 1 and n % d == 0:
            found.add(d)
    return ScanResult(Block(x, h_left, h_right, True), tuple(sorted(found)))
