import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from blockfactor.arith import block_halfwidth
from blockfactor.blockscan import (
    Block,
    BlockQuadratic,
    ScanStats,
    asym_half_widths,
    build_quadratic,
    certify_block,
    integer_roots_in,
    scan_block,
)
from blockfactor.cf import convergent_bounded
from blockfactor.oracle import oracle_divisors_in

from helpers import lemma_inputs


def eps_bound(n, x, h_left, h_right, b, q):
    """B(h_left, h_right) as an exact Fraction."""
    # Nearest integer with halves rounded down is ceil(v - 1/2).
    a = math.ceil(Fraction(q * n, x) - Fraction(1, 2))
    eps1 = Fraction(q * n, x) - a
    eps2_over_qn = Fraction(q * n - b * x * x, x * x)
    third = max(Fraction(h_left**2, x * x * (x - h_left)), Fraction(h_right**2, x**3))
    return abs(eps1) + max(h_left, h_right) * abs(eps2_over_qn) + q * n * third


def test_build_quadratic_examples():
    assert build_quadratic(10403, 59, 3, 1) == BlockQuadratic(19, 1, 3)
    assert build_quadratic(10403, 101, 1, 1) == BlockQuadratic(0, -2, 1)
    assert build_quadratic(777, 777, 5, 1).c0 == 0


def test_quadratic_evaluation():
    quad = BlockQuadratic(0, -2, 1)
    assert [quad(h) for h in range(-1, 3)] == [3, 0, -1, 0]


def test_integer_roots_examples():
    assert integer_roots_in(BlockQuadratic(0, -2, 1), -1, 2) == {0, 2}
    assert integer_roots_in(BlockQuadratic(19, 1, 3), -1, 1) == set()
    assert integer_roots_in(BlockQuadratic(0, 0, 5), -3, 3) == {0}
    assert integer_roots_in(BlockQuadratic(6, -3, 0), -5, 5) == {2}
    assert integer_roots_in(BlockQuadratic(7, -3, 0), -5, 5) == set()
    assert integer_roots_in(BlockQuadratic(4, 0, 0), -5, 5) == set()
    with pytest.raises(ValueError):
        integer_roots_in(BlockQuadratic(0, 0, 0), -1, 1)


def test_integer_roots_against_enumeration():
    rng = random.Random(11)
    for _ in range(10_000):
        if rng.random() < 0.5:
            # Build from chosen roots so that hits are common.
            r1, r2 = rng.randint(-30, 30), rng.randint(-30, 30)
            k = rng.choice([-3, -2, -1, 1, 2, 3])
            quad = BlockQuadratic(k * r1 * r2, -k * (r1 + r2), k)
        else:
            quad = BlockQuadratic(*(rng.randint(-50, 50) for _ in range(3)))
            if quad.is_zero():
                continue
        lo = rng.randint(-40, 40)
        hi = lo + rng.randint(0, 40)
        expected = {h for h in range(lo, hi + 1) if quad(h) == 0}
        assert integer_roots_in(quad, lo, hi) == expected


def test_certify_examples():
    quad = build_quadratic(10403, 101, 1, 1)
    assert certify_block(10403, 101, 1, 1, 1, 1, quad)
    quad = build_quadratic(10403, 59, 3, 1)
    assert certify_block(10403, 59, 1, 2, 3, 1, quad)
    n, x = 10**12 + 39, 30_000
    conv = convergent_bounded(n, x * x, 4)
    quad = build_quadratic(n, x, conv.b, conv.q)
    assert not certify_block(n, x, x - 1, 1, conv.b, conv.q, quad)


def test_certify_matches_fraction_bound():
    rng = random.Random(5)
    for _ in range(3000):
        n, x, H = lemma_inputs(rng, planted=False)
        conv = convergent_bounded(n, x * x, 4 * H)
        quad = build_quadratic(n, x, conv.b, conv.q)
        h_left = rng.randint(0, min(x - 1, 3 * H))
        h_right = rng.randint(0, 6 * H)
        expected = eps_bound(n, x, h_left, h_right, conv.b, conv.q) < 1
        assert certify_block(n, x, h_left, h_right, conv.b, conv.q, quad) == expected


def test_identity_g_equals_scaled_error():
    rng = random.Random(3)
    for _ in range(2000):
        n, x, H = lemma_inputs(rng, planted=False)
        conv = convergent_bounded(n, x * x, 4 * H)
        b, q = conv.b, conv.q
        quad = build_quadratic(n, x, b, q)
        eps1 = Fraction(quad.c0, x)
        eps2_over_qn = Fraction(q * n - b * x * x, x * x)
        for h in {-H, 0, H, rng.randint(-H, H)}:
            eps_h = eps1 - h * eps2_over_qn + Fraction(q * n * h * h, (x + h) * x * x)
            assert (x + h) * eps_h == quad(h)
            # The error term is what q*n/(x+h) misses from a - b*h.
            a = b * x - quad.c1
            assert Fraction(q * n, x + h) == a - b * h + eps_h


def test_quadratic_never_vanishes():
    rng = random.Random(9)
    for _ in range(10_000):
        n, x, H = lemma_inputs(rng, planted=rng.random() < 0.5)
        conv = convergent_bounded(n, x * x, 4 * H)
        assert not build_quadratic(n, x, conv.b, conv.q).is_zero()


def test_asym_example():
    quad = build_quadratic(10403, 59, 3, 1)
    assert asym_half_widths(10403, 59, 3, 1, quad) == (1, 2)


def test_asym_exact_convergent_uses_second_formula():
    # n = x**2 makes b/q = n/x**2 exact, so only the square-root cap applies.
    x = 3000
    n = x * x
    conv = convergent_bounded(n, x * x, 4 * block_halfwidth(x, n))
    assert conv.exact
    quad = build_quadratic(n, x, conv.b, conv.q)
    h_left, h_right = asym_half_widths(n, x, conv.b, conv.q, quad)
    formula = math.isqrt(3 * (x - abs(quad.c0)) * x * x // (5 * conv.q * n))
    assert h_right <= formula
    assert certify_block(n, x, h_left, h_right, conv.b, conv.q, quad)


def test_asym_rejects_large_denominator():
    quad = build_quadratic(10403, 59, 260, 87)
    with pytest.raises(ValueError):
        asym_half_widths(10403, 59, 260, 87, quad)


def test_asym_widths_certify_and_dominate():
    rng = random.Random(21)
    for _ in range(3000):
        n, x, _ = lemma_inputs(rng, planted=False)
        h_left = block_halfwidth(x, n)
        conv = convergent_bounded(n, x * x, 4 * h_left)
        quad = build_quadratic(n, x, conv.b, conv.q)
        stats = ScanStats()
        hl, hr = asym_half_widths(n, x, conv.b, conv.q, quad, stats)
        assert hl == h_left
        assert hr >= hl
        assert certify_block(n, x, hl, hr, conv.b, conv.q, quad)


def test_scan_block_examples():
    res = scan_block(10403, 101, 1, 1)
    assert res.divisor == 101 and res.divisors == (101,)
    assert res.block == Block(101, 1, 1, True)
    assert scan_block(10403, 59, 1, 1).divisor is None
    stats = ScanStats()
    assert scan_block(1000000007, 2000, 1, 1, stats).divisor is None
    assert stats.blocks_scanned == 1 and stats.quadratics_solved == 1


def test_scan_block_two_divisors_smallest_first():
    # 101 and 103 both sit in the block around 102.
    res = scan_block(10403, 102, 1, 1)
    assert res.divisors == (101, 103)
    assert res.divisor == 101


def test_scan_block_against_brute_force():
    rng = random.Random(17)
    for i in range(3000):
        n, x, H = lemma_inputs(rng, planted=i % 2 == 0)
        res = scan_block(n, x, H, None if i % 3 == 0 else H)
        blk = res.block
        brute = {d for d in oracle_divisors_in(n, blk.lo, blk.hi) if d > 1}
        assert set(res.divisors) == brute
        for d in res.divisors:
            assert n % d == 0 and 1 < d


@given(st.integers(2, 399), st.integers(3, 5000))
def test_scan_block_small_n_still_sound(n, x):
    # Outside the n >= 400 regime the widths may shrink but results stay exact.
    h = min(max(1, block_halfwidth(x, n)), x - 2)
    res = scan_block(n, x, h, h)
    blk = res.block
    assert blk.h_left <= h and blk.h_right <= h
    brute = {d for d in oracle_divisors_in(n, blk.lo, blk.hi) if d > 1}
    assert set(res.divisors) == brute
