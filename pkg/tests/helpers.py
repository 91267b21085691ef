"""Random input generators shared by the property and acceptance tests."""

import random

from blockfactor.arith import block_halfwidth, icbrt


def lemma_inputs(rng: random.Random, planted: bool):
    """Random (n, x, H) with n >= 400, 17*n*H**3 <= x**3 and x - H >= 2.

    With ``planted`` the number n is built as (x + h) * m for some |h| <= H,
    so the block is guaranteed to hold a divisor.
    """
    while True:
        x = int(10 ** rng.uniform(1.5, 6))
        h_cap = max(1, icbrt(x**3 // (17 * 400)))
        H = rng.randint(1, max(1, min(h_cap, int(10 ** rng.uniform(0, 3.5)))))
        n_max = x**3 // (17 * H**3)
        if n_max < 400 or x - H < 2:
            continue
        if planted:
            d = x + rng.randint(-H, H)
            m_lo = -(-400 // d)
            m_hi = n_max // d
            if m_hi < m_lo:
                continue
            n = d * rng.randint(m_lo, m_hi)
        else:
            n = rng.randint(400, n_max)
        assert 17 * n * H**3 <= x**3 and block_halfwidth(x, n) >= H
        return n, x, H
