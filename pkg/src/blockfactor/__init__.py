"""Deterministic integer factorization by certified blocks of candidate divisors."""

from .arith import block_halfwidth, ceil_cbrt, divides, icbrt, isqrt, nearest_div
from .blockscan import (
    Block,
    BlockQuadratic,
    ScanResult,
    ScanStats,
    asym_half_widths,
    build_quadratic,
    certify_block,
    integer_roots_in,
    scan_block,
)
from .cf import Convergent, convergent_bounded
from .driver import (
    Config,
    FactorOutcome,
    Kind,
    Variant,
    factor,
    initial_bound,
    rule_out_range,
    trial_division,
)
from .oracle import oracle_divisors_in, oracle_smallest_factor

__version__ = "0.1.0"
