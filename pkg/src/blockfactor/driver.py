"""Trial division followed by a sweep of certified blocks up to sqrt(n)."""

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .arith import block_halfwidth, ceil_cbrt, isqrt
from .blockscan import Block, ScanStats, scan_block

__all__ = [
    "Variant",
    "Kind",
    "Config",
    "FactorOutcome",
    "trial_division",
    "initial_bound",
    "factor",
    "rule_out_range",
]


class Variant(str, enum.Enum):
    BASE = "base"
    ASYM = "asym"


class Kind(str, enum.Enum):
    PRIME = "prime"
    COMPOSITE = "composite"


@dataclass(frozen=True)
class Config:
    """Run options.

    ``trial_multiplier`` scales the trial-division cutoff (1 gives the plain
    algorithm, 50 the tuned one).  ``chunks`` fixes how the sweep is split in
    parallel mode; it is independent of the worker count so results do not
    depend on the machine.  ``trace`` records every block and trial range.
    """

    variant: Variant = Variant.BASE
    trial_multiplier: int = 1
    parallel: bool = False
    chunks: int = 8
    workers: Optional[int] = None
    trace: bool = False

    def __post_init__(self):
        if self.trial_multiplier < 1:
            raise ValueError("trial_multiplier must be >= 1")
        if self.chunks < 1:
            raise ValueError("chunks must be >= 1")
        object.__setattr__(self, "variant", Variant(self.variant))


@dataclass
class FactorOutcome:
    kind: Kind
    divisor: Optional[int]
    stats: ScanStats
    trial_ranges: list = field(default_factory=list)
    blocks: list = field(default_factory=list)

    @property
    def is_prime(self) -> bool:
        return self.kind is Kind.PRIME


def trial_division(
    n: int, lo: int, hi: int, stats: Optional[ScanStats] = None
) -> Optional[int]:
    """Smallest k in [lo, hi] dividing n, or None."""
    if lo < 2:
        raise ValueError("trial division starts at 2 or above")
    for k in range(lo, hi + 1):
        if n % k == 0:
            if stats is not None:
                stats.trial_divisions += k - lo + 1
            return k
    if stats is not None and hi >= lo:
        stats.trial_divisions += hi - lo + 1
    return None


def initial_bound(n: int, trial_multiplier: int = 1) -> int:
    """min(trial_multiplier * ceil((17n)**(1/3)), floor(sqrt(n)))."""
    return min(trial_multiplier * ceil_cbrt(17 * n), isqrt(n))


@dataclass
class _Sweep:
    divisors: tuple
    stats: ScanStats
    trial_ranges: list
    blocks: list


def _sweep(
    n: int,
    x: int,
    h: int,
    limit: int,
    variant: Variant,
    accept: Callable[[int], bool],
    trace: bool,
) -> _Sweep:
    """Scan blocks from center x (first width h) while the left end is <= limit.

    Stops at the first block holding an accepted divisor and returns all of
    that block's accepted divisors.
    """
    stats = ScanStats()
    trial_ranges: list = []
    blocks: list = []
    asym = variant is Variant.ASYM
    while True:
        if asym:
            h = block_halfwidth(x, n)
        if x - h > limit:
            return _Sweep((), stats, trial_ranges, blocks)
        res = scan_block(n, x, h, None if asym else h, stats)
        blk = res.block
        if trace:
            blocks.append(blk)
        hits = [d for d in res.divisors if accept(d)]
        if blk.h_left < h:
            # Certification forced a narrower left side; cover the gap directly.
            gap_lo = max(2, x - h)
            gap_hi = blk.lo - 1
            if trace and gap_hi >= gap_lo:
                trial_ranges.append((gap_lo, gap_hi))
            for k in range(gap_lo, gap_hi + 1):
                stats.trial_divisions += 1
                if n % k == 0 and accept(k):
                    hits.append(k)
        if hits:
            return _Sweep(tuple(sorted(hits)), stats, trial_ranges, blocks)
        x += blk.h_left + blk.h_right + 1
        if not asym:
            h = block_halfwidth(x, n)


def _chunk_job(args) -> _Sweep:
    n, lo, hi, variant, trace = args
    return _sweep(n, lo + 1, 1, hi, variant, lambda d: d < n, trace)


def _chunk_bounds(lo: int, hi: int, chunks: int) -> list:
    """Split [lo, hi] into at most ``chunks`` contiguous ranges."""
    total = hi - lo + 1
    if total <= 0:
        return []
    k = min(chunks, total)
    edges = [lo + (total * i) // k for i in range(k + 1)]
    return [(edges[i], edges[i + 1] - 1) for i in range(k)]


def _parallel_sweep(n: int, start: int, limit: int, cfg: Config) -> _Sweep:
    # Each chunk restarts the block sequence at its own left end with
    # width 1, as the range-restricted search does.
    bounds = _chunk_bounds(start, limit, cfg.chunks)
    jobs = [(n, lo, hi, cfg.variant, cfg.trace) for lo, hi in bounds]
    merged = _Sweep((), ScanStats(), [], [])
    if not jobs:
        return merged
    workers = cfg.workers or min(len(jobs), os.cpu_count() or 1)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_chunk_job, job) for job in jobs]
        for fut in futures:
            part = fut.result()
            merged.stats.merge(part.stats)
            merged.trial_ranges.extend(part.trial_ranges)
            merged.blocks.extend(part.blocks)
            if part.divisors:
                merged.divisors = part.divisors
                for rest in futures:
                    rest.cancel()
                break
    return merged


def factor(n: int, cfg: Optional[Config] = None) -> FactorOutcome:
    """Return a non-trivial divisor of n, or a proof by exhaustion that n is prime.

    Trial division covers [2, x0]; blocks then start at x0 + 2 with width 1
    and continue while their left end is <= floor(sqrt(n)).  The divisor
    reported is the smallest one in the first block (in x order) that has any.
    """
    if cfg is None:
        cfg = Config()
    if n < 2:
        raise ValueError("n must be >= 2")
    stats = ScanStats()
    x0 = initial_bound(n, cfg.trial_multiplier)
    trial_ranges = [(2, x0)] if cfg.trace and x0 >= 2 else []
    d = trial_division(n, 2, x0, stats)
    if d is not None:
        return FactorOutcome(Kind.COMPOSITE, d, stats, trial_ranges)

    root = isqrt(n)
    if cfg.parallel:
        sweep = _parallel_sweep(n, x0 + 1, root, cfg)
    else:
        sweep = _sweep(n, x0 + 2, 1, root, cfg.variant, lambda v: v < n, cfg.trace)
    stats.merge(sweep.stats)
    trial_ranges.extend(sweep.trial_ranges)
    if sweep.divisors:
        return FactorOutcome(
            Kind.COMPOSITE, sweep.divisors[0], stats, trial_ranges, sweep.blocks
        )
    return FactorOutcome(Kind.PRIME, None, stats, trial_ranges, sweep.blocks)


def rule_out_range(
    n: int,
    z: int,
    w: int,
    cfg: Optional[Config] = None,
    stats: Optional[ScanStats] = None,
) -> Optional[int]:
    """Smallest divisor of n found in [z, z + w], or None if there is none.

    Trial division handles [z, min(x0, z + w)] with x0 from the plain
    algorithm; blocks take over from x0 + 2 (or from z + 1 when z >= x0)
    while their left end is <= z + w.  Divisors above sqrt(n), including n
    itself, count when they lie in the interval.
    """
    if cfg is None:
        cfg = Config()
    if n < 2:
        raise ValueError("n must be >= 2")
    if z < 2:
        raise ValueError("z must be >= 2")
    if w < 0:
        raise ValueError("w must be >= 0")
    if stats is None:
        stats = ScanStats()
    top = z + w
    x0 = initial_bound(n)
    d = trial_division(n, z, min(x0, top), stats)
    if d is not None:
        return d
    if top <= x0:
        return None
    x = x0 + 2 if z < x0 else z + 1
    sweep = _sweep(n, x, 1, top, cfg.variant, lambda v: z <= v <= top, False)
    stats.merge(sweep.stats)
    return sweep.divisors[0] if sweep.divisors else None
