"""Semiprime benchmark: base sweep vs asymmetric sweep vs plain trial division.

Block and operation counts are reproducible from (bits, cases, seed).  Wall
times are measured on the host and only reported.
"""

import math
import random
import time
from typing import Optional

from .arith import isqrt
from .blockscan import ScanStats
from .driver import Config, Kind, Variant, factor, initial_bound, trial_division
from .oracle import is_prime

__all__ = ["random_prime_near", "semiprimes", "bench_suite", "MAX_BITS"]

MAX_BITS = 64


def _next_prime(k: int) -> int:
    while not is_prime(k):
        k += 1
    return k


def random_prime_near(rng: random.Random, bits: int) -> int:
    """Smallest prime >= a uniform draw from [2**(bits-1), 2**bits)."""
    bits = max(bits, 2)
    return _next_prime(rng.randrange(1 << (bits - 1), 1 << bits))


def semiprimes(bits: int, cases: int, seed: Optional[int]) -> list[tuple[int, int]]:
    """``cases`` prime pairs whose sizes split ``bits`` evenly."""
    rng = random.Random(seed)
    half = bits // 2
    out = []
    for _ in range(cases):
        p = random_prime_near(rng, half)
        q = random_prime_near(rng, bits - half)
        out.append((min(p, q), max(p, q)))
    return out


def _record(n: int, label: str, divisor: Optional[int], stats: ScanStats, elapsed: float) -> dict:
    if divisor is None or not 1 < divisor < n or n % divisor:
        raise RuntimeError(f"{label} returned an invalid divisor {divisor!r} for {n}")
    return {
        "n": n,
        "variant": label,
        "outcome": Kind.COMPOSITE.value,
        "divisor": divisor,
        "blocks_scanned": stats.blocks_scanned,
        "convergent_steps": stats.convergent_steps,
        "trial_divisions": stats.trial_divisions,
        "wall_time": elapsed,
    }


def _geomean(values: list[float]) -> Optional[float]:
    if not values:
        return None
    return math.exp(sum(math.log(v) for v in values) / len(values))


def bench_suite(
    bits: int, cases: int, seed: Optional[int] = None, trial_multiplier: int = 1
) -> dict:
    """Run every variant on ``cases`` semiprimes of about ``bits`` bits."""
    if not 4 <= bits <= MAX_BITS:
        raise ValueError(f"bits must be in [4, {MAX_BITS}]")
    records = []
    ratios = []
    totals = {"base": 0.0, "asym": 0.0, "trial": 0.0}
    block_totals = {"base": 0, "asym": 0}
    ops = {"base": 0, "trial": 0}
    for p, q in semiprimes(bits, cases, seed):
        n = p * q
        trial_only = initial_bound(n) + 1 > isqrt(n)
        blocks = {}
        for variant in (Variant.BASE, Variant.ASYM):
            t0 = time.perf_counter()
            out = factor(n, Config(variant=variant, trial_multiplier=trial_multiplier))
            elapsed = time.perf_counter() - t0
            rec = _record(n, variant.value, out.divisor, out.stats, elapsed)
            rec["trial_only"] = trial_only
            records.append(rec)
            totals[variant.value] += elapsed
            blocks[variant.value] = out.stats.blocks_scanned
            block_totals[variant.value] += out.stats.blocks_scanned
            if variant is Variant.BASE:
                s = out.stats
                ops["base"] += s.trial_divisions + s.convergent_steps + s.quadratics_solved
        if blocks["base"]:
            ratios.append(blocks["asym"] / blocks["base"])

        stats = ScanStats()
        t0 = time.perf_counter()
        d = trial_division(n, 2, isqrt(n), stats)
        elapsed = time.perf_counter() - t0
        rec = _record(n, "trial", d, stats, elapsed)
        rec["trial_only"] = trial_only
        records.append(rec)
        totals["trial"] += elapsed
        ops["trial"] += stats.trial_divisions

    reduction = None
    if block_totals["base"]:
        reduction = 1.0 - block_totals["asym"] / block_totals["base"]
    return {
        "bits": bits,
        "cases": cases,
        "seed": seed,
        "trial_multiplier": trial_multiplier,
        "wall_time_machine_dependent": True,
        "records": records,
        "aggregate": {
            "geomean_block_ratio_asym_base": _geomean(ratios),
            "blocks_base": block_totals["base"],
            "blocks_asym": block_totals["asym"],
            "block_reduction": reduction,
        },
        "crossover": {
            "bits": bits,
            "base_operations": ops["base"],
            "trial_operations": ops["trial"],
            "base_wall_time": totals["base"],
            "asym_wall_time": totals["asym"],
            "trial_wall_time": totals["trial"],
            "trial_over_base_time": totals["trial"] / totals["base"] if totals["base"] else None,
        },
    }


def strip_timing(report):
    """Copy of a report without wall-clock fields, for reproducibility checks."""
    if isinstance(report, dict):
        return {k: strip_timing(v) for k, v in report.items() if "wall_time" not in k
                and k != "trial_over_base_time"}
    if isinstance(report, list):
        return [strip_timing(v) for v in report]
    return report
