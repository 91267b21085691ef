"""Command-line entry point: factor, range and bench modes."""

import argparse
import json
import sys
from typing import Optional

from .bench import MAX_BITS, bench_suite
from .blockscan import ScanStats
from .driver import Config, Variant, factor, rule_out_range


def _natural(text: str) -> int:
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"not a non-negative decimal integer: {text!r}")
    return int(text)


def _stats_line(stats: ScanStats) -> str:
    return json.dumps(
        {
            "blocks": stats.blocks_scanned,
            "trial_divisions": stats.trial_divisions,
            "convergent_steps": stats.convergent_steps,
            "quadratics": stats.quadratics_solved,
            "roots_tested": stats.roots_tested,
        }
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockfactor",
        description="Deterministic factoring by certified blocks of candidate divisors.",
    )
    sub = parser.add_subparsers(dest="mode", required=True)

    p = sub.add_parser("factor", help="find a non-trivial factor of n or prove n prime")
    p.add_argument("n", type=_natural)
    p.add_argument("--variant", choices=[v.value for v in Variant], default="base")
    p.add_argument("--trial-multiplier", type=_natural, default=1)
    p.add_argument("--stats", action="store_true")
    p.add_argument("--parallel", action="store_true")

    p = sub.add_parser("range", help="find a divisor of n in [z, z+w] or rule one out")
    p.add_argument("n", type=_natural)
    p.add_argument("z", type=_natural)
    p.add_argument("w", type=_natural)
    p.add_argument("--variant", choices=[v.value for v in Variant], default="base")
    p.add_argument("--stats", action="store_true")

    p = sub.add_parser("bench", help="semiprime benchmark (JSON on stdout)")
    p.add_argument("--bits", type=_natural, nargs="+", required=True)
    p.add_argument("--cases", type=_natural, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trial-multiplier", type=_natural, default=1)
    p.add_argument("--json", dest="json_path", default=None, help="also write the report here")
    return parser


def run(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.mode == "factor":
        if args.n < 2:
            parser.error("n must be >= 2")
        if args.trial_multiplier < 1:
            parser.error("--trial-multiplier must be >= 1")
        cfg = Config(
            variant=args.variant,
            trial_multiplier=args.trial_multiplier,
            parallel=args.parallel,
        )
        out = factor(args.n, cfg)
        print("prime" if out.is_prime else f"factor: {out.divisor}")
        if args.stats:
            print(_stats_line(out.stats))
        return 0

    if args.mode == "range":
        if args.n < 2:
            parser.error("n must be >= 2")
        if args.z < 2:
            parser.error("z must be >= 2")
        stats = ScanStats()
        d = rule_out_range(args.n, args.z, args.w, Config(variant=args.variant), stats)
        print("none" if d is None else f"divisor: {d}")
        if args.stats:
            print(_stats_line(stats))
        return 0

    for bits in args.bits:
        if not 4 <= bits <= MAX_BITS:
            parser.error(f"--bits must be in [4, {MAX_BITS}]")
    if args.trial_multiplier < 1:
        parser.error("--trial-multiplier must be >= 1")
    reports = [
        bench_suite(bits, args.cases, args.seed, args.trial_multiplier) for bits in args.bits
    ]
    text = json.dumps(reports, indent=2)
    if args.json_path:
        with open(args.json_path, "w") as fh:
            fh.write(text + "\n")
    print(text)
    return 0


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return run(args, parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
