"""Delivery rate of each decoder under a grid of error-count distributions."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from zwcodes import build_code, build_field, find_prime
from zwcodes.channel_sim import ChannelSpec, run_trials, stats_csv


@dataclass
class GridConfig:
    p: int = 29
    rows: tuple[int, ...] = (1, 2, 3, 4)
    two_error_share: tuple[str, ...] = ("0", "1/4", "1/2")
    trials: int = 2000
    seed: int = 1
    workers: int = 4
    value_mode: str = "uniform-nonzero"
    stats: list = field(default_factory=list)


def run(cfg: GridConfig) -> str:
    f = build_field(find_prime(cfg.p))
    f.find_primitive("auto")
    for rows in cfg.rows:
        code = build_code(f, f.alpha, rows)
        for share in map(Fraction, cfg.two_error_share):
            # no-error and single-error blocks split the remainder evenly
            rest = (1 - share) / 2
            channel = ChannelSpec({0: rest, 1: rest, 2: share}, cfg.value_mode, cfg.seed)
            cfg.stats.append(run_trials(code, channel, cfg.trials, cfg.workers))
    return stats_csv(cfg.stats)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=29)
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--workers", type=int, default=4)
    ap.add_argument("--value-mode", default="uniform-nonzero")
    args = ap.parse_args(argv)
    cfg = GridConfig(p=args.p, trials=args.trials, seed=args.seed, workers=args.workers,
                     value_mode=args.value_mode)
    sys.stdout.write(run(cfg))


if __name__ == "__main__":
    main()
