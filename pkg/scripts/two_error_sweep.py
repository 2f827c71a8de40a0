"""Sweep every two-error pattern against the zero word and tally verdicts."""

from __future__ import annotations

import argparse
import json
from collections import Counter
from dataclasses import asdict, dataclass
from itertools import combinations, product

from zwcodes import Verdict, build_code, build_field, decode, find_prime


@dataclass
class SweepConfig:
    p: int = 71
    rows: int = 4
    value_step: int = 1  # >1 subsamples the error values


def sweep(cfg: SweepConfig) -> dict:
    f = build_field(find_prime(cfg.p))
    f.find_primitive("auto")
    code = build_code(f, f.alpha, cfg.rows)
    tally: Counter[str] = Counter()
    precondition_holds = 0
    values = range(1, code.p, cfg.value_step)
    for i, j in combinations(range(code.n), 2):
        for u, v in product(values, repeat=2):
            r = [0] * code.n
            r[i], r[j] = u, v
            res = decode(code, r)
            if cfg.rows >= 3:
                s1, s8, s15 = res.syndrome[:3]
                precondition_holds += s1 * s15 % code.p != s8 * s8 % code.p
            if res.verdict in (Verdict.NO_ERROR, Verdict.CORRECTED):
                tally["correct" if res.corrected == (0,) * code.n else "miscorrected"] += 1
            else:
                tally[res.verdict.value] += 1
    total = sum(tally.values())
    return {"config": asdict(cfg), "alpha": code.alpha, "patterns": total,
            "tally": dict(sorted(tally.items())), "precondition_holds": precondition_holds}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=71)
    ap.add_argument("--rows", type=int, default=4)
    ap.add_argument("--value-step", type=int, default=1)
    args = ap.parse_args(argv)
    print(json.dumps(sweep(SweepConfig(args.p, args.rows, args.value_step)), indent=2))


if __name__ == "__main__":
    main()
