"""Seeded error-injection trials and the code-rate comparison."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Mapping, NamedTuple

import numpy as np

from .codec import Code, Verdict, decode, encode

VALUE_MODES = ("uniform-nonzero", "weight-1-only", "power-of-w")
SEED_LIMIT = 2**64

CSV_FIELDS = ("trials", "no_error", "corrected_ok", "miscorrected", "detected", "failed",
              "seed", "p", "rows")


class ChannelError(ValueError):
    pass


def parse_dist(text: str) -> dict[int, Fraction]:
    """Parse ``"0=0.5,1=0.25,2=0.25"`` into exact probabilities."""
    out: dict[int, Fraction] = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        key, sep, val = part.partition("=")
        if not sep:
            raise ChannelError(f"bad distribution entry {part!r}; expected COUNT=PROB")
        try:
            count, prob = int(key), Fraction(val.strip())
        except ValueError:
            raise ChannelError(f"bad distribution entry {part!r}") from None
        if count in out:
            raise ChannelError(f"error count {count} listed twice")
        out[count] = prob
    return out


@dataclass(frozen=True)
class ChannelSpec:
    error_count_dist: Mapping[int, Fraction]
    value_mode: str = "uniform-nonzero"
    seed: int = 0

    def __post_init__(self) -> None:
        dist = {int(k): Fraction(v) for k, v in self.error_count_dist.items()}
        if not dist:
            raise ChannelError("empty error-count distribution")
        if any(k not in (0, 1, 2) for k in dist):
            raise ChannelError("error counts must be 0, 1 or 2")
        if any(v < 0 for v in dist.values()):
            raise ChannelError("probabilities must be nonnegative")
        if sum(dist.values()) != 1:
            raise ChannelError(f"probabilities sum to {sum(dist.values())}, not 1")
        if self.value_mode not in VALUE_MODES:
            raise ChannelError(f"value mode must be one of {VALUE_MODES}")
        if not 0 <= self.seed < SEED_LIMIT:
            raise ChannelError("seed must be an unsigned 64-bit integer")
        object.__setattr__(self, "error_count_dist", dict(sorted(dist.items())))


@dataclass(frozen=True)
class TrialStats:
    trials: int
    no_error: int
    corrected_ok: int
    miscorrected: int
    detected: int
    failed: int
    seed: int
    p: int
    rows: int

    @property
    def rate(self) -> Fraction:
        """Fraction of blocks delivered as the transmitted codeword."""
        return Fraction(self.no_error + self.corrected_ok, self.trials)

    def to_json(self) -> dict:
        out = asdict(self)
        out["rate"] = str(self.rate)
        return out

    def csv_row(self) -> dict:
        return {k: getattr(self, k) for k in CSV_FIELDS}


def stats_csv(stats: list[TrialStats]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for s in stats:
        w.writerow(s.csv_row())
    return buf.getvalue()


def error_values(code: Code, mode: str) -> list[int]:
    if mode == "uniform-nonzero":
        return list(range(1, code.p))
    if mode == "weight-1-only":
        return [k for k in range(1, code.p) if code.field.weights[k] == 1]
    if mode == "power-of-w":
        return sorted({code.table.power(code.n * l) for l in range(code.table.order)})
    raise ChannelError(f"unknown value mode {mode!r}")


def _outcome(code: Code, channel: ChannelSpec, values: list[int], counts: list[int],
             cum: list[float], index: int) -> str:
    # each trial owns an independent substream keyed by its index
    rng = np.random.default_rng(np.random.SeedSequence(channel.seed, spawn_key=(index,)))
    message = [int(x) for x in rng.integers(0, code.p, size=code.k)]
    sent = encode(code, message)
    u = rng.random()
    nerr = next((c for c, edge in zip(counts, cum) if u < edge), counts[-1])
    received = list(sent)
    if nerr:
        positions = rng.choice(code.n, size=nerr, replace=False)
        for pos in positions:
            v = values[int(rng.integers(0, len(values)))]
            received[int(pos)] = (received[int(pos)] + v) % code.p
    res = decode(code, received)
    if res.verdict is Verdict.NO_ERROR:
        return "no_error" if tuple(received) == tuple(sent) else "miscorrected"
    if res.verdict is Verdict.CORRECTED:
        return "corrected_ok" if res.corrected == tuple(sent) else "miscorrected"
    if res.verdict is Verdict.DETECTED:
        return "detected"
    return "failed"


def _run_chunk(code, channel, values, counts, cum, indices) -> dict[str, int]:
    tally = dict.fromkeys(("no_error", "corrected_ok", "miscorrected", "detected", "failed"), 0)
    for i in indices:
        tally[_outcome(code, channel, values, counts, cum, i)] += 1
    return tally


def run_trials(code: Code, channel: ChannelSpec, trials: int, workers: int = 1) -> TrialStats:
    """Encode random messages, inject errors, decode, and tally outcomes.

    Results depend only on ``(code, channel, trials)``; ``workers`` changes
    scheduling, never counts.
    """
    if trials < 1:
        raise ChannelError("trials must be >= 1")
    if workers < 1:
        raise ChannelError("workers must be >= 1")
    values = error_values(code, channel.value_mode)
    counts = list(channel.error_count_dist)
    if max(counts) > code.n:
        raise ChannelError(f"cannot place {max(counts)} errors in length {code.n}")
    cum, acc = [], Fraction(0)
    for c in counts:
        acc += channel.error_count_dist[c]
        cum.append(float(acc))
    args = (code, channel, values, counts, cum)
    if workers == 1:
        tallies = [_run_chunk(*args, range(trials))]
    else:
        chunks = [range(start, trials, workers) for start in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            tallies = list(pool.map(lambda idx: _run_chunk(*args, idx), chunks))
    total = {k: sum(t[k] for t in tallies) for k in tallies[0]}
    return TrialStats(trials=trials, seed=channel.seed, p=code.p, rows=code.rows, **total)


class RateReport(NamedTuple):
    r_octonion: Fraction
    r_hurwitz_subring: Fraction
    ratio: Fraction


def rate_report(p: int, k: int) -> RateReport:
    """Rates ``7k/(p-1)`` (length ``(p-1)/7``) against ``6k/(p-1)`` (length ``(p-1)/6``)."""
    if p % 7 != 1 or p < 8:
        raise ValueError(f"p={p} is not = 1 mod 7")
    if k < 1:
        raise ValueError("k must be >= 1")
    r2 = Fraction(7 * k, p - 1)
    r1 = Fraction(6 * k, p - 1)
    return RateReport(r2, r1, r2 / r1)
