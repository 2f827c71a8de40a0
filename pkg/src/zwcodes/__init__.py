"""Error-correcting codes over the ring Z[w], w = (1 + e2 + ... + e8)/2."""

from .cd_algebra import Octonion, embed_zw, oct_conj, oct_mul, oct_norm
from .channel_sim import ChannelSpec, TrialStats, rate_report, run_trials
from .codec import (
    Code,
    DecodeOutcome,
    Verdict,
    brute_force_decode,
    build_code,
    decode,
    decode_four_rows,
    decode_single_row,
    decode_three_rows,
    decode_two_rows,
    encode,
    syndrome,
)
from .residue_field import ResidueField, build_field
from .zw_ring import ZwInt, find_prime, zw_divmod

__all__ = [
    "ChannelSpec", "Code", "DecodeOutcome", "Octonion", "ResidueField", "TrialStats",
    "Verdict", "ZwInt", "brute_force_decode", "build_code", "build_field", "decode",
    "decode_four_rows", "decode_single_row", "decode_three_rows", "decode_two_rows",
    "embed_zw", "encode", "find_prime", "oct_conj", "oct_mul", "oct_norm", "rate_report",
    "run_trials", "syndrome", "zw_divmod",
]
