from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zwcodes.channel_sim import (
    ChannelError,
    ChannelSpec,
    error_values,
    parse_dist,
    rate_report,
    run_trials,
    stats_csv,
)


def test_parse_dist():
    assert parse_dist("0=0.5,1=0.25,2=0.25") == {0: Fraction(1, 2), 1: Fraction(1, 4), 2: Fraction(1, 4)}
    assert parse_dist("1=1/3, 2=2/3") == {1: Fraction(1, 3), 2: Fraction(2, 3)}
    with pytest.raises(ChannelError):
        parse_dist("1")
    with pytest.raises(ChannelError):
        parse_dist("1=0.5,1=0.5")


@pytest.mark.parametrize("dist", [{1: Fraction(1, 2)}, {3: 1}, {1: -1, 2: 2}, {}])
def test_spec_validation(dist):
    with pytest.raises(ChannelError):
        ChannelSpec(dist)


def test_spec_seed_range():
    with pytest.raises(ChannelError):
        ChannelSpec({1: 1}, seed=2**64)
    with pytest.raises(ChannelError):
        ChannelSpec({1: 1}, value_mode="gaussian")


def test_error_free_channel(codes29):
    stats = run_trials(codes29[2], ChannelSpec({0: 1}, seed=3), 200)
    assert stats.no_error + stats.corrected_ok == 200
    assert stats.miscorrected == 0


def test_single_errors_always_corrected(codes29):
    stats = run_trials(codes29[2], ChannelSpec({1: 1}, seed=11), 10_000)
    assert stats.corrected_ok == 10_000
    assert stats.miscorrected == stats.failed == stats.detected == 0


@pytest.mark.parametrize("rows", [2, 3, 4])
def test_single_error_rows_at_least_two(codes29, rows):
    stats = run_trials(codes29[rows], ChannelSpec({1: 1}, seed=rows), 500)
    assert stats.miscorrected == stats.failed == 0


def test_two_error_four_rows_p71(codes71):
    stats = run_trials(codes71[4], ChannelSpec({0: "1/4", 1: "1/4", 2: "1/2"}, seed=99), 400)
    assert stats.no_error + stats.corrected_ok == 400


def test_power_of_w_on_single_row(codes71, codes29):
    for c in (codes71[1], codes29[1]):
        stats = run_trials(c, ChannelSpec({1: 1}, "power-of-w", seed=1), 300)
        assert stats.corrected_ok == 300


def test_weight_one_values(codes29, f29):
    vals = error_values(codes29[1], "weight-1-only")
    assert sorted(vals) == sorted({1, 28, f29.omega, (-f29.omega) % 29})
    stats = run_trials(codes29[1], ChannelSpec({1: 1}, "weight-1-only", seed=4), 400)
    # half of the weight-1 values lie outside the powers of -w
    assert 0 < stats.corrected_ok < 400 and stats.miscorrected == 400 - stats.corrected_ok


def test_counts_sum(codes29):
    stats = run_trials(codes29[1], ChannelSpec({0: "0.2", 1: "0.3", 2: "0.5"}, seed=8), 300)
    assert sum((stats.no_error, stats.corrected_ok, stats.miscorrected,
                stats.detected, stats.failed)) == 300


@given(st.integers(0, 2**64 - 1))
def test_deterministic(seed):
    from zwcodes.codec import build_code
    from zwcodes.residue_field import build_field
    from zwcodes.zw_ring import ZwInt

    f = build_field(ZwInt(-1, 4))
    code = build_code(f, f.find_primitive(), 3)
    spec = ChannelSpec({0: "0.1", 1: "0.5", 2: "0.4"}, seed=seed)
    a = run_trials(code, spec, 40)
    assert a == run_trials(code, spec, 40) == run_trials(code, spec, 40, workers=4)


def test_workers_do_not_change_counts(codes71):
    spec = ChannelSpec({1: "1/2", 2: "1/2"}, seed=12345)
    ref = run_trials(codes71[2], spec, 500)
    for w in (2, 3, 8):
        assert run_trials(codes71[2], spec, 500, workers=w) == ref


def test_bad_trials(codes29):
    with pytest.raises(ChannelError):
        run_trials(codes29[2], ChannelSpec({1: 1}), 0)


def test_serialisation(codes29):
    stats = run_trials(codes29[2], ChannelSpec({1: 1}, seed=2), 10)
    js = stats.to_json()
    assert js["rate"] == "1" and js["p"] == 29 and js["rows"] == 2
    text = stats_csv([stats]).splitlines()
    assert text[0] == "trials,no_error,corrected_ok,miscorrected,detected,failed,seed,p,rows"
    assert text[1] == "10,0,10,0,0,0,2,29,2"


def test_rate_examples():
    assert rate_report(29, 2) == (Fraction(1, 2), Fraction(3, 7), Fraction(7, 6))
    assert rate_report(71, 6) == (Fraction(3, 5), Fraction(18, 35), Fraction(7, 6))
    with pytest.raises(ValueError):
        rate_report(30, 1)
    with pytest.raises(ValueError):
        rate_report(29, 0)


@given(st.integers(1, 500), st.integers(1, 40))
def test_rate_ratio_constant(m, k):
    p = 7 * m + 1
    r = rate_report(p, k)
    assert r.ratio == Fraction(7, 6)
    assert r.r_octonion > r.r_hurwitz_subring
    assert r.r_octonion == Fraction(7 * k, p - 1)
