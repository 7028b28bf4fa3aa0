import dataclasses

import pytest

from binomcert.interval import PrecisionPolicy
from binomcert.sweeps import (
    alternation_sweep,
    dominance_sweep,
    general_r_sweep,
    order_improvement_sweep,
    run_verify,
    sandwich_sweep,
    _run_chunked,
)

TINY = PrecisionPolicy(4, 4)


def test_sandwich_small_range():
    rep = sandwich_sweep(1, 200)
    assert (rep.proved, rep.failed, rep.undecided) == (400, 0, 0)
    assert rep.failures == []
    assert 0 < rep.worst_rel_width < 2**-40
    assert rep.wall_time >= 0


def test_sandwich_undecided_when_starved():
    rep = sandwich_sweep(1, 1, policy=TINY)
    assert rep.undecided > 0
    assert rep.failed == 0
    assert rep.failures  # undecided instances are reported, not hidden


def test_dominance_counts_include_spot_checks():
    rep = dominance_sweep(1, 500)
    # 500 rational sign checks + interval spot checks at 1, 10, 100
    assert (rep.proved, rep.failed, rep.undecided) == (503, 0, 0)


def test_alternation_all_orders():
    rep = alternation_sweep(1, 100, (1, 2, 3, 4))
    assert (rep.proved, rep.failed, rep.undecided) == (400, 0, 0)


def test_alternation_respects_order_subset():
    rep = alternation_sweep(1, 50, (1, 2))
    assert rep.total == 100


def test_order_improvement():
    rep = order_improvement_sweep(2, 100)
    # 99 order-gap checks + 99 consecutive-decrease checks
    assert (rep.proved, rep.failed, rep.undecided) == (198, 0, 0)


def test_general_r_small():
    rep = general_r_sweep((3, 4, 5), 12, (1, 2))
    assert (rep.proved, rep.failed, rep.undecided) == (72, 0, 0)


def test_run_verify_bundle():
    reports = run_verify(30, orders=(1, 2), jobs=1)
    by_name = {r.check: r for r in reports}
    assert set(by_name) == {"sandwich", "dominance", "alternation", "order_improvement"}
    assert all(r.failed == 0 and r.undecided == 0 for r in reports)
    assert by_name["sandwich"].total == 60
    assert by_name["alternation"].total == 60


def test_run_verify_rejects_bad_range():
    with pytest.raises(ValueError):
        run_verify(0)


def _strip_timing(rep):
    d = dataclasses.asdict(rep)
    d.pop("wall_time")
    return d


def test_chunked_equals_sequential():
    seq = _run_chunked(sandwich_sweep, 1, 120, 1, policy=PrecisionPolicy(64, 512))
    par = _run_chunked(sandwich_sweep, 1, 120, 3, policy=PrecisionPolicy(64, 512))
    assert _strip_timing(seq) == _strip_timing(par)


def test_merged_requires_same_check():
    a = sandwich_sweep(1, 5)
    b = dominance_sweep(1, 5)
    with pytest.raises(ValueError):
        a.merged(b)
