import numpy as np
import pytest

from covseq.construct import debruijn_sequence
from covseq.core import CyclicSequence
from covseq.core import SequenceCode
from covseq.core import TorusArray
from covseq.exceptions import InvalidRadius
from covseq.exceptions import ParameterError
from covseq.exceptions import ResourceLimitExceeded
from covseq.verify import ball_masks
from covseq.verify import coverage
from covseq.verify import covering_radius
from covseq.verify import is_c2ds
from covseq.verify import is_covering_sequence
from covseq.verify import max_table_bits
from covseq.verify import naive_coverage
from covseq.verify import sphere_covering_bound

EIGHT_ONE = "00011011111001000001101011100101"


def test_optimal_eight_one():
    report = is_covering_sequence(EIGHT_ONE, 8, 1)
    assert report.is_covering
    assert report.covered_count == 256
    assert report.uncovered == ()
    assert report.window_count == 32


def test_radius_equal_to_width_covers_everything():
    assert coverage(SequenceCode(["0"], 3, 3)).is_covering


def test_uncovered_witnesses():
    report = is_covering_sequence("10", 2, 0)
    assert not report.is_covering
    assert report.covered_count == 2
    assert report.witnesses() == ["00", "11"]
    assert report.as_lines() == [
        "verdict=not_covering",
        "n=2",
        "r=0",
        "space=4",
        "covered=2",
        "uncovered=2",
        "windows=2",
        "witnesses=00,11",
    ]


def test_witness_list_is_truncated():
    report = is_covering_sequence("0", 10, 0)
    assert report.uncovered_total == 1023
    assert len(report.uncovered) == 100
    assert str(report.uncovered[0]) == "0000000001"


@pytest.mark.parametrize("entry_id, n", [("cs-10-1-175", 10), ("cs-15-1-3516", 15)])
def test_published_sequences(entry, entry_id, n):
    assert is_covering_sequence(entry(entry_id).sequence, n, 1).is_covering


def test_shorter_than_sphere_bound_fails():
    s = CyclicSequence(EIGHT_ONE[:28])
    assert len(s) < sphere_covering_bound(8, 1)
    assert not is_covering_sequence(s, 8, 1).is_covering


def test_covering_radius():
    assert covering_radius(debruijn_sequence(9), 9) == 0
    assert covering_radius(EIGHT_ONE, 8) == 1
    assert covering_radius("0", 5) == 5


def test_covering_radius_matches_linear_scan():
    rng = np.random.default_rng(3)
    for _ in range(20):
        n = int(rng.integers(3, 13))
        s = CyclicSequence(rng.integers(0, 2, size=int(rng.integers(1, 80))).tolist())
        radius = next(r for r in range(n + 1) if is_covering_sequence(s, n, r).is_covering)
        assert covering_radius(s, n) == radius


def test_shifted_array(entry):
    array = entry("c2ds-2x6-2-13x12").array
    report = is_c2ds(array, 2, 6, 2)
    assert report.is_covering
    assert report.space_size == 4096
    assert report.window_count == 156


def test_single_row_is_not_a_two_dimensional_cover():
    array = TorusArray([EIGHT_ONE])
    assert not is_c2ds(array, 2, 4, 1).is_covering


@pytest.mark.parametrize("n, radius, bound", [(8, 1, 29), (9, 1, 52), (16, 1, 3856), (5, 5, 1)])
def test_sphere_covering_bound(n, radius, bound):
    assert sphere_covering_bound(n, radius) == bound


def test_monotone_in_radius():
    s = CyclicSequence("0001011")
    verdicts = [is_covering_sequence(s, 6, r).is_covering for r in range(7)]
    first = verdicts.index(True)
    assert all(verdicts[first:])


def test_rotation_invariance(entry):
    s = entry("cs-9-1-93").sequence
    rng = np.random.default_rng(8)
    for shift in rng.integers(0, len(s), size=8).tolist():
        assert is_covering_sequence(s.rotate(shift), 9, 1).is_covering


def test_marking_agrees_with_naive_scan(rng_seed):
    rng = np.random.default_rng(rng_seed)
    for _ in range(1000):
        n = int(rng.integers(3, 11))
        radius = int(rng.integers(0, 3))
        s = CyclicSequence(rng.integers(0, 2, size=int(rng.integers(4, 64))).tolist())
        fast = is_covering_sequence(s, n, radius)
        slow = naive_coverage(s.window_values(n), n, radius)
        assert fast.covered_count == slow.covered_count
        assert fast.uncovered == slow.uncovered


def test_workers_do_not_change_the_verdict(entry):
    s = entry("cs-12-2-161").sequence
    single = is_covering_sequence(s, 12, 2, workers=1)
    many = is_covering_sequence(s, 12, 2, workers=4)
    assert single == many


def test_ball_masks():
    assert ball_masks(4, 1).tolist() == [0, 1, 2, 4, 8]
    assert len(ball_masks(20, 2)) == 211
    with pytest.raises(InvalidRadius):
        ball_masks(3, 4)


def test_table_cap(monkeypatch):
    with pytest.raises(ResourceLimitExceeded):
        is_covering_sequence("01", 21, 1, max_bits=20)
    monkeypatch.setenv("COVSEQ_MAX_N", "40")
    assert max_table_bits() == 32
    monkeypatch.setenv("COVSEQ_MAX_N", "12")
    assert max_table_bits() == 12
    with pytest.raises(ResourceLimitExceeded):
        is_covering_sequence("01", 13, 1)


def test_naive_scan_is_limited():
    with pytest.raises(ParameterError):
        naive_coverage([0], 13, 1)
