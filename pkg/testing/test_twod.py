import pytest

from covseq.construct import debruijn_sequence
from covseq.exceptions import InvalidSeed
from covseq.exceptions import ParameterError
from covseq.exceptions import ResourceLimitExceeded
from covseq.twod import debruijn_schedule
from covseq.twod import debruijn_shift_array
from covseq.twod import fold
from covseq.twod import FOLD_PADDING
from covseq.twod import triangular_schedule
from covseq.twod import triangular_shift_array
from covseq.verify import is_c2ds


def test_triangular_schedule():
    odd = triangular_schedule(5)
    assert odd.shifts == (0, 1, 3, 1, 0)
    assert odd.relative_shifts() == [1, 2, 3, 4, 0]
    even = triangular_schedule(4)
    assert even.shifts == (0, 1, 3, 2, 2)
    assert even.rows == 5


def test_debruijn_schedule_with_two_rows_is_triangular():
    assert debruijn_schedule(12, 2) == triangular_schedule(12)
    assert debruijn_schedule(5, 2) == triangular_schedule(5)


def test_debruijn_schedule_limits():
    assert debruijn_schedule(12, 3).rows == 144
    with pytest.raises(ParameterError):
        debruijn_schedule(12, 1)
    with pytest.raises(ResourceLimitExceeded):
        debruijn_schedule(1100, 3)


def test_fold_rows():
    array = fold("00010111", 1, 3, 0)
    assert array.row_strings() == ["00010", "10111", "11000"]


def test_fold_long_sequence(self_dual_sequence):
    array = fold(self_dual_sequence, 4, 4, 1)
    assert array.shape == (1116, 7)
    assert is_c2ds(array, 4, 4, 1).is_covering


def test_fold_wrap_padding(self_dual_sequence):
    array = fold(self_dual_sequence, 4, 4, 1, pad="wrap", verify_seed=False)
    assert array.shape == (1120, 7)
    assert array.rows <= -(-len(self_dual_sequence) // 4) + 4


# a (6,1) covering sequence whose minimal prefix padding loses a window across the join
SHORT_FOLD_SEED = "0100000010101111110"


@pytest.mark.parametrize("pad", ["prefix", "wrap"])
def test_fold_keeps_windows_across_the_join(pad):
    array = fold(SHORT_FOLD_SEED, 2, 3, 1, pad=pad)
    assert array.shape == (8, 5)
    assert is_c2ds(array, 2, 3, 1).is_covering


@pytest.mark.parametrize("shift", range(len(SHORT_FOLD_SEED)))
def test_fold_rotations_of_a_short_seed(shift):
    seed = SHORT_FOLD_SEED[shift:] + SHORT_FOLD_SEED[:shift]
    for pad in FOLD_PADDING:
        assert is_c2ds(fold(seed, 2, 3, 1, pad=pad), 2, 3, 1).is_covering


@pytest.mark.parametrize("m, n, tail", [(2, 3, "0"), (2, 4, ""), (3, 2, ""), (2, 5, "0")])
def test_fold_seeds_holding_every_window(m, n, tail):
    # every word appears as a plain substring, so these seeds cover even at radius 0
    span = str(debruijn_sequence(m * n))
    seed = span + span[: m * n - 1] + tail
    assert len(seed) % n
    for pad in FOLD_PADDING:
        array = fold(seed, m, n, 0, pad=pad)
        assert is_c2ds(array, m, n, 0).is_covering
        assert array.rows <= -(-len(seed) // n) + m


def test_fold_checks_its_seed():
    with pytest.raises(InvalidSeed):
        fold("0101", 2, 2, 0)
    assert fold("0101", 2, 2, 0, verify_seed=False).shape == (2, 3)
    with pytest.raises(ParameterError):
        fold("0101", 2, 2, 0, pad="zeros", verify_seed=False)


def test_triangular_shift_array(six_one, entry):
    array = triangular_shift_array(six_one, 6, 1)
    assert array.shape == (13, 12)
    assert array.row_strings() == list(entry("c2ds-2x6-2-13x12").payload)
    assert is_c2ds(array, 2, 6, 2).is_covering


def test_debruijn_shift_array(six_one):
    array = debruijn_shift_array(six_one, 6, 1, 3)
    assert array.shape == (144, 12)
    assert is_c2ds(array, 3, 6, 3).is_covering
    assert debruijn_shift_array(six_one, 6, 1, 2) == triangular_shift_array(six_one, 6, 1)


def test_shift_array_checks_its_seed():
    with pytest.raises(InvalidSeed):
        triangular_shift_array("000111", 6, 1)


def test_triangular_shift_array_of_the_searched_seed(entry):
    array = triangular_shift_array(entry("cs-7-1-22").sequence, 7, 1)
    assert array.shape == (23, 22)
    assert array.area == 506
    assert is_c2ds(array, 2, 7, 2).is_covering


def test_every_relative_shift_appears():
    assert set(triangular_schedule(12).relative_shifts()) == set(range(12))
    steps = debruijn_schedule(12, 3).relative_shifts()
    pairs = {(a, b) for a, b in zip(steps, steps[1:] + steps[:1])}
    assert len(pairs) == 144
