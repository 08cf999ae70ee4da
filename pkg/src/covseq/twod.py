"""Two dimensional covering arrays built from covering sequences.

Three ways are provided: folding one long sequence into short rows, stacking shifted copies of a
sequence with triangular shifts, and stacking shifted copies driven by a de Bruijn sequence of
shifts.
"""
import logging
from collections import namedtuple

from .construct import debruijn
from .core import CyclicSequence
from .core import TorusArray
from .exceptions import InvalidSeed
from .exceptions import ParameterError
from .exceptions import ResourceLimitExceeded
from .verify import is_c2ds
from .verify import is_covering_sequence

logger = logging.getLogger(__name__)

SHIFT_ROWS_LIMIT = 1 << 20
FOLD_PADDING = ("prefix", "wrap")


class ShiftSchedule(namedtuple("ShiftSchedule", ["shifts", "seed_length"])):
    """Absolute left rotations of the seed, one per row."""

    __slots__ = ()

    @property
    def rows(self):
        return len(self.shifts)

    def relative_shifts(self):
        """Shift from each row to the next; the last entry wraps from the last row to the first."""
        k = self.seed_length
        following = self.shifts[1:] + self.shifts[:1]
        return [(b - a) % k for a, b in zip(self.shifts, following)]


def _check_seed(s, n, radius, verify_seed):
    s = CyclicSequence(s)
    if verify_seed:
        report = is_covering_sequence(s, n, radius)
        if not report.is_covering:
            raise InvalidSeed(n, radius, report)
    return s


def triangular_schedule(k):
    """Row ``i`` is shifted by ``i(i+1)/2``; an even ``k`` repeats the last row once more."""
    shifts = [(i * (i + 1) // 2) % k for i in range(k)]
    if k % 2 == 0:
        shifts.append(shifts[-1])
    else:
        # odd k: the shifts 1 + 2 + ... + k close the cycle
        assert k * (k + 1) // 2 % k == 0
    return ShiftSchedule(tuple(shifts), k)


def debruijn_schedule(k, m):
    """Row to row shifts follow the de Bruijn sequence of span ``m - 1`` over ``0..k-1``.

    When the shifts do not add up to a multiple of ``k`` the last row is repeated, which closes
    the cycle of shifts.
    """
    if m < 2:
        raise ParameterError(f"stacking needs m >= 2, got {m}")
    rows = k ** (m - 1)
    if rows > SHIFT_ROWS_LIMIT:
        raise ResourceLimitExceeded("number of rows", rows, SHIFT_ROWS_LIMIT)
    shifts = []
    position = 0
    for step in debruijn(k, m - 1) if k > 1 else (0,) * rows:
        position = (position + step) % k
        shifts.append(position)
    if position:
        shifts.append(shifts[-1])
    return ShiftSchedule(tuple(shifts), k)


def shift_array(s, schedule):
    s = CyclicSequence(s)
    return TorusArray([str(s.rotate(shift)) for shift in schedule.shifts])


def fold(s, m, n, radius, pad="prefix", verify_seed=True):
    """Fold an ``(mn, R)`` covering sequence into an array with ``2n - 1`` columns.

    Row ``j`` holds the symbols ``j*n .. j*n + 2n - 2`` of the (cyclic) seed, so the ``m x n``
    windows of the array are the ``mn`` windows of the seed. When ``n`` does not divide the seed
    length the seed is lengthened first:

    * ``pad="wrap"`` appends the first ``mn - 1 + eps`` symbols, ``eps`` being the least value
      making the length a multiple of ``n``. Every cyclic window of the seed then survives, and
      the array has at most ``ceil(k/n) + m`` rows.
    * ``pad="prefix"`` appends only the fewest leading symbols that make the length a multiple
      of ``n``. This can lose windows crossing the join, so the folded array is checked and
      the ``wrap`` extension is used instead when it does not cover.

    Raises:
        InvalidSeed when ``verify_seed`` is set and ``s`` is not an ``(mn, R)`` covering sequence
    """
    if pad not in FOLD_PADDING:
        raise ParameterError(f"pad must be one of {', '.join(FOLD_PADDING)}, got {pad!r}")
    s = _check_seed(s, m * n, radius, verify_seed)
    k = len(s)
    if k % n == 0:
        return _fold_rows(s, n)
    if pad == "prefix":
        array = _fold_rows(CyclicSequence(s.segment(0, k + (-k) % n)), n)
        if is_c2ds(array, m, n, radius).is_covering:
            return array
        logger.info("prefix padding of length %d loses windows, using the wrap extension", k)
    extra = m * n - 1
    extra += (-(k + extra)) % n
    logger.info("seed of length %d extended by %d to fold into width %d", k, extra, n)
    return _fold_rows(CyclicSequence(s.segment(0, k + extra)), n)


def _fold_rows(seed, n):
    array = TorusArray([seed.segment(j * n, 2 * n - 1) for j in range(len(seed) // n)])
    logger.info("folded length %d into a %dx%d array", len(seed), array.rows, array.cols)
    return array


def triangular_shift_array(s, n, radius, verify_seed=True):
    """Stack rotations of an ``(n, R)`` covering sequence of length ``k``: row ``i`` is the
    seed rotated left by ``i(i+1)/2``.

    The result is ``(k+1) x k`` for even ``k`` (the last row appears twice) and ``k x k`` for
    odd ``k``; it is a ``(2 x n, 2R)`` covering array.
    """
    s = _check_seed(s, n, radius, verify_seed)
    array = shift_array(s, triangular_schedule(len(s)))
    logger.info("triangular shifts gave a %dx%d array", array.rows, array.cols)
    return array


def debruijn_shift_array(s, n, radius, m, verify_seed=True):
    """Stack rotations of an ``(n, R)`` covering sequence with de Bruijn driven shifts.

    Gives an ``(m x n, mR)`` covering array with ``k^(m-1)`` rows (one more when the shifts do
    not close up, which happens for ``m = 2`` and even ``k``).
    """
    s = _check_seed(s, n, radius, verify_seed)
    array = shift_array(s, debruijn_schedule(len(s), m))
    logger.info("de Bruijn shifts gave a %dx%d array", array.rows, array.cols)
    return array
