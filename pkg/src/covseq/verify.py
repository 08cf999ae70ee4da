"""Exhaustive oracles for the covering property.

Coverage is decided by marking, for every window, the whole radius ``R`` ball around it in a
bit-packed table holding one bit per word of the space, then counting the table. Tables are
filled in blocks of at most 2^24 words so the unpacked working set stays small.
"""
import functools
import logging
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

import numpy as np

from .core import ball_volume
from .core import BinaryWord
from .core import CyclicSequence
from .core import MAX_WORD_BITS
from .core import SequenceCode
from .exceptions import InvalidRadius
from .exceptions import ParameterError
from .exceptions import ResourceLimitExceeded
from .utils import env_int
from .utils import popcount

logger = logging.getLogger(__name__)

DEFAULT_MAX_BITS = 28
WITNESS_LIMIT = 100
NAIVE_MAX_BITS = 12

_BLOCK_BITS = 24
_CHUNK = 1 << 22


def max_table_bits(override=None):
    """The largest word width a coverage table may have.

    ``override`` wins, then the ``COVSEQ_MAX_N`` environment variable, then 28. Never above 32.
    """
    limit = override if override is not None else env_int("COVSEQ_MAX_N", DEFAULT_MAX_BITS)
    return min(int(limit), MAX_WORD_BITS)


def default_workers():
    return max(1, env_int("COVSEQ_WORKERS", 1))


def _check_table(bits, max_bits=None):
    limit = max_table_bits(max_bits)
    if bits > limit:
        raise ResourceLimitExceeded("coverage table width", bits, limit)


def ball_masks(n, radius):
    """Every error pattern of weight at most ``radius`` on ``n`` bits, lightest first."""
    if not 0 <= radius <= n:
        raise InvalidRadius(n, radius)
    masks = [0]
    for weight in range(1, radius + 1):
        for positions in combinations(range(n), weight):
            masks.append(sum(1 << p for p in positions))
    return np.array(masks, dtype=np.uint64)


class CoverageReport(
    namedtuple(
        "CoverageReport",
        [
            "n",
            "radius",
            "space_size",
            "covered_count",
            "uncovered",
            "uncovered_total",
            "window_count",
            "computed_radius",
        ],
    )
):
    """Verdict of a coverage check.

    ``uncovered`` holds at most 100 witnesses as :class:`~covseq.core.BinaryWord`, smallest
    first; ``uncovered_total`` is exact.
    """

    __slots__ = ()

    @property
    def is_covering(self):
        return self.covered_count == self.space_size

    @property
    def verdict(self):
        return "covering" if self.is_covering else "not covering"

    def witnesses(self):
        return [str(word) for word in self.uncovered]

    def with_radius(self, computed_radius):
        return self._replace(computed_radius=computed_radius)

    def as_lines(self, **extra):
        """``key=value`` lines for scripts; ``extra`` pairs are appended as given."""
        fields = {
            "verdict": "covering" if self.is_covering else "not_covering",
            "n": self.n,
            "r": self.radius,
            "space": self.space_size,
            "covered": self.covered_count,
            "uncovered": self.uncovered_total,
            "windows": self.window_count,
        }
        if self.computed_radius is not None:
            fields["covering_radius"] = self.computed_radius
        fields.update(extra)
        lines = [f"{key}={value}" for key, value in fields.items()]
        if self.uncovered:
            lines.append("witnesses=" + ",".join(self.witnesses()))
        return lines


def _mark_block(values, masks, lo, hi, whole):
    block = np.zeros(hi - lo, dtype=bool)
    step = max(1, _CHUNK // len(masks))
    for start in range(0, len(values), step):
        targets = (values[start : start + step, None] ^ masks[None, :]).ravel()
        if not whole:
            targets = targets[(targets >= lo) & (targets < hi)] - np.uint64(lo)
        block[targets] = True
    return block


def _packed_marks(values, masks, n):
    size = 1 << n
    step = min(size, 1 << _BLOCK_BITS)
    blocks = [
        np.packbits(_mark_block(values, masks, lo, lo + step, step == size))
        for lo in range(0, size, step)
    ]
    return np.concatenate(blocks)


def coverage_table(values, n, radius, workers=None):
    """Packed table (one bit per word, most significant bit first) of the words covered.

    With more than one worker the windows are split, every worker fills a private table, and
    the tables are merged with a bitwise OR; the result does not depend on the worker count.
    """
    values = np.asarray(values, dtype=np.uint64)
    masks = ball_masks(n, radius)
    workers = workers or default_workers()
    if workers <= 1 or len(values) < 2 * workers:
        return _packed_marks(values, masks, n)
    logger.debug("marking %d windows with %d workers", len(values), workers)
    mark = functools.partial(_packed_marks, masks=masks, n=n)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        tables = list(pool.map(mark, np.array_split(values, workers)))
    return functools.reduce(np.bitwise_or, tables)


def _report(table, n, radius, window_count):
    size = 1 << n
    covered = 0
    uncovered = []
    chunk = 1 << 21
    for start in range(0, len(table), chunk):
        bits = np.unpackbits(table[start : start + chunk])
        covered += int(bits.sum())
        if len(uncovered) < WITNESS_LIMIT:
            missing = np.flatnonzero(bits == 0) + start * 8
            missing = missing[missing < size][: WITNESS_LIMIT - len(uncovered)]
            uncovered.extend(BinaryWord(int(word), n) for word in missing)
    return CoverageReport(
        n=n,
        radius=radius,
        space_size=size,
        covered_count=covered,
        uncovered=tuple(uncovered),
        uncovered_total=size - covered,
        window_count=window_count,
        computed_radius=None,
    )


def coverage(code, workers=None, max_bits=None):
    """Check that the windows of all codewords cover every ``code.n`` bit word within
    ``code.radius``.

    Args:
        code: a :class:`~covseq.core.SequenceCode`
        workers: number of marking threads, default from ``COVSEQ_WORKERS``
        max_bits: table width cap, default from ``COVSEQ_MAX_N`` (28)

    Returns:
        :class:`CoverageReport`

    Raises:
        ResourceLimitExceeded when ``code.n`` exceeds the table cap
    """
    _check_table(code.n, max_bits)
    values = code.window_values()
    table = coverage_table(values, code.n, code.radius, workers)
    report = _report(table, code.n, code.radius, len(values))
    logger.info(
        "(%d,%d) coverage of %d codewords: %d of %d words",
        code.n,
        code.radius,
        len(code),
        report.covered_count,
        report.space_size,
    )
    return report


def is_covering_sequence(s, n, radius, workers=None, max_bits=None):
    return coverage(SequenceCode([s], n, radius), workers=workers, max_bits=max_bits)


def covering_radius(s, n, max_bits=None):
    """Smallest radius at which ``s`` is a covering sequence for window width ``n``.

    Breadth first search over the n-cube, started from every window at once; the depth at which
    the last word is reached is the radius.
    """
    _check_table(n, max_bits)
    size = 1 << n
    seen = np.zeros(size, dtype=bool)
    frontier = np.unique(CyclicSequence(s).window_values(n))
    seen[frontier] = True
    remaining = size - len(frontier)
    units = np.uint64(1) << np.arange(n, dtype=np.uint64)
    radius = 0
    while remaining:
        reached = (frontier[:, None] ^ units[None, :]).ravel()
        frontier = np.unique(reached[~seen[reached]])
        seen[frontier] = True
        remaining -= len(frontier)
        radius += 1
        logger.debug("radius %d reached, %d words left", radius, remaining)
    return radius


def is_c2ds(array, m, n, radius, workers=None, max_bits=None):
    """Check that the toroidal ``m`` x ``n`` windows of ``array`` form a covering code.

    Windows are flattened row by row, so the space is all ``m*n`` bit words.
    """
    bits = m * n
    _check_table(bits, max_bits)
    if not 0 <= radius <= bits:
        raise InvalidRadius(bits, radius)
    values = array.window_values(m, n)
    table = coverage_table(values, bits, radius, workers)
    report = _report(table, bits, radius, len(values))
    logger.info(
        "(%dx%d,%d) coverage of a %dx%d array: %d of %d words",
        m,
        n,
        radius,
        array.rows,
        array.cols,
        report.covered_count,
        report.space_size,
    )
    return report


def sphere_covering_bound(n, radius):
    return -(-(1 << n) // ball_volume(2, n, radius))


def naive_coverage(values, n, radius):
    """Reference check: for every word, look for a window within distance ``radius``.

    Quadratic, so only for ``n`` up to 12.
    """
    if n > NAIVE_MAX_BITS:
        raise ParameterError(f"naive coverage is limited to n <= {NAIVE_MAX_BITS}")
    windows = np.unique(np.asarray(values, dtype=np.uint64))
    words = np.arange(1 << n, dtype=np.uint64)
    covered = np.zeros(1 << n, dtype=bool)
    for start in range(0, len(windows), 256):
        chunk = windows[start : start + 256]
        covered |= (popcount(words[:, None] ^ chunk[None, :]) <= radius).any(axis=1)
    return _report(np.packbits(covered), n, radius, len(values))
