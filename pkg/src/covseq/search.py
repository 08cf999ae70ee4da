"""Local search for short covering sequences of small window width.

A candidate cycle keeps, for every word of the space, the number of windows within distance
``R`` of it. Single bit flips, insertions and deletions only touch the ``n`` windows around the
edited position, so their effect on the number of uncovered words is updated incrementally.
"""
import logging
import math
from collections import namedtuple

import numpy as np

from .construct import debruijn_sequence
from .core import CyclicSequence
from .exceptions import ParameterError
from .verify import ball_masks
from .verify import is_covering_sequence
from .verify import sphere_covering_bound

logger = logging.getLogger(__name__)

MAX_SEARCH_BITS = 12
# acceptance temperatures at the start and the end of a restart
START_TEMPERATURE = 2.0
END_TEMPERATURE = 0.05


class SearchConfig(
    namedtuple(
        "SearchConfig",
        ["n", "radius", "target_length", "budget", "rng_seed", "restarts", "shrink"],
    )
):
    """Parameters of a search.

    ``target_length`` is where every restart begins (the sphere covering bound when None);
    ``budget`` is the total number of flips over all restarts. With ``shrink`` a stalled climb
    grows the cycle by one symbol and a success at length ``L`` is followed by a deletion and a
    new climb at ``L - 1``; without it every candidate keeps the target length.
    """

    __slots__ = ()

    def __new__(
        cls, n, radius, target_length=None, budget=200000, rng_seed=0, restarts=4, shrink=True
    ):
        if not 1 <= n <= MAX_SEARCH_BITS:
            raise ParameterError(f"search is limited to 1 <= n <= {MAX_SEARCH_BITS}, got {n}")
        bound = sphere_covering_bound(n, radius)
        if target_length is None:
            target_length = bound
        if target_length < bound:
            raise ParameterError(
                f"target {target_length} is below the sphere covering bound {bound}"
            )
        if restarts < 1 or budget < 0:
            raise ParameterError("need at least one restart and a non negative budget")
        return super().__new__(
            cls, n, radius, min(target_length, 1 << n), budget, rng_seed, restarts, shrink
        )


SearchReport = namedtuple(
    "SearchReport", ["sequence", "length", "fell_back", "restarts", "iterations"]
)


class _Candidate:
    """A cyclic bit list with incremental coverage counts."""

    def __init__(self, bits, n, radius):
        self.bits = list(bits)
        self.n = n
        self.masks = ball_masks(n, radius)
        self.counts = np.zeros(1 << n, dtype=np.int32)
        self.uncovered = 1 << n
        self._add(self._values(range(len(self.bits))))

    def __len__(self):
        return len(self.bits)

    def sequence(self):
        return CyclicSequence(self.bits)

    def _values(self, starts):
        bits, size = self.bits, len(self.bits)
        values = []
        for start in starts:
            value = 0
            for j in range(self.n):
                value = (value << 1) | bits[(start + j) % size]
            values.append(value)
        return values

    def _targets(self, values):
        values = np.array(values, dtype=np.uint64)
        return (values[:, None] ^ self.masks[None, :]).ravel().astype(np.intp)

    def _add(self, values):
        if not values:
            return
        targets = self._targets(values)
        touched = np.unique(targets)
        self.uncovered -= int(np.count_nonzero(self.counts[touched] == 0))
        np.add.at(self.counts, targets, 1)

    def _remove(self, values):
        if not values:
            return
        targets = self._targets(values)
        np.add.at(self.counts, targets, -1)
        self.uncovered += int(np.count_nonzero(self.counts[np.unique(targets)] == 0))

    def _around(self, position, count):
        # starts of the `count` windows ending at or after `position`
        return [position - self.n + 1 + i for i in range(count)]

    def _rebuild(self, change):
        self._remove(self._values(range(len(self.bits))))
        change()
        self._add(self._values(range(len(self.bits))))

    def flip(self, position):
        def change():
            self.bits[position] ^= 1

        if len(self.bits) <= self.n:
            return self._rebuild(change)
        starts = self._around(position, self.n)
        self._remove(self._values(starts))
        change()
        self._add(self._values(starts))

    def insert(self, position, bit):
        def change():
            self.bits.insert(position, bit)

        if len(self.bits) <= self.n:
            return self._rebuild(change)
        self._remove(self._values(self._around(position, self.n - 1)))
        change()
        self._add(self._values(self._around(position, self.n)))

    def delete(self, position):
        def change():
            del self.bits[position]

        if len(self.bits) <= self.n + 1:
            return self._rebuild(change)
        self._remove(self._values(self._around(position, self.n)))
        change()
        self._add(self._values(self._around(position, self.n - 1)))


def _temperature(used, budget):
    return START_TEMPERATURE * (END_TEMPERATURE / START_TEMPERATURE) ** (used / max(budget, 1))


def _climb(cfg, budget, rng):
    """One restart. Returns the shortest covering sequence met (or None) and the flips used.

    A flip that uncovers ``d`` more words is kept with probability ``exp(-d / T)``, the
    temperature ``T`` falling geometrically over the restart. Without ``shrink`` the length
    never changes.
    """
    n = cfg.n
    space = 1 << n
    floor = sphere_covering_bound(n, cfg.radius)
    candidate = _Candidate(rng.integers(0, 2, size=cfg.target_length).tolist(), n, cfg.radius)
    stall_limit = max(1000, budget // 20)
    best_found = None
    best_score = candidate.uncovered
    stall = used = 0
    while used < budget:
        if candidate.uncovered == 0:
            if best_found is None or len(candidate) < len(best_found):
                best_found = candidate.sequence()
                logger.debug("covering cycle of length %d after %d flips", len(candidate), used)
            if not cfg.shrink or len(candidate) <= max(floor, 1):
                break
            candidate.delete(int(rng.integers(len(candidate))))
            best_score, stall = candidate.uncovered, 0
            continue
        position = int(rng.integers(len(candidate)))
        before = candidate.uncovered
        candidate.flip(position)
        worse = candidate.uncovered - before
        if worse > 0 and rng.random() >= math.exp(-worse / _temperature(used, budget)):
            candidate.flip(position)
        used += 1
        if candidate.uncovered < best_score:
            best_score, stall = candidate.uncovered, 0
            continue
        stall += 1
        if cfg.shrink and stall > stall_limit and best_found is None and len(candidate) < space:
            candidate.insert(int(rng.integers(len(candidate) + 1)), int(rng.integers(2)))
            best_score, stall = candidate.uncovered, 0
    return best_found, used


def search_cs(cfg):
    """Look for a short ``(n, R)`` covering sequence by annealed bit flips with restarts.

    Restarts draw from independent streams spawned from ``cfg.rng_seed`` and share the budget
    evenly; the shortest result wins, ties going to the lexicographically least. When no
    restart succeeds the binary de Bruijn sequence of span ``n`` is returned.

    Returns:
        :class:`SearchReport`
    """
    streams = np.random.SeedSequence(cfg.rng_seed).spawn(cfg.restarts)
    share = cfg.budget // cfg.restarts
    found = []
    iterations = 0
    for index, stream in enumerate(streams):
        result, used = _climb(cfg, share, np.random.default_rng(stream))
        iterations += used
        logger.debug(
            "restart %d: %s", index, f"length {len(result)}" if result is not None else "nothing"
        )
        if result is not None:
            found.append(result)
    found.sort(key=lambda s: (len(s), str(s)))
    for sequence in found:
        if is_covering_sequence(sequence, cfg.n, cfg.radius).is_covering:
            logger.info("(%d,%d) search found length %d", cfg.n, cfg.radius, len(sequence))
            return SearchReport(sequence, len(sequence), False, cfg.restarts, iterations)
    logger.warning(
        "(%d,%d) search found nothing in %d flips, using the de Bruijn sequence",
        cfg.n,
        cfg.radius,
        iterations,
    )
    fallback = debruijn_sequence(cfg.n)
    return SearchReport(fallback, len(fallback), True, cfg.restarts, iterations)
