# module for small helpers shared by the covseq modules
import os
from enum import Enum

import numpy as np

# popcount of every 16 bit value, used to count bits of uint64 vectors in four lookups
_POPCOUNT16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)


class BoundSource(Enum):
    """Where a bound in the table of shortest covering sequence lengths comes from."""

    SEARCH = "a"
    CHUNG_COOPER = "b"
    SQUARE_INTERLEAVE = "c"
    INTERLEAVE = "d"
    HAMMING = "e"
    SELF_DUAL = "f"
    PRIMITIVE = "g"
    TRIVIAL = "h"

    @property
    def description(self):
        return _SOURCE_DESCRIPTIONS[self]

    @classmethod
    def from_tag(cls, tag):
        """Map a one letter tag to its enum member.

        Raises:
            ValueError when the tag is unknown
        """
        return cls(tag.strip().lower())

    @classmethod
    def tags(cls):
        return {member.value: member for member in cls}


_SOURCE_DESCRIPTIONS = {
    BoundSource.SEARCH: "computer search",
    BoundSource.CHUNG_COOPER: "Chung and Cooper",
    BoundSource.SQUARE_INTERLEAVE: "square interleave of one sequence",
    BoundSource.INTERLEAVE: "interleave of two sequences",
    BoundSource.HAMMING: "merged cyclic Hamming code",
    BoundSource.SELF_DUAL: "merged self-dual code",
    BoundSource.PRIMITIVE: "primitive polynomial",
    BoundSource.TRIVIAL: "trivial bound",
}


def popcount(values):
    """Number of set bits of every element of an unsigned integer array."""
    values = np.asarray(values, dtype=np.uint64)
    total = np.zeros(values.shape, dtype=np.uint32)
    for shift in (0, 16, 32, 48):
        total += _POPCOUNT16[(values >> np.uint64(shift)) & np.uint64(0xFFFF)]
    return total


def env_int(name, default):
    """Integer from the environment, ``default`` when the variable is unset or empty."""
    raw = os.environ.get(name)
    if not raw:
        return default
    return int(raw)
