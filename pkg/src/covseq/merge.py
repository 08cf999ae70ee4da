"""Merging the codewords of a covering sequence code into one covering sequence.

Every codeword is cut open at some rotation and extended by its own first ``n - 1`` symbols, so
the resulting linear string holds all of the codeword's cyclic windows. The strings are then
chained greedily by overlap and the chain is closed into a cycle. Whatever the overlaps, each
string survives intact in the cycle, so all windows of the code survive as well.
"""
import logging
from collections import defaultdict
from collections import namedtuple

import numpy as np

from .core import CyclicSequence
from .core import necklace
from .core import SequenceCode
from .exceptions import EmptyInput
from .exceptions import ParameterError

logger = logging.getLogger(__name__)


class MergeResult(namedtuple("MergeResult", ["sequence", "nodes", "overlaps"])):
    """A merged sequence together with the strings and overlaps it was assembled from.

    ``overlaps[i]`` is the overlap between ``nodes[i]`` and the next node, the last one wrapping
    around to the first.
    """

    __slots__ = ()

    @property
    def length(self):
        return len(self.sequence)

    @property
    def total_bits(self):
        return sum(len(node) for node in self.nodes)

    @property
    def total_overlap(self):
        return sum(self.overlaps)

    @property
    def baseline(self):
        """Length of the sequence obtained with no overlaps at all."""
        return self.total_bits


_Node = namedtuple("_Node", ["codeword", "rotation", "text"])


def reduce_periodic(code):
    """Replace every codeword by one period of itself; the window set does not change."""
    return SequenceCode(
        [c.periodic_representative() for c in code.codewords], code.n, code.radius
    )


def acyclic_extension(s, n, eps=0):
    """The cyclic sequence ``s`` followed by its first ``n - 1 + eps`` symbols, as a string.

    Short sequences wrap around as often as needed.
    """
    if eps < 0:
        raise ParameterError(f"extension slack must be non negative, got {eps}")
    s = CyclicSequence(s)
    return s.segment(0, len(s) + n - 1 + eps)


def max_overlap(a, b, cap=None):
    """Largest ``t <= cap`` such that the last ``t`` symbols of ``a`` start ``b``."""
    limit = min(len(a), len(b))
    if cap is None:
        cap = limit - 1
    if cap >= limit:
        raise ParameterError(f"overlap cap {cap} must be below {limit}")
    for t in range(cap, 0, -1):
        if a.endswith(b[:t]):
            return t
    return 0


class OverlapGraph:
    """Complete directed graph on linear strings, arcs weighted by maximal overlap.

    Args:
        nodes: the strings
        cap: largest overlap considered, by default one less than the shorter string of a pair
    """

    def __init__(self, nodes, cap=None):
        self.nodes = [str(node) for node in nodes]
        self.cap = cap
        self._overlaps = {}

    def __len__(self):
        return len(self.nodes)

    def overlap(self, i, j):
        key = (i, j)
        if key not in self._overlaps:
            a, b = self.nodes[i], self.nodes[j]
            cap = min(len(a), len(b)) - 1
            if self.cap is not None:
                cap = min(cap, self.cap)
            self._overlaps[key] = max_overlap(a, b, cap)
        return self._overlaps[key]

    def arcs(self):
        for i in range(len(self)):
            for j in range(len(self)):
                if i != j:
                    yield i, j, self.overlap(i, j)

    def matrix(self):
        size = len(self)
        result = np.zeros((size, size), dtype=np.int64)
        for i, j, t in self.arcs():
            result[i, j] = t
        return result

    def cycle_overlaps(self, order=None):
        """Maximal overlaps along ``order`` (all nodes by default), last node back to first."""
        order = list(range(len(self))) if order is None else list(order)
        return [self.overlap(a, b) for a, b in zip(order, order[1:] + order[:1])]


def join_with_overlaps(strings, overlaps):
    """Close a list of strings into one cyclic sequence, dropping the stated overlaps.

    ``overlaps[i]`` symbols at the end of ``strings[i]`` are shared with the start of the next
    string (the last string continues into the first).

    Raises:
        ParameterError when a stated overlap does not match the strings
    """
    strings = [str(s) for s in strings]
    if not strings:
        raise EmptyInput("nothing to join")
    if len(overlaps) != len(strings):
        raise ParameterError(f"{len(strings)} strings but {len(overlaps)} overlaps")
    parts = []
    for i, (text, t) in enumerate(zip(strings, overlaps)):
        following = strings[(i + 1) % len(strings)]
        if t and text[-t:] != following[:t]:
            raise ParameterError(f"line {i + 1} does not overlap the next one by {t}")
        parts.append(text[: len(text) - t])
    return CyclicSequence("".join(parts))


def _distinct_codewords(code):
    seen = set()
    distinct = []
    for codeword in reduce_periodic(code).codewords:
        key = necklace(codeword)
        if key not in seen:
            seen.add(key)
            distinct.append(codeword)
    if len(distinct) < len(code):
        logger.debug("dropped %d repeated codewords", len(code) - len(distinct))
    return distinct


def _greedy_links(codewords, n):
    """Link codewords into chains, longest overlaps first.

    Returns the chosen rotation, successor and overlap of every codeword.
    """
    count = len(codewords)
    nodes = [
        _Node(index, r, word.segment(r, len(word) + n - 1))
        for index, word in enumerate(codewords)
        for r in range(len(word))
    ]
    rotation = [None] * count
    successor = [None] * count
    predecessor = [None] * count
    overlap = [0] * count
    parent = list(range(count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def usable(node):
        chosen = rotation[node.codeword]
        return chosen is None or chosen == node.rotation

    for t in range(n - 1, 0, -1):
        heads = defaultdict(list)
        for node in nodes:
            if predecessor[node.codeword] is None and usable(node):
                heads[node.text[:t]].append(node)
        edges = []
        for tail in nodes:
            if successor[tail.codeword] is not None or not usable(tail):
                continue
            for head in heads.get(tail.text[-t:], ()):
                if head.codeword != tail.codeword:
                    edges.append((tail.text + head.text[t:], tail, head))
        edges.sort(key=lambda edge: edge[0])
        joined = 0
        for _, tail, head in edges:
            a, b = tail.codeword, head.codeword
            if successor[a] is not None or predecessor[b] is not None:
                continue
            if not (usable(tail) and usable(head)) or find(a) == find(b):
                continue
            rotation[a], rotation[b] = tail.rotation, head.rotation
            successor[a], predecessor[b] = b, a
            overlap[a] = t
            parent[find(a)] = find(b)
            joined += 1
        if joined:
            logger.debug("overlap %d: %d links from %d candidates", t, joined, len(edges))
    rotation = [0 if r is None else r for r in rotation]
    return rotation, successor, predecessor, overlap


def merge_code(code):
    """Greedy cyclic superstring of the codewords of ``code``.

    Codewords are reduced to one period and repeated rotation classes are dropped. Every
    rotation of every codeword is a candidate string, but only one rotation per codeword ends up
    in the result. Links are made longest overlap first, ties going to the lexicographically
    least joined string. The remaining chains are concatenated in lexicographic order and closed
    into a cycle, with the maximal overlap (at most ``n - 1``) applied at each chain boundary.

    Args:
        code: a :class:`~covseq.core.SequenceCode`

    Returns:
        :class:`MergeResult`

    Raises:
        EmptyInput when the code has no codewords
    """
    if not len(code):
        raise EmptyInput("cannot merge a code without codewords")
    n = code.n
    codewords = _distinct_codewords(code)
    if len(codewords) == 1:
        only = codewords[0]
        node = only.segment(0, len(only) + n - 1)
        return MergeResult(only, (node,), (n - 1,))

    rotation, successor, predecessor, overlap = _greedy_links(codewords, n)
    texts = [w.segment(r, len(w) + n - 1) for w, r in zip(codewords, rotation)]

    chains = []
    for start in (i for i in range(len(codewords)) if predecessor[i] is None):
        chain = [start]
        while successor[chain[-1]] is not None:
            chain.append(successor[chain[-1]])
        text = texts[chain[0]] + "".join(texts[b][overlap[a] :] for a, b in zip(chain, chain[1:]))
        chains.append((text, chain))
    chains.sort(key=lambda item: item[0])
    order = [index for _, chain in chains for index in chain]

    boundaries = OverlapGraph(texts, cap=n - 1)
    overlaps = []
    for a, b in zip(order, order[1:] + order[:1]):
        overlaps.append(overlap[a] if successor[a] == b else boundaries.overlap(a, b))
    nodes = [texts[i] for i in order]
    sequence = CyclicSequence("".join(t[: len(t) - o] for t, o in zip(nodes, overlaps)))
    logger.info(
        "merged %d codewords from %d chains: %d bits, %d overlapping, length %d",
        len(codewords),
        len(chains),
        sum(map(len, nodes)),
        sum(overlaps),
        len(sequence),
    )
    return MergeResult(sequence, tuple(nodes), tuple(overlaps))


def greedy_merge(code):
    """Merge a covering sequence code into a single cyclic sequence; see :func:`merge_code`."""
    return merge_code(code).sequence
