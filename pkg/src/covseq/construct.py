"""One dimensional constructions of covering sequences and covering sequence codes."""
import logging
import math
from collections import namedtuple

import numpy as np
from cached_property import cached_property

from .core import CyclicSequence
from .core import Gf2Poly
from .core import SequenceCode
from .exceptions import IncompatibleLengths
from .exceptions import MalformedPolynomial
from .exceptions import MissingRun
from .exceptions import PairingError
from .exceptions import ParameterError
from .exceptions import ResourceLimitExceeded
from .verify import is_covering_sequence

logger = logging.getLogger(__name__)

DEBRUIJN_MAX_SIZE = 1 << 24
MAX_POLY_DEGREE = 24
# the Hamming enumeration holds all 2^(2^k - k - 1) codewords; k = 5 would need 2^26
HAMMING_MAX_K = 4

SELF_DUAL_BASE = ("0001101111100100", "0001101011100101")


def _lyndon_words(q, span):
    # Duval's generator, lexicographic order, words of length at most span
    word = [-1]
    while word:
        word[-1] += 1
        size = len(word)
        if span % size == 0:
            yield word[:]
        while len(word) < span:
            word.append(word[-size])
        while word and word[-1] == q - 1:
            word.pop()


def debruijn(q, span):
    """The lexicographically least de Bruijn sequence over ``0..q-1`` with window ``span``.

    It is the concatenation, in lexicographic order, of the Lyndon words whose length divides
    ``span``.

    Returns:
        tuple of symbols, length ``q ** span``

    Raises:
        ResourceLimitExceeded when ``q ** span`` is above 2^24
    """
    if q < 2 or span < 1:
        raise ParameterError(f"need q >= 2 and span >= 1, got q={q} span={span}")
    size = q ** span
    if size > DEBRUIJN_MAX_SIZE:
        raise ResourceLimitExceeded("de Bruijn sequence length", size, DEBRUIJN_MAX_SIZE)
    symbols = []
    for word in _lyndon_words(q, span):
        symbols.extend(word)
    return tuple(symbols)


def debruijn_sequence(span):
    """Binary de Bruijn sequence, an ``(span, 0)`` covering sequence of length ``2**span``."""
    return CyclicSequence(debruijn(2, span))


def _parity(value):
    return bin(value).count("1") & 1


class LfsrStream:
    """Linear recurrence ``a_k = sum(c_i * a_{k-i}) + offset`` over GF(2), ``i = 1..n``.

    Args:
        poly: feedback polynomial of degree ``n`` with ``c_0 = c_n = 1``
        offset: 0 for the plain recurrence, 1 for the complemented one
        initial: the first ``n`` symbols ``a_0 .. a_{n-1}``
    """

    def __init__(self, poly, offset=0, initial=None):
        check_feedback(poly)
        self.poly = poly
        self.offset = offset & 1
        n = poly.degree
        initial = [0] * (n - 1) + [1] if initial is None else [int(b) & 1 for b in initial]
        if len(initial) != n:
            raise ParameterError(f"initial state needs {n} symbols, got {len(initial)}")
        self.initial = tuple(initial)
        # bit i-1 of the tap mask holds c_i, bit i-1 of the state holds a_{k-i}
        self.taps = sum(poly.coefficient(i) << (i - 1) for i in range(1, n + 1))
        self.mask = (1 << n) - 1

    @property
    def degree(self):
        return self.poly.degree

    def _initial_state(self):
        n = self.degree
        return sum(bit << (n - 1 - i) for i, bit in enumerate(self.initial))

    def _step(self, state):
        bit = _parity(state & self.taps) ^ self.offset
        return ((state << 1) | bit) & self.mask, bit

    def symbols(self, length):
        out = list(self.initial[:length])
        state = self._initial_state()
        while len(out) < length:
            state, bit = self._step(state)
            out.append(bit)
        return out

    def period(self, limit=None):
        """Steps until the state comes back, or None once ``limit`` steps pass without it."""
        start = state = self._initial_state()
        limit = limit or (1 << self.degree)
        for steps in range(1, limit + 1):
            state, _ = self._step(state)
            if state == start:
                return steps
        return None


def check_feedback(poly):
    if poly.degree < 1 or not poly.coefficient(0):
        raise MalformedPolynomial(f"{poly} needs a constant term and degree >= 1")


def is_primitive(poly):
    """True when the recurrence of ``poly`` started from a nonzero state has period 2^n - 1.

    Raises:
        MalformedPolynomial when ``c_0`` is zero
        ResourceLimitExceeded when the degree is above 24
    """
    check_feedback(poly)
    n = poly.degree
    if n > MAX_POLY_DEGREE:
        raise ResourceLimitExceeded("polynomial degree", n, MAX_POLY_DEGREE)
    full = (1 << n) - 1
    if n > 1 and not sum(poly.coefficient(i) for i in range(n + 1)) & 1:
        # divisible by x + 1
        return False
    return LfsrStream(poly).period(limit=full) == full


def find_sparse_primitive(n, radius):
    """Least primitive polynomial of degree ``n`` with ``c_1 = ... = c_{2R+1} = 0``.

    Candidates are ordered lexicographically by their coefficient string ``c_0 c_1 ... c_n``.

    Returns:
        :class:`~covseq.core.Gf2Poly`, or None when no candidate is primitive
    """
    if n > MAX_POLY_DEGREE:
        raise ResourceLimitExceeded("polynomial degree", n, MAX_POLY_DEGREE)
    first_free = 2 * radius + 2
    free = n - first_free
    if free < 0:
        logger.info("no room for free coefficients at degree %d and radius %d", n, radius)
        return None
    for pattern in range(1 << free):
        value = 1 | (1 << n)
        for t in range(free):
            if (pattern >> (free - 1 - t)) & 1:
                value |= 1 << (first_free + t)
        poly = Gf2Poly(value)
        if is_primitive(poly):
            logger.info("sparse primitive polynomial of degree %d: %s", n, poly)
            return poly
    logger.info("no sparse primitive polynomial of degree %d for radius %d", n, radius)
    return None


def default_primitive(degree):
    """Primitive polynomial of the given degree with the smallest integer value."""
    for value in range((1 << degree) + 1, 1 << (degree + 1), 2):
        poly = Gf2Poly(value)
        if is_primitive(poly):
            return poly
    raise ParameterError(f"no primitive polynomial of degree {degree}")


def m_sequence(poly):
    """Maximal length sequence of a primitive polynomial, started from ``0...01``."""
    n = poly.degree
    return CyclicSequence(LfsrStream(poly).symbols((1 << n) - 1))


def primitive_pair(poly):
    """The sequence of the plain recurrence and the one of the complemented recurrence.

    The second starts from the complemented initial state, so it is the complement of the first
    whenever ``c_1 + ... + c_n`` is even.
    """
    n = poly.degree
    length = (1 << n) - 1
    plain = LfsrStream(poly)
    flipped = LfsrStream(poly, offset=1, initial=[1 - b for b in plain.initial])
    return CyclicSequence(plain.symbols(length)), CyclicSequence(flipped.symbols(length))


def _run_rotation(s, bit, size, position):
    # rotate s so its first run of `size` copies of `bit` starts at `position`
    text = str(s)
    start = (text + text[: size - 1]).find(str(bit) * size)
    if start < 0 or start >= len(text):
        raise MissingRun(bit, size, s.longest_run(bit)[1])
    return s.rotate(start - position)


def primitive_cs(n, radius, poly=None):
    """Covering sequence of window ``n + 2R + 1`` and radius ``R`` from a sparse primitive
    polynomial.

    The maximal length sequence is opened so that its run of ``n - 1`` zeros starts at index
    ``2R + 1``, extended by its first ``n + 2R`` symbols and followed by ``2R + 2`` zeros; the
    complemented sequence gets the same treatment with ones. The two parts are concatenated.

    Args:
        n: polynomial degree
        radius: covering radius
        poly: feedback polynomial, found with :func:`find_sparse_primitive` when omitted

    Returns:
        CyclicSequence of length ``2^(n+1) + 2n + 8R + 2``

    Raises:
        ParameterError when the polynomial is missing, not primitive, of the wrong degree or
            not sparse enough
    """
    if poly is None:
        poly = find_sparse_primitive(n, radius)
        if poly is None:
            raise ParameterError(
                f"no sparse primitive polynomial of degree {n} for radius {radius}"
            )
    if poly.degree != n:
        raise ParameterError(f"{poly} has degree {poly.degree}, expected {n}")
    if any(poly.coefficient(i) for i in range(1, min(2 * radius + 2, n + 1))):
        raise ParameterError(f"{poly} needs c_1 .. c_{2 * radius + 1} to be zero")
    if not is_primitive(poly):
        raise ParameterError(f"{poly} is not primitive")

    width = n + 2 * radius + 1
    plain, flipped = primitive_pair(poly)
    parts = []
    for sequence, bit in ((plain, 0), (flipped, 1)):
        opened = str(_run_rotation(sequence, bit, n - 1, 2 * radius + 1))
        parts.append(opened + opened[: width - 1] + str(bit) * (2 * radius + 2))
    result = CyclicSequence("".join(parts))
    logger.info("(%d,%d) sequence of length %d from %s", width, radius, len(result), poly)
    return result


def hamming_code_words(k, poly=None):
    """All codewords of the cyclic Hamming code of length ``2^k - 1``.

    Bit ``i`` of each integer is coordinate ``i``; the code is spanned by the shifts of the
    generator polynomial.

    Raises:
        ParameterError when ``k < 2``
        ResourceLimitExceeded when ``k`` is above ``HAMMING_MAX_K``
    """
    if k < 2:
        raise ParameterError(f"Hamming codes need k >= 2, got {k}")
    if k > HAMMING_MAX_K:
        raise ResourceLimitExceeded("Hamming parameter k", k, HAMMING_MAX_K)
    poly = poly or default_primitive(k)
    if poly.degree != k:
        raise ParameterError(f"generator {poly} must have degree {k}")
    n = (1 << k) - 1
    words = np.zeros(1, dtype=np.uint64)
    for shift in range(n - k):
        words = np.concatenate([words, words ^ np.uint64(poly.value << shift)])
    return words


def hamming_csc(k, poly=None):
    """One representative per rotation class of the cyclic Hamming code of length ``2^k - 1``.

    Each representative is the least rotation of one period of the class. Together their
    windows are exactly the Hamming code, a perfect ``(2^k - 1, 1)`` covering code.

    Returns:
        :class:`~covseq.core.SequenceCode`, longest codewords first
    """
    n = (1 << k) - 1
    words = hamming_code_words(k, poly)
    mask = np.uint64((1 << n) - 1)
    one, top = np.uint64(1), np.uint64(n - 1)
    least = words.copy()
    rotated = words.copy()
    for _ in range(n - 1):
        rotated = ((rotated << one) | (rotated >> top)) & mask
        np.minimum(least, rotated, out=least)
    representatives = []
    for value in np.unique(least).tolist():
        text = "".join(str((value >> i) & 1) for i in range(n))
        representatives.append(CyclicSequence(text).periodic_representative().canonical_rotation())
    representatives.sort(key=lambda c: (-len(c), str(c)))
    logger.info("Hamming code of length %d: %d rotation classes", n, len(representatives))
    return SequenceCode(representatives, n, 1)


class SelfDualCode:
    """Codewords of the form ``[X, complement(X)]`` together with a perfect matching of them.

    Only the halves ``X`` are stored, as integers with the first symbol most significant.
    Paired halves differ in their last coordinate only.
    """

    def __init__(self, half_length, halves, pairing):
        self.half_length = half_length
        self.halves = np.asarray(halves, dtype=np.uint64)
        self.pairing = np.asarray(pairing, dtype=np.int64).reshape(-1, 2)
        if len(self.pairing) * 2 != len(self.halves):
            raise PairingError("pairing must cover every codeword exactly once")
        if len(np.unique(self.pairing)) != len(self.halves):
            raise PairingError("pairing is not a perfect matching")
        first, second = self.halves[self.pairing[:, 0]], self.halves[self.pairing[:, 1]]
        if np.any(first ^ second != np.uint64(1)):
            raise PairingError("paired halves must differ in the last coordinate only")

    @classmethod
    def from_strings(cls, codewords, pairing):
        codewords = [str(CyclicSequence(c)) for c in codewords]
        half = len(codewords[0]) // 2
        for word in codewords:
            complement = str(CyclicSequence(word[:half]).complement())
            if len(word) != 2 * half or complement != word[half:]:
                raise PairingError(f"{word} is not of the form [X, complement(X)]")
        return cls(half, [int(w[:half], 2) for w in codewords], pairing)

    def __len__(self):
        return len(self.halves)

    def __repr__(self):
        return f"<{type(self).__name__} n={self.half_length} codewords={len(self)}>"

    def codeword(self, index):
        half = format(int(self.halves[index]), f"0{self.half_length}b")
        return CyclicSequence(half) + CyclicSequence(half).complement()

    @cached_property
    def codewords(self):
        return tuple(self.codeword(i) for i in range(len(self)))

    def as_code(self, radius=1):
        """The codewords as a covering sequence code with window ``half_length``."""
        return SequenceCode(self.codewords, self.half_length, radius)


def selfdual_base():
    """The two self-dual codewords of length 16 whose windows cover all 8 bit words."""
    return SelfDualCode.from_strings(SELF_DUAL_BASE, [(0, 1)])


def even_words(n):
    """Even weight ``n`` bit words starting with a zero, in increasing order."""
    return [u for u in range(1 << (n - 1)) if not bin(u).count("1") & 1]


def selfdual_step(code):
    """Double the half length: every even weight word ``U`` starting with zero combines with
    every half ``X`` into the half ``[U, U + X]``.

    Pairs are inherited: for a fixed ``U`` the partners of ``X`` and ``X'`` stay partners.
    """
    n = code.half_length
    if n & (n - 1):
        raise ParameterError(f"half length must be a power of two, got {n}")
    if 2 * n > 32:
        raise ResourceLimitExceeded("self-dual half length", 2 * n, 32)
    prefixes = np.array(even_words(n), dtype=np.uint64)
    shift = np.uint64(n)
    halves = ((prefixes[:, None] << shift) | (prefixes[:, None] ^ code.halves[None, :])).ravel()
    offsets = np.arange(len(prefixes), dtype=np.int64)[:, None, None] * len(code)
    pairing = (offsets + code.pairing[None, :, :]).reshape(-1, 2)
    logger.info("self-dual step to half length %d: %d codewords", 2 * n, len(halves))
    return SelfDualCode(2 * n, halves, pairing)


def selfdual_code(target_n):
    """Self-dual code whose windows of width ``target_n`` (8, 16 or 32) cover the space."""
    if target_n not in (8, 16, 32):
        raise ParameterError(f"target window must be 8, 16 or 32, got {target_n}")
    code = selfdual_base()
    while code.half_length < target_n:
        code = selfdual_step(code)
    return code


def combine_pair(a, b):
    """Join two paired self-dual codewords ``[X X̄]`` and ``[X' X̄']`` into ``[X X̄ X' X̄']``.

    Raises:
        PairingError when the codewords are not paired self-dual words of one length
    """
    a, b = CyclicSequence(a), CyclicSequence(b)
    if len(a) != len(b) or len(a) % 2:
        raise PairingError(f"codewords of lengths {len(a)} and {len(b)} cannot be paired")
    half = len(a) // 2
    text_a, text_b = str(a), str(b)
    for text in (text_a, text_b):
        if str(CyclicSequence(text[:half]).complement()) != text[half:]:
            raise PairingError(f"{text} is not of the form [X, complement(X)]")
    if int(text_a[:half], 2) ^ int(text_b[:half], 2) != 1:
        raise PairingError("halves must differ in the last coordinate only")
    return a + b


def combine_selfdual(code):
    """Combine every pair of ``code`` into one sequence of twice the codeword length."""
    combined = [combine_pair(code.codeword(i), code.codeword(j)) for i, j in code.pairing.tolist()]
    return SequenceCode(combined, code.half_length, 1)


def interleave(a, b, n1, n2, r1, r2):
    """Interleave two covering sequences: ``a`` on the even positions, ``b`` on the odd ones.

    With an ``(n1, r1)`` sequence of length ``k1`` and an ``(n2, r2)`` sequence of coprime
    length ``k2``, where ``n1 = n2`` or ``n1 = n2 + 1``, the result is an
    ``(n1 + n2, r1 + r2)`` covering sequence of length ``2 * k1 * k2``.

    Raises:
        IncompatibleLengths when the lengths are not coprime
        ParameterError when the window widths do not fit
    """
    a, b = CyclicSequence(a), CyclicSequence(b)
    k1, k2 = len(a), len(b)
    if math.gcd(k1, k2) != 1:
        raise IncompatibleLengths(k1, k2)
    if n1 - n2 not in (0, 1):
        raise ParameterError(f"window widths need n1 = n2 or n1 = n2 + 1, got {n1} and {n2}")
    index = np.arange(k1 * k2)
    out = np.empty(2 * k1 * k2, dtype=np.uint8)
    out[0::2] = a.array[index % k1]
    out[1::2] = b.array[index % k2]
    logger.info(
        "interleaved lengths %d and %d into a (%d,%d) sequence of length %d",
        k1,
        k2,
        n1 + n2,
        r1 + r2,
        len(out),
    )
    return CyclicSequence.from_array(out)


def square_interleave_length(k):
    return k * (k + 1) if k % 2 == 0 else (k + 1) ** 2


def square_interleave(a, n, fill=0, shift=0):
    """Interleave a covering sequence with its own shifts.

    The seed is rotated so that its first run of ``n - 1`` symbols ``fill`` starts at index 0,
    then rotated left by ``shift``. Part ``i`` (``i = 1 .. ceil(k/2)``) is
    ``a_{i-1} a_0 a_i a_1 ... a_{i-2} a_{k-1}`` followed by ``a_{i-1}`` and ``fill``.

    Returns:
        CyclicSequence of length ``k(k+1)`` for even ``k`` and ``(k+1)^2`` for odd ``k``

    Raises:
        MissingRun when the seed has no run of ``n - 1`` symbols ``fill``
    """
    fill = int(fill)
    if fill not in (0, 1):
        raise ParameterError(f"fill must be 0 or 1, got {fill}")
    seed = _run_rotation(CyclicSequence(a), fill, n - 1, 0).rotate(shift)
    k = len(seed)
    symbols = seed.array
    index = np.arange(k)
    parts = []
    for i in range(1, (k + 1) // 2 + 1):
        part = np.empty(2 * k + 2, dtype=np.uint8)
        part[0 : 2 * k : 2] = symbols[(i - 1 + index) % k]
        part[1 : 2 * k : 2] = symbols
        part[2 * k] = symbols[(i - 1) % k]
        part[2 * k + 1] = fill
        parts.append(part)
    result = CyclicSequence.from_array(np.concatenate(parts))
    logger.info("square interleave of length %d into length %d", k, len(result))
    return result


SquareResult = namedtuple("SquareResult", ["sequence", "shift", "report"])


def aligned_square_interleave(a, n, radius, fill=0, max_shift=None, workers=None):
    """Square interleave, trying seed alignments ``shift = 0, 1, 2, ...`` until the result
    verifies as a ``(2n, 2R)`` covering sequence.

    Returns:
        :class:`SquareResult`; when no alignment verifies, the last attempt is returned with its
        failing report
    """
    a = CyclicSequence(a)
    max_shift = len(a) - 1 if max_shift is None else max_shift
    attempt = None
    for shift in range(max_shift + 1):
        sequence = square_interleave(a, n, fill, shift)
        report = is_covering_sequence(sequence, 2 * n, 2 * radius, workers=workers)
        attempt = SquareResult(sequence, shift, report)
        if report.is_covering:
            if shift:
                logger.warning("square interleave needed the seed shifted by %d", shift)
            return attempt
        logger.debug("shift %d leaves %d words uncovered", shift, report.uncovered_total)
    return attempt
