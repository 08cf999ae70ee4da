"""Bit-packed cyclic sequences, words and torus arrays.

Conventions used throughout the package:

* A window of width ``n`` starting at position ``i`` of a sequence ``s`` is the word
  ``s[i] s[i+1] ... s[i+n-1]`` (indices modulo the length). As an integer, ``s[i]`` is the most
  significant bit, so the printed string reads the same as the number in binary.
* Sequences compare positionally. Two rotations of the same necklace are different sequences;
  use :func:`canonical_rotation` to compare up to rotation.
"""
import logging
import math
import re
from collections import namedtuple

import numpy as np
from bitarray import bitarray
from bitarray import frozenbitarray
from cached_property import cached_property

from .exceptions import DimensionError
from .exceptions import InvalidRadius
from .exceptions import ParameterError
from .exceptions import SequenceFormatError
from .exceptions import UnsupportedWindowWidth

logger = logging.getLogger(__name__)

MAX_WORD_BITS = 32

_NON_BINARY = re.compile(r"[^01]")
_WHITESPACE = re.compile(r"\s+")


def _check_width(n):
    if not 1 <= n <= MAX_WORD_BITS:
        raise UnsupportedWindowWidth(n, MAX_WORD_BITS)


def _parse_bits(text, strict=True):
    text = _WHITESPACE.sub("", text)
    if not strict:
        text = _NON_BINARY.sub("", text)
    elif _NON_BINARY.search(text):
        raise SequenceFormatError(text)
    if not text:
        raise SequenceFormatError(text, "no bits found")
    return text


def _concat(*parts):
    joined = bitarray()
    for part in parts:
        joined.extend(part)
    return frozenbitarray(joined)


def _least_rotation(text):
    # Duval style scan, linear in the length
    doubled = text + text
    size = len(doubled)
    i = answer = 0
    while i < size // 2:
        answer = i
        j, k = i + 1, i
        while j < size and doubled[k] <= doubled[j]:
            k = i if doubled[k] < doubled[j] else k + 1
            j += 1
        while i <= k:
            i += j - k
    return answer


class BinaryWord(namedtuple("BinaryWord", ["bits", "length"])):
    """A binary word of fixed length held in an integer.

    Position 0 of the word is the most significant bit of ``bits``.
    """

    __slots__ = ()

    def __new__(cls, bits, length):
        _check_width(length)
        bits = int(bits)
        if not 0 <= bits < (1 << length):
            raise ValueError(f"{bits} does not fit in {length} bits")
        return super().__new__(cls, bits, int(length))

    @classmethod
    def from_string(cls, text):
        text = _parse_bits(text)
        return cls(int(text, 2), len(text))

    def bit(self, position):
        return (self.bits >> (self.length - 1 - position)) & 1

    @property
    def weight(self):
        return bin(self.bits).count("1")

    def complement(self):
        return BinaryWord(self.bits ^ ((1 << self.length) - 1), self.length)

    def __str__(self):
        return format(self.bits, f"0{self.length}b")


class CyclicSequence:
    """An immutable cyclic binary sequence.

    Args:
        bits: a string of ``0``/``1`` (whitespace ignored), a bitarray, another
            CyclicSequence or any iterable of 0/1 integers.

    Indexing with an integer wraps around the length.

    .. code-block:: python

        s = CyclicSequence("000100111011")
        s.rotate(1)          # CyclicSequence('001001110110')
        s[12] == s[0]
        s.window_values(6)   # numpy vector of the twelve 6-bit windows
    """

    def __init__(self, bits):
        if isinstance(bits, CyclicSequence):
            bits = bits.bits
        elif isinstance(bits, str):
            bits = bitarray(_parse_bits(bits))
        elif not isinstance(bits, bitarray):
            bits = bitarray([int(b) & 1 for b in bits])
        if not len(bits):
            raise SequenceFormatError("", "a cyclic sequence needs at least one bit")
        self.bits = frozenbitarray(bits)

    @classmethod
    def from_string(cls, text, strict=True):
        """Read a sequence from text.

        Args:
            text: the bits, whitespace is always ignored
            strict: when False, every character other than ``0`` and ``1`` is dropped, which
                tolerates typesetting debris around printed sequences
        """
        return cls(bitarray(_parse_bits(text, strict=strict)))

    @classmethod
    def from_array(cls, values):
        return cls(bitarray(np.asarray(values, dtype=np.uint8).tolist()))

    def __len__(self):
        return len(self.bits)

    @property
    def length(self):
        return len(self.bits)

    def __getitem__(self, index):
        return self.bits[index % len(self.bits)]

    def __iter__(self):
        return iter(self.bits.tolist())

    def __eq__(self, other):
        if not isinstance(other, CyclicSequence):
            return NotImplemented
        return self.bits == other.bits

    def __hash__(self):
        return hash(self.bits)

    def __add__(self, other):
        """Concatenate the linear representations of two sequences."""
        if not isinstance(other, CyclicSequence):
            return NotImplemented
        return CyclicSequence(_concat(self.bits, other.bits))

    def __str__(self):
        return self.bits.to01()

    def __repr__(self):
        if len(self) <= 64:
            return f"{type(self).__name__}({str(self)!r})"
        return f"<{type(self).__name__} length={len(self)} starts={str(self)[:32]!r}>"

    @cached_property
    def array(self):
        """The bits as a read-only numpy ``uint8`` vector."""
        return np.frombuffer(self.bits.unpack(), dtype=np.uint8)

    def segment(self, start, length):
        """The ``length`` symbols starting at ``start``, wrapping around as often as needed."""
        k = len(self)
        start %= k
        reps = -(-(start + length) // k)
        return (self.bits.to01() * reps)[start : start + length]

    def rotate(self, shift):
        shift %= len(self)
        if not shift:
            return self
        return CyclicSequence(_concat(self.bits[shift:], self.bits[:shift]))

    def complement(self):
        flipped = bitarray(self.bits)
        flipped.invert()
        return CyclicSequence(flipped)

    @cached_property
    def minimal_period(self):
        k = len(self)
        for d in range(1, k + 1):
            if k % d == 0 and _concat(self.bits[d:], self.bits[:d]) == self.bits:
                return d
        return k

    def periodic_representative(self):
        period = self.minimal_period
        if period == len(self):
            return self
        return CyclicSequence(self.bits[:period])

    def canonical_rotation(self):
        return self.rotate(_least_rotation(self.bits.to01()))

    def weight(self):
        return self.bits.count(1)

    def window_values(self, n):
        """All ``len(self)`` cyclic windows of width ``n`` as a ``uint64`` vector.

        Raises:
            UnsupportedWindowWidth when ``n`` is outside 1..32
        """
        _check_width(n)
        k = len(self)
        extended = np.resize(self.array, k + n - 1).astype(np.uint64)
        values = np.zeros(k, dtype=np.uint64)
        one = np.uint64(1)
        for j in range(n):
            values = (values << one) | extended[j : j + k]
        return values

    def windows(self, n):
        return [BinaryWord(int(value), n) for value in self.window_values(n)]

    def longest_run(self, bit):
        """Start and length of the longest cyclic run of ``bit``.

        Ties go to the run met first when scanning from the first symbol that is not ``bit``.
        A constant sequence made of ``bit`` reports ``(0, len(self))``.
        """
        text = self.bits.to01()
        symbol = str(int(bit))
        if symbol not in text:
            return 0, 0
        k = len(text)
        if text.count(symbol) == k:
            return 0, k
        offset = text.index("1" if symbol == "0" else "0")
        scanned = text[offset:] + text[:offset]
        best = (0, 0)
        for match in re.finditer(f"{symbol}+", scanned):
            size = match.end() - match.start()
            if size > best[1]:
                best = ((match.start() + offset) % k, size)
        return best


class TorusArray:
    """A doubly periodic ``rows`` x ``cols`` binary array.

    Args:
        grid: a sequence of equal length rows (strings, CyclicSequences or bit lists) or a
            two dimensional numpy array
    """

    def __init__(self, grid):
        if isinstance(grid, np.ndarray):
            array = np.array(grid, dtype=np.uint8)
        else:
            rows = [
                CyclicSequence(row).array if isinstance(row, (str, CyclicSequence)) else row
                for row in grid
            ]
            widths = {len(row) for row in rows}
            if len(widths) > 1:
                raise DimensionError(min(widths), max(widths))
            array = np.array(rows, dtype=np.uint8)
        if array.ndim != 2 or not array.size:
            raise SequenceFormatError(str(grid)[:40], "an array needs at least one row and column")
        if array.max() > 1:
            raise SequenceFormatError(str(grid)[:40])
        array.setflags(write=False)
        self.grid = array

    @property
    def rows(self):
        return self.grid.shape[0]

    @property
    def cols(self):
        return self.grid.shape[1]

    @property
    def shape(self):
        return self.grid.shape

    @property
    def area(self):
        return self.grid.size

    def row(self, index):
        return CyclicSequence.from_array(self.grid[index % self.rows])

    def row_strings(self):
        return ["".join(map(str, row)) for row in self.grid.tolist()]

    def __eq__(self, other):
        if not isinstance(other, TorusArray):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.grid, other.grid))

    def __hash__(self):
        return hash((self.shape, self.grid.tobytes()))

    def __str__(self):
        return "\n".join(self.row_strings())

    def __repr__(self):
        return f"<{type(self).__name__} {self.rows}x{self.cols}>"

    def window_values(self, m, n):
        """Every toroidal ``m`` x ``n`` window flattened row by row into an ``m*n`` bit word.

        The window whose top left corner is ``(r, c)`` is at index ``r * cols + c``.
        """
        _check_width(m * n)
        grid = self.grid.astype(np.uint64)
        values = np.zeros(self.shape, dtype=np.uint64)
        one = np.uint64(1)
        for di in range(m):
            shifted_rows = np.roll(grid, -di, axis=0)
            for dj in range(n):
                values = (values << one) | np.roll(shifted_rows, -dj, axis=1)
        return values.ravel()


class SequenceCode:
    """A list of cyclic codewords whose windows together are meant to cover the space.

    Codewords may have different lengths; :attr:`uniform_length` is set when they do not.
    """

    def __init__(self, codewords, n, radius):
        _check_width(n)
        if not 0 <= radius <= n:
            raise InvalidRadius(n, radius)
        self.codewords = tuple(CyclicSequence(c) for c in codewords)
        self.n = n
        self.radius = radius

    def __len__(self):
        return len(self.codewords)

    def __iter__(self):
        return iter(self.codewords)

    def __repr__(self):
        return f"<{type(self).__name__} n={self.n} r={self.radius} codewords={len(self)}>"

    @property
    def total_length(self):
        return sum(len(c) for c in self.codewords)

    @property
    def uniform_length(self):
        lengths = {len(c) for c in self.codewords}
        return lengths.pop() if len(lengths) == 1 else None

    def window_values(self):
        if not self.codewords:
            return np.zeros(0, dtype=np.uint64)
        return np.concatenate([c.window_values(self.n) for c in self.codewords])

    def window_set(self):
        return np.unique(self.window_values())


class Gf2Poly:
    """A polynomial over GF(2) held as an integer, bit ``i`` being the coefficient of ``x^i``.

    .. code-block:: python

        Gf2Poly.parse("x^7+x^6+1")
        Gf2Poly.parse("10000011")  # coefficients c_0 first
    """

    _TERM = re.compile(r"^(?:1|x(?:\^(\d+))?)$")

    def __init__(self, value):
        value = int(value)
        if value < 0:
            raise ParameterError("polynomial coefficients must be a non negative integer")
        self.value = value

    @classmethod
    def from_exponents(cls, *exponents):
        value = 0
        for e in exponents:
            value ^= 1 << e
        return cls(value)

    @classmethod
    def from_coefficients(cls, coefficients):
        """Coefficients listed from ``c_0`` upwards, as a string or a sequence of bits."""
        if isinstance(coefficients, str):
            coefficients = _parse_bits(coefficients)
        return cls(sum(int(c) << i for i, c in enumerate(coefficients)))

    @classmethod
    def parse(cls, text):
        text = _WHITESPACE.sub("", text)
        if "x" not in text:
            return cls.from_coefficients(text)
        exponents = []
        for term in text.split("+"):
            match = cls._TERM.match(term)
            if not match:
                raise SequenceFormatError(text, f"bad polynomial term {term!r}")
            if term == "1":
                exponents.append(0)
            else:
                exponents.append(int(match.group(1) or 1))
        return cls.from_exponents(*exponents)

    @property
    def degree(self):
        return self.value.bit_length() - 1

    def coefficient(self, i):
        return (self.value >> i) & 1

    @property
    def coefficients(self):
        return frozenbitarray([self.coefficient(i) for i in range(self.degree + 1)])

    def exponents(self):
        return [i for i in range(self.degree, -1, -1) if self.coefficient(i)]

    def reciprocal(self):
        n = self.degree
        return Gf2Poly.from_exponents(*(n - e for e in self.exponents()))

    def __eq__(self, other):
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        terms = []
        for e in self.exponents():
            terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return "+".join(terms) or "0"

    def __repr__(self):
        return f"Gf2Poly({str(self)!r})"


def rotate(s, j):
    return CyclicSequence(s).rotate(j)


def complement(s):
    return CyclicSequence(s).complement()


def minimal_period(s):
    return CyclicSequence(s).minimal_period


def canonical_rotation(s):
    return CyclicSequence(s).canonical_rotation()


def necklace(s):
    """Canonical rotation of the minimal period representative, the key of a rotation class."""
    return CyclicSequence(s).periodic_representative().canonical_rotation()


def windows(s, n):
    return CyclicSequence(s).windows(n)


def window_values(s, n):
    return CyclicSequence(s).window_values(n)


def hamming_distance(a, b):
    """Number of positions where two words differ.

    Args:
        a: a :class:`BinaryWord` or its string form
        b: a :class:`BinaryWord` or its string form

    Raises:
        DimensionError when the words differ in length
    """
    if isinstance(a, str):
        a = BinaryWord.from_string(a)
    if isinstance(b, str):
        b = BinaryWord.from_string(b)
    if a.length != b.length:
        raise DimensionError(a.length, b.length)
    return bin(a.bits ^ b.bits).count("1")


def ball_volume(q, n, radius):
    """Number of words over an alphabet of size ``q`` within distance ``radius`` of a word."""
    if q < 2:
        raise ParameterError(f"alphabet size must be at least 2, got {q}")
    if not 0 <= radius <= n:
        raise InvalidRadius(n, radius)
    return sum(math.comb(n, i) * (q - 1) ** i for i in range(radius + 1))


Header = namedtuple("Header", ["kind", "n", "r", "m", "length", "rows", "cols", "q"])
Header.__new__.__defaults__ = (None,) * len(Header._fields)

_HEADER_KEYS = {"kind": "kind", "n": "n", "r": "r", "m": "m", "len": "length"}
_HEADER_KEYS.update({"rows": "rows", "cols": "cols", "q": "q"})


def format_symbols(symbols, q=2):
    """Write symbols over ``0..q-1``: digits run together up to ``q = 10``, above that the
    values are written in decimal and separated by commas."""
    if q <= 10:
        return "".join(str(symbol) for symbol in symbols)
    return ",".join(str(symbol) for symbol in symbols)


def format_header(header):
    """Render a header as ``# kind=cs n=16 r=1 len=4462``; unset fields are left out."""
    parts = []
    for key, field in _HEADER_KEYS.items():
        value = getattr(header, field)
        if value is not None:
            parts.append(f"{key}={value}")
    return "# " + " ".join(parts)


def parse_header(line):
    fields = {}
    for token in line.lstrip("#").split():
        key, sep, value = token.partition("=")
        if sep and key in _HEADER_KEYS:
            field = _HEADER_KEYS[key]
            if field == "kind":
                fields[field] = value
            elif value.isascii() and value.isdigit():
                fields[field] = int(value)
            else:
                raise SequenceFormatError(line, f"{key} must be a non negative integer")
    return Header(**fields) if "kind" in fields else None


def read_document(text):
    """Split text into its first ``kind=`` header (or None) and its data lines."""
    header = None
    lines = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            if header is None:
                header = parse_header(stripped)
            continue
        lines.append(stripped)
    return header, lines


def read_sequence(text, strict=True):
    """Read a sequence document; data lines are joined, so wrapped sequences are accepted."""
    header, lines = read_document(text)
    return header, CyclicSequence.from_string("".join(lines), strict=strict)


def read_code(text):
    header, lines = read_document(text)
    return header, [CyclicSequence(line.split()[0]) for line in lines]


def read_array(text):
    header, lines = read_document(text)
    return header, TorusArray(lines)


def format_document(header, lines):
    body = [format_header(header)] if header is not None else []
    body.extend(str(line) for line in lines)
    return "\n".join(body) + "\n"
