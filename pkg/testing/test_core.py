import itertools

import numpy as np
import pytest

from covseq.construct import debruijn_sequence
from covseq.core import ball_volume
from covseq.core import BinaryWord
from covseq.core import canonical_rotation
from covseq.core import complement
from covseq.core import CyclicSequence
from covseq.core import format_document
from covseq.core import format_symbols
from covseq.core import Gf2Poly
from covseq.core import hamming_distance
from covseq.core import Header
from covseq.core import minimal_period
from covseq.core import necklace
from covseq.core import read_array
from covseq.core import read_code
from covseq.core import read_sequence
from covseq.core import rotate
from covseq.core import SequenceCode
from covseq.core import TorusArray
from covseq.core import windows
from covseq.exceptions import DimensionError
from covseq.exceptions import InvalidRadius
from covseq.exceptions import ParameterError
from covseq.exceptions import SequenceFormatError
from covseq.exceptions import UnsupportedWindowWidth


@pytest.mark.parametrize(
    "shift, expected",
    [(0, "000100111011"), (1, "001001110110"), (3, "100111011000"), (12, "000100111011")],
)
def test_rotate(shift, expected):
    assert str(rotate("000100111011", shift)) == expected


def test_rotate_negative_shift_goes_right():
    s = CyclicSequence("000100111011")
    assert s.rotate(-1) == s.rotate(11)


def test_complement():
    assert str(complement("00011011")) == "11100100"
    assert str(complement("0")) == "1"
    s = CyclicSequence("0001101011100101")
    assert s.complement().complement() == s


@pytest.mark.parametrize(
    "text, period", [("1000010000", 5), ("1010101010", 2), ("0110", 4), ("1111", 1)]
)
def test_minimal_period(text, period):
    assert minimal_period(text) == period


def test_periodic_representative():
    assert str(CyclicSequence("1000010000").periodic_representative()) == "10000"
    assert str(CyclicSequence("1010101010").periodic_representative()) == "10"


def test_canonical_rotation_and_necklace():
    assert str(canonical_rotation("1000010000")) == "0000100001"
    assert str(necklace("1000010000")) == "00001"
    assert str(necklace("0110")) == "0011"
    assert necklace("011") == necklace("101") == necklace("110")


def test_windows():
    assert [str(w) for w in windows("10", 2)] == ["10", "01"]
    assert [str(w) for w in windows("10000", 9)] == [
        "100001000",
        "000010000",
        "000100001",
        "001000010",
        "010000100",
    ]


def _random_bits(rng, size):
    return "".join(map(str, rng.integers(0, 2, size=size)))


def test_windows_of_a_rotation_are_the_same_multiset(rng_seed):
    rng = np.random.default_rng(rng_seed)
    for _ in range(50):
        s = CyclicSequence(_random_bits(rng, int(rng.integers(1, 40))))
        n = int(rng.integers(1, 12))
        shift = int(rng.integers(0, 2 * len(s)))
        original = sorted(s.window_values(n).tolist())
        assert sorted(s.rotate(shift).window_values(n).tolist()) == original
        assert len(windows(s, n)) == len(s)


def test_window_set_follows_the_minimal_period(rng_seed):
    rng = np.random.default_rng(rng_seed)
    for _ in range(50):
        period = _random_bits(rng, int(rng.integers(1, 9)))
        s = CyclicSequence(period * int(rng.integers(1, 6)))
        n = int(rng.integers(1, 14))
        representative = s.periodic_representative()
        assert len(representative) == minimal_period(s) <= len(period)
        found = set(s.window_values(n).tolist())
        assert found == set(representative.window_values(n).tolist())
        assert len(found) <= minimal_period(s)


def test_debruijn_windows_distinct():
    values = debruijn_sequence(9).window_values(9)
    assert len(values) == 512
    assert len(np.unique(values)) == 512


def test_window_values_most_significant_first():
    values = CyclicSequence("000100111011").window_values(6)
    assert values[0] == 0b000100
    assert values[11] == 0b100010


def test_window_width_limit():
    with pytest.raises(UnsupportedWindowWidth):
        CyclicSequence("01").window_values(33)
    with pytest.raises(UnsupportedWindowWidth):
        CyclicSequence("01").window_values(0)


def test_hamming_distance():
    assert hamming_distance("00011011", "00011010") == 1
    w = BinaryWord.from_string("00011011")
    assert hamming_distance(w, w) == 0
    assert hamming_distance(w, w.complement()) == 8
    with pytest.raises(DimensionError):
        hamming_distance("01", "011")


@pytest.mark.parametrize("n, radius, volume", [(8, 1, 9), (20, 2, 211), (7, 0, 1), (3, 3, 8)])
def test_ball_volume(n, radius, volume):
    assert ball_volume(2, n, radius) == volume


@pytest.mark.parametrize("n", range(1, 13))
def test_ball_volume_counts_words(n):
    weights = np.array([bin(word).count("1") for word in range(1 << n)])
    for radius in range(n + 1):
        assert ball_volume(2, n, radius) == int(np.count_nonzero(weights <= radius))


@pytest.mark.parametrize("q, n", [(3, 4), (4, 3), (5, 2)])
def test_ball_volume_over_larger_alphabets(q, n):
    words = itertools.product(range(q), repeat=n)
    distances = [sum(1 for symbol in word if symbol) for word in words]
    for radius in range(n + 1):
        assert ball_volume(q, n, radius) == sum(1 for d in distances if d <= radius)


def test_ball_volume_errors():
    with pytest.raises(InvalidRadius):
        ball_volume(2, 4, 5)
    with pytest.raises(ParameterError):
        ball_volume(1, 4, 1)


def test_binary_word():
    w = BinaryWord.from_string("0101")
    assert w.bits == 5
    assert w.length == 4
    assert [w.bit(i) for i in range(4)] == [0, 1, 0, 1]
    assert w.weight == 2
    assert str(w.complement()) == "1010"
    with pytest.raises(ValueError):
        BinaryWord(16, 4)


def test_sequence_parsing():
    assert str(CyclicSequence.from_string(" 0101\n 11")) == "010111"
    assert str(CyclicSequence.from_string("01\\\\\\1", strict=False)) == "011"
    with pytest.raises(SequenceFormatError):
        CyclicSequence.from_string("01a")
    with pytest.raises(SequenceFormatError):
        CyclicSequence("")
    assert CyclicSequence([1, 0, 1]) == CyclicSequence("101")


def test_sequence_protocol():
    s = CyclicSequence("0011")
    assert len(s) == s.length == 4
    assert s[4] == s[0] == 0
    assert s[-1] == 1
    assert list(s) == [0, 0, 1, 1]
    assert str(s + CyclicSequence("1")) == "00111"
    assert s.segment(2, 7) == "1100110"
    assert s.weight() == 2
    assert {s, CyclicSequence("0011")} == {s}


def test_longest_run():
    s = CyclicSequence("0011100")
    assert s.longest_run(1) == (2, 3)
    assert s.longest_run(0) == (5, 4)
    assert CyclicSequence("111").longest_run(1) == (0, 3)
    assert CyclicSequence("111").longest_run(0) == (0, 0)


def test_torus_array():
    array = TorusArray(["01", "10"])
    assert array.shape == (2, 2)
    assert array.area == 4
    assert array.window_values(2, 2)[0] == 0b0110
    assert str(array.row(3)) == "10"
    assert array.row_strings() == ["01", "10"]
    with pytest.raises(DimensionError):
        TorusArray(["01", "1"])


def test_sequence_code():
    code = SequenceCode(["0001", "01"], 2, 0)
    assert len(code) == 2
    assert code.total_length == 6
    assert code.uniform_length is None
    assert sorted(code.window_set().tolist()) == [0, 1, 2]
    with pytest.raises(InvalidRadius):
        SequenceCode(["01"], 2, 3)


def test_polynomial():
    poly = Gf2Poly.parse("x^7+x^6+1")
    assert poly.degree == 7
    assert poly.exponents() == [7, 6, 0]
    assert str(poly) == "x^7+x^6+1"
    assert Gf2Poly.parse("10000011") == poly
    assert poly.coefficients.to01() == "10000011"
    assert str(poly.reciprocal()) == "x^7+x+1"
    assert str(Gf2Poly.parse("x^4 + x + 1")) == "x^4+x+1"
    with pytest.raises(SequenceFormatError):
        Gf2Poly.parse("x^4+2x+1")


def test_text_round_trip():
    header = Header(kind="cs", n=6, r=1, length=12)
    text = format_document(header, ["000100", "111011"])
    assert text.splitlines()[0] == "# kind=cs n=6 r=1 len=12"
    read_header, s = read_sequence(text)
    assert read_header == header
    assert str(s) == "000100111011"

    _, code = read_code("# kind=csc n=9 r=1\n1000010000 5\n0001001101\n")
    assert [str(c) for c in code] == ["1000010000", "0001001101"]

    header, array = read_array("# kind=c2ds m=2 n=6 r=2 rows=2 cols=3\n010\n101\n")
    assert (header.m, header.rows, header.cols) == (2, 2, 3)
    assert array.shape == (2, 3)


def test_document_without_header():
    header, s = read_sequence("0101\n")
    assert header is None
    assert len(s) == 4


def test_header_numbers_must_be_integers():
    with pytest.raises(SequenceFormatError, match="n must be a non negative integer"):
        read_sequence("# kind=cs n=abc r=1\n0101\n")
    with pytest.raises(SequenceFormatError):
        read_array("# kind=c2ds m=2 n=6 r=-1\n01\n")


def test_symbols_beyond_binary():
    header = Header(kind="cs", n=2, r=0, length=9, q=3)
    assert format_document(header, [format_symbols((0, 0, 1, 0, 2, 1, 1, 2, 2), 3)]) == (
        "# kind=cs n=2 r=0 len=9 q=3\n001021122\n"
    )
    assert format_symbols((0, 11, 10), 12) == "0,11,10"
    assert read_sequence("# kind=cs n=6 r=1 len=12\n000100111011\n")[0].q is None
