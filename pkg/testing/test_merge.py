import numpy as np
import pytest

from covseq.construct import combine_selfdual
from covseq.construct import hamming_csc
from covseq.construct import selfdual_code
from covseq.core import CyclicSequence
from covseq.core import SequenceCode
from covseq.exceptions import EmptyInput
from covseq.exceptions import ParameterError
from covseq.merge import acyclic_extension
from covseq.merge import greedy_merge
from covseq.merge import join_with_overlaps
from covseq.merge import max_overlap
from covseq.merge import merge_code
from covseq.merge import OverlapGraph
from covseq.merge import reduce_periodic
from covseq.verify import is_covering_sequence


def contains_cyclically(sequence, text):
    doubled = str(sequence) * (len(text) // len(sequence) + 2)
    return text in doubled


def test_reduce_periodic():
    code = SequenceCode(["1000010000", "1010101010", "0001001101"], 9, 1)
    reduced = reduce_periodic(code)
    assert [str(c) for c in reduced] == ["10000", "10", "0001001101"]
    assert reduced.window_set().tolist() == code.window_set().tolist()


def test_acyclic_extension():
    assert acyclic_extension("0011", 3) == "001100"
    assert acyclic_extension("0011", 3, eps=1) == "0011001"
    assert acyclic_extension("01", 5) == "010101"
    with pytest.raises(ParameterError):
        acyclic_extension("0011", 3, eps=-1)


def test_max_overlap():
    assert max_overlap("00110", "1100") == 3
    assert max_overlap("0011", "1100") == 2
    assert max_overlap("0011", "1100", cap=1) == 1
    assert max_overlap("000", "111") == 0
    with pytest.raises(ParameterError):
        max_overlap("0011", "1100", cap=4)


def test_overlap_graph():
    graph = OverlapGraph(["0011", "1100", "0110"])
    assert len(graph) == 3
    assert graph.overlap(0, 1) == 2
    assert graph.cycle_overlaps() == [2, 1, 1]
    matrix = graph.matrix()
    assert matrix.shape == (3, 3)
    assert matrix.diagonal().tolist() == [0, 0, 0]
    assert OverlapGraph(["0011", "1100"], cap=1).overlap(0, 1) == 1


def test_join_with_overlaps():
    assert str(join_with_overlaps(["0011", "1100"], [2, 2])) == "0011"
    assert str(join_with_overlaps(["0011", "1100"], [0, 0])) == "00111100"
    with pytest.raises(ParameterError):
        join_with_overlaps(["0011", "1100"], [3, 2])
    with pytest.raises(ParameterError):
        join_with_overlaps(["0011", "1100"], [2])
    with pytest.raises(EmptyInput):
        join_with_overlaps([], [])


def test_merge_small_code(entry):
    code = entry("csc-9-1-8").code
    result = merge_code(code)
    assert result.length == 89
    assert result.total_bits == 131
    assert result.total_overlap == 42
    assert result.baseline - result.total_overlap == result.length
    assert result.sequence == join_with_overlaps(result.nodes, result.overlaps)
    assert all(contains_cyclically(result.sequence, node) for node in result.nodes)
    assert is_covering_sequence(result.sequence, 9, 1).is_covering


def test_merge_is_deterministic(entry):
    code = entry("csc-9-1-8").code
    assert greedy_merge(code) == greedy_merge(code)


def test_merge_single_codeword():
    result = merge_code(SequenceCode(["0001"], 3, 0))
    assert str(result.sequence) == "0001"
    assert result.nodes == ("000100",)
    assert result.overlaps == (2,)


def test_repeated_rotations_are_dropped():
    assert str(greedy_merge(SequenceCode(["0011", "0110"], 3, 1))) == "0011"


def test_merge_empty_code():
    with pytest.raises(EmptyInput):
        merge_code(SequenceCode([], 3, 1))


@pytest.mark.parametrize("entry_id", ["csc-10-1-175", "csc-11-2-111", "csc-13-3-93"])
def test_published_codes_merge_into_covering_sequences(entry, entry_id):
    published = entry(entry_id)
    s = greedy_merge(published.code)
    assert is_covering_sequence(s, published.n, published.radius).is_covering


def test_merge_hamming_code():
    code = hamming_csc(4)
    s = greedy_merge(code)
    assert len(s) == 3112
    assert len(s) < 2 ** 12
    assert is_covering_sequence(s, 15, 1).is_covering


def test_merge_selfdual_code():
    combined = combine_selfdual(selfdual_code(16))
    s = greedy_merge(combined)
    assert len(s) == 4483
    assert len(s) <= 5056 < 1.25 * 4096
    assert is_covering_sequence(CyclicSequence(s), 16, 1).is_covering


def test_merge_keeps_every_window_of_random_codes(rng_seed):
    rng = np.random.default_rng(rng_seed)
    for _ in range(100):
        n = int(rng.integers(2, 9))
        codewords = [
            "".join(map(str, rng.integers(0, 2, size=int(rng.integers(1, 13)))))
            for _ in range(int(rng.integers(1, 9)))
        ]
        code = SequenceCode(codewords, n, 1)
        result = merge_code(code)
        assert result.sequence == join_with_overlaps(result.nodes, result.overlaps)
        merged = set(result.sequence.window_values(n).tolist())
        assert set(code.window_set().tolist()) <= merged, (n, codewords)
