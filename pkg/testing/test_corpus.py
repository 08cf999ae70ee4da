import pytest

from covseq.corpus import BOUNDS
from covseq.corpus import bounds_rows
from covseq.corpus import check_entry
from covseq.corpus import CHECKSUMS
from covseq.corpus import get_entry
from covseq.corpus import interleave_recipes
from covseq.corpus import LOCAL_SEARCH
from covseq.corpus import realign_square
from covseq.corpus import table_bounds
from covseq.corpus import verify_corpus
from covseq.exceptions import CorpusEntryNotFound
from covseq.exceptions import ParameterError
from covseq.utils import BoundSource
from covseq.verify import is_covering_sequence
from covseq.verify import sphere_covering_bound


def test_every_entry_has_a_checksum(entries):
    assert sorted(entry.id for entry in entries) == sorted(CHECKSUMS)
    assert len({entry.id for entry in entries}) == len(entries)


def test_entry_lookup():
    entry = get_entry("cs-16-1-4462")
    assert entry.kind == "cs"
    assert (entry.n, entry.radius) == (16, 1)
    assert entry.actual_length == entry.claimed_length == 4462
    assert entry.header().length == 4462
    assert entry.document().startswith("# kind=cs n=16 r=1 len=4462\n")
    with pytest.raises(ParameterError):
        entry.array
    with pytest.raises(CorpusEntryNotFound):
        get_entry("cs-3-1-2")


def test_code_and_array_entries():
    code = get_entry("csc-9-1-8")
    assert code.m == 10
    assert len(code.code) == 8
    with pytest.raises(ParameterError):
        code.sequence
    array = get_entry("c2ds-2x6-2-13x12")
    assert array.array.shape == (13, 12)
    assert array.claimed_length == 156
    assert array.header().rows == 13


def test_describe():
    line = get_entry("cs-9-1-102").describe()
    assert line.startswith("cs-9-1-102")
    assert line.endswith("(eight consecutive ones)")


def test_merged_tables_add_up(entries):
    for entry in entries:
        if entry.table:
            total = sum(len(row) for row, _ in entry.table)
            overlap = sum(t for _, t in entry.table)
            assert (total, overlap) == entry.totals, entry.id
            assert total - overlap == entry.claimed_length, entry.id


@pytest.mark.parametrize(
    "entry_id, length, totals",
    [
        ("cs-10-1-175", 175, (260, 85)),
        ("cs-10-1-177", 177, (260, 83)),
        ("cs-11-1-283", 283, (420, 137)),
        ("cs-11-2-111", 111, (150, 39)),
        ("cs-12-2-161", 161, (216, 55)),
        ("cs-13-2-292", 292, (400, 108)),
        ("cs-13-3-93", 93, (125, 32)),
        ("cs-14-3-239", 239, (280, 41)),
        ("cs-15-1-3516", 3516, (4064, 548)),
        ("cs-16-1-4462", 4462, (5056, 594)),
        ("cs-9-1-106", 106, (144, 38)),
        ("cs-9-1-93", 93, (106, 13)),
    ],
)
def test_printed_figures(entry_id, length, totals):
    entry = get_entry(entry_id)
    assert entry.claimed_length == length
    assert entry.totals == totals
    assert len(entry.sequence) == length


def test_shortened_payload_fails_its_printed_length():
    entry = get_entry("cs-10-1-175")
    shortened = entry._replace(payload=(entry.payload[0][:-1],))
    checks = {check.name: check for check in check_entry(shortened)}
    assert not checks["length"].passed
    assert checks["length"].detail == "174 (claimed 175)"
    assert not checks["checksum"].passed
    assert not checks["join"].passed


def test_wrong_printed_totals_fail():
    entry = get_entry("cs-12-2-161")
    checks = {check.name: check for check in check_entry(entry._replace(totals=(216, 54)))}
    assert not checks["totals"].passed
    checks = {check.name: check for check in check_entry(entry)}
    assert checks["totals"].passed
    assert checks["totals"].detail == "printed 216 - 55 = 161, table 216 - 55"


def test_verify_single_entries():
    report = verify_corpus(["cs-8-1-32", "csc-11-2-111", "c2ds-2x6-2-13x12"])
    assert report.passed
    names = {(check.entry_id, check.name) for check in report.checks}
    assert ("cs-8-1-32", "downgrade") in names
    assert ("csc-11-2-111", "coverage") in names
    with pytest.raises(CorpusEntryNotFound):
        verify_corpus(["nothing"])


def test_verify_whole_corpus():
    report = verify_corpus()
    assert report.passed, [str(check) for check in report.failures()]
    names = {check.entry_id for check in report.checks}
    assert "hamming-15" in names
    assert "bounds-16-1" in names


def test_nine_one_variants(entry):
    assert entry("cs-9-1-102").sequence.longest_run(1)[1] == 8
    for entry_id in ("cs-9-1-93", "cs-9-1-102", "cs-9-1-106"):
        assert is_covering_sequence(entry(entry_id).sequence, 9, 1).is_covering


def test_bounds_table():
    assert str(table_bounds(9, 1)) == "62-93 a"
    assert str(table_bounds(9, 2)) == "20 b"
    assert table_bounds(9, 2).is_exact
    assert table_bounds(16, 1).source is BoundSource.SELF_DUAL
    assert table_bounds(19, 1).upper == 176170
    assert table_bounds(8, 1) is None
    assert len(bounds_rows()) == 36
    assert all(row.lower >= sphere_covering_bound(row.n, row.radius) for row in BOUNDS.values())


def test_bound_source_tags():
    assert BoundSource.from_tag("D") is BoundSource.INTERLEAVE
    assert BoundSource.PRIMITIVE.description == "primitive polynomial"
    assert set(BoundSource.tags()) == set("abcdefgh")
    with pytest.raises(ValueError):
        BoundSource.from_tag("z")


def test_local_search_entries_are_not_table_rows(entries):
    searched = [entry for entry in entries if entry.provenance == LOCAL_SEARCH]
    assert {entry.id for entry in searched} == {"cs-7-1-22", "cs-10-2-38"}


def _recipe_params():
    params = []
    for recipe in interleave_recipes():
        marks = [pytest.mark.slow] if recipe.n >= 20 else []
        params.append(pytest.param(recipe, id=f"{recipe.n}-{recipe.radius}", marks=marks))
    return params


@pytest.mark.parametrize("recipe", _recipe_params())
def test_recipes(recipe, max_n):
    if recipe.n > max_n:
        pytest.skip(f"coverage table of width {recipe.n} is above the limit of {max_n}")
    s = recipe.build()
    assert len(s) == recipe.expected_length
    assert is_covering_sequence(s, recipe.n, recipe.radius).is_covering


def test_recipes_reach_the_table():
    for recipe in interleave_recipes():
        assert recipe.matches_table, (recipe.n, recipe.radius)
        assert table_bounds(recipe.n, recipe.radius).upper == recipe.expected_length


def test_recipes_built_on_the_searched_sequence():
    searched = get_entry("cs-10-2-38")
    assert searched.provenance == LOCAL_SEARCH
    assert table_bounds(10, 2).is_exact
    assert len(searched.sequence) == table_bounds(10, 2).upper
    uses = {(r.n, r.radius) for r in interleave_recipes() if "cs-10-2-38" in r.components}
    assert uses == {(19, 3), (20, 3)}


def test_realign_square():
    recipe = next(r for r in interleave_recipes() if (r.n, r.radius) == (16, 2))
    result = realign_square(recipe)
    assert result.report.is_covering
    assert result.shift <= recipe.options["shift"]
    with pytest.raises(ParameterError):
        realign_square(interleave_recipes()[0])
