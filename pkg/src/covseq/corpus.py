"""Published covering sequences, codes and arrays, with the bounds table they support.

Every entry keeps its bits exactly as published together with the parameters and length it
was published with. :func:`verify_corpus` rechecks all of it: coverage, lengths, the arithmetic
of the extension tables, checksums, and the consistency with :data:`BOUNDS`.
"""
import functools
import hashlib
import logging
from collections import Counter
from collections import namedtuple

from . import published
from .construct import aligned_square_interleave
from .construct import debruijn_sequence
from .construct import hamming_csc
from .construct import interleave
from .construct import square_interleave
from .core import CyclicSequence
from .core import format_document
from .core import Header
from .core import SequenceCode
from .core import TorusArray
from .exceptions import CorpusEntryNotFound
from .exceptions import ParameterError
from .merge import join_with_overlaps
from .merge import max_overlap
from .utils import BoundSource
from .verify import coverage
from .verify import is_c2ds
from .verify import is_covering_sequence
from .verify import sphere_covering_bound

logger = logging.getLogger(__name__)

EXHAUSTIVE_SEARCH = "exhaustive search"
MERGED_CODE = "merged code"
MERGED_TABLE = "merged code table"
HAMMING_MERGE = "merged Hamming code"
SELF_DUAL_MERGE = "merged self-dual code"
PUBLISHED_CODE = "covering code"
TRIANGULAR_SHIFTS = "triangular shifts"
ARRAY_ROW = "shifted array row"
LOCAL_SEARCH = "local search"

HAMMING_PROFILE = {15: 134, 5: 6, 3: 2, 1: 2}

# sha256 of the payload lines joined by newlines
CHECKSUMS = {
    "cs-8-1-32": "f5b20684ff994ef7362ce59c162ead26130767b4fcc3dfc3a1ff208024039eb0",
    "cs-8-1-35": "995d36f32d405ae729c7f305c721029214ff19c4a139b0748f3d4602aed1d387",
    "cs-8-1-37": "859c9cf62a917a60151e4f24f6bf0074e4240c241d2e6d2e77f03ad0798e2bf2",
    "cs-8-1-40": "e48dd63484e4607d5e3b2e1da39af2e180877bf41792db2f00a966aca3eb391e",
    "cs-8-2-14": "67955105d539cb088cceb3cb14574190a2cfa71e326304c8c44b8146f997b39c",
    "cs-9-2-20": "068e6fe491d8760e16a718014a21362a219ba7e802c6c43e4e1ff4bbb0adb40d",
    "cs-10-1-175": "6e94a0a6e62ef414fd0b6245adc9ff31bd89145576be21ad544727538929e45e",
    "cs-10-1-177": "6659e78a51e97492f240c778a4e8daa0dcd409fe33b8120c07f1ca130bf1465b",
    "cs-11-1-283": "9eda5ec4081d9cc951bfbffd75b0c9ea34b0ff4581cef4488b8427a2d7d4f82c",
    "cs-12-1-597": "284ca8721bb22a927550c582ecc0be3333b609dda9a9471e8d59aa5433a3507e",
    "cs-13-1-1172": "d93942b7a53a620854f0c23e9255d13cf05bbdac5aa536fc3222c144ace92e0a",
    "cs-14-1-2271": "8e1b449ff5f44e59774319657bc0e31c9a88d08cfa39981d12099b2e0dda5f56",
    "cs-11-2-111": "14e967009825ae260cba5c4b4aaeeaae4826f939d69bdef0a40723d5245f7e33",
    "cs-12-2-161": "3e458e733f43ea66ed7e0a42662651a3062fc86917bf2611ffe1c49b219678e2",
    "cs-13-2-292": "689d88fb9b19984e4b3a07381d5b95bca01bef0b3804e8ea2042791bd7d47e5a",
    "cs-14-2-525": "cc99019f2110d5aacb6accd7ae09c8e72a584195fbf70ae1814e7c2e937beb3e",
    "cs-15-2-907": "c796ced07d78beaf6f3468f79147bb669bbceef216ce3f319d7f9d341997312c",
    "cs-13-3-93": "694cdb04572db7ace0a4c4d751fd44bcb8af24208b9e9f9d0691dc40cc57485e",
    "cs-15-3-406": "fd75cb4c4eb6c75638e2150e0ebe230a94005a79daefd72eb197b13a9a526616",
    "cs-14-3-239": "a333eadbad1847f52caac56664b7ad548708d274e247d1b5fb14ff10a9037a3f",
    "csc-10-1-175": "3ec1894f349d16e8d4a914cd9f4824039349813b73ee7b2edc6e0da05a042d8b",
    "csc-10-1-177": "e2a3786d1755055221c0bb4e0867243468bf4d02c5e0df2a9148e5ecddcb7f87",
    "csc-11-1-283": "bb2d6c8d2509c5173e3c0d8e145aad9e28cb00a77051163418e6eaba382a4470",
    "csc-11-2-111": "a02ed33d34a9650d7575d53526b22af90a0bc834649607bf782f2d885ff9ec38",
    "csc-12-2-161": "6e6e0413d79cc1cd4623d7edec393a4cfb86a59ecd513d26d594eb19ced62c5f",
    "csc-13-2-292": "0481be0e6d5f8b1a7c8b14030ee7e3ea9e72e34118eae3efa448ba9178bca7af",
    "csc-13-3-93": "d2a76a52fa859988f6d81c7d594348554aad8b71eb5387f088ed9ef9cfeca37f",
    "csc-14-3-239": "7fafcd332e3f354573298be6063503ee251ecf54b482f52aa6172658f77588be",
    "cs-15-1-3516": "8b5f2753c703935652b9cb1caebdc76a8a60aef5beb995e8557d338acf670949",
    "cs-16-1-4462": "c234f2225c845be1cfa7d09d5699fb579f4cd849e74e4cedf39d3f44e966bddd",
    "csc-9-1-8": "d75d3539da836c08062a32c993d312b2127a4feebe5eba1f21604154304538dd",
    "cs-9-1-93": "4accf750ce2dc6b062fb1d79e78d29b7f7ea56301e3eef9081d48cde6e8f60a8",
    "cs-9-1-102": "0a4fea475a5a039e7b239a2cc232c5c89c928adf8af6c9030e39ed21dc298cca",
    "cs-9-1-106": "1ddc0f41b2186d0cbd8a2255e1bb938bed0e1648fb78931edf33c71f123d4b06",
    "c2ds-2x6-2-13x12": "8b5e6703fda7302ddee0af14c15d9c320a3955afec131f154bbcc00e3ad87416",
    "cs-6-1-12": "bb3d1be7fb811b31a3c83f7472933eefaa12159bb85aa32eb13c44ea3c71c77f",
    "cs-7-1-22": "1da023eb4e54c4ec740d3f72cc43893a50e8fd1fcf5f0c210c4624c5a0b88729",
    "cs-10-2-38": "6f5df190f7b457554d5735c6b68cdf0593069c91f8e08eb59cfdd2c017ab75b6",
}


class CorpusEntry(
    namedtuple(
        "CorpusEntry",
        [
            "id",
            "kind",
            "n",
            "radius",
            "m",
            "claimed_length",
            "payload",
            "provenance",
            "table",
            "totals",
            "note",
        ],
    )
):
    """One published object.

    ``payload`` is a tuple of bit strings: the sequence (``cs``), the codewords (``csc``) or the
    rows (``c2ds``). ``claimed_length`` is the length as printed (the number of codewords for a
    code, the printed area for an array), kept apart from the payload it is checked against.
    ``table`` holds the ``(string, overlap)`` rows a sequence was merged from, when they were
    published, and ``totals`` the printed ``(bits, overlaps)`` whose difference is the length.
    """

    __slots__ = ()

    @property
    def text(self):
        return "\n".join(self.payload)

    @property
    def checksum(self):
        return hashlib.sha256(self.text.encode("ascii")).hexdigest()

    @property
    def sequence(self):
        if self.kind != "cs":
            raise ParameterError(f"{self.id} is a {self.kind}, not a sequence")
        return CyclicSequence(self.payload[0])

    @property
    def code(self):
        if self.kind == "c2ds":
            raise ParameterError(f"{self.id} is an array, not a code")
        return SequenceCode(self.payload, self.n, self.radius)

    @property
    def array(self):
        if self.kind != "c2ds":
            raise ParameterError(f"{self.id} is a {self.kind}, not an array")
        return TorusArray(self.payload)

    @property
    def actual_length(self):
        if self.kind == "cs":
            return len(self.payload[0])
        if self.kind == "csc":
            return len(self.payload)
        return len(self.payload) * len(self.payload[0])

    def header(self):
        if self.kind == "cs":
            return Header(kind="cs", n=self.n, r=self.radius, length=self.actual_length)
        if self.kind == "csc":
            return Header(kind="csc", n=self.n, r=self.radius, m=self.m)
        return Header(
            kind="c2ds",
            m=self.m,
            n=self.n,
            r=self.radius,
            rows=len(self.payload),
            cols=len(self.payload[0]),
        )

    def document(self):
        """The entry as a text document with a ``#`` header line."""
        return format_document(self.header(), self.payload)

    def describe(self):
        params = f"{self.n},{self.radius}"
        if self.kind == "c2ds":
            params = f"{self.m}x{params}"
        line = f"{self.id:<18} {self.kind:<5} ({params:<7}) {self.claimed_length:>6}  "
        line += self.provenance
        return f"{line} ({self.note})" if self.note else line


def _entry(entry_id, kind, n, radius, payload, provenance, length, m=None, **extra):
    if isinstance(payload, str):
        payload = (payload,)
    return CorpusEntry(
        entry_id,
        kind,
        n,
        radius,
        m,
        length,
        tuple(payload),
        provenance,
        extra.get("table", ()),
        extra.get("totals"),
        extra.get("note", ""),
    )


def _joined(table):
    return str(join_with_overlaps([row for row, _ in table], [t for _, t in table]))


def _build_entries():
    entries = []
    for n, radius, length, bits in published.SMALL_SEQUENCES:
        entries.append(
            _entry(f"cs-{n}-{radius}-{length}", "cs", n, radius, bits, EXHAUSTIVE_SEARCH, length)
        )

    tables = {}
    for n, radius, length, totals, codewords, table in published.CODE_TABLES:
        tables[(n, radius, length)] = (totals, codewords, table)
    for n, radius, length, bits in published.MERGED_SEQUENCES:
        totals, _, table = tables.get((n, radius, length), (None, (), ()))
        entries.append(
            _entry(
                f"cs-{n}-{radius}-{length}",
                "cs",
                n,
                radius,
                bits,
                MERGED_CODE,
                length,
                table=table,
                totals=totals,
            )
        )
    # the only merged sequence taken from its table
    n, radius, length, totals, _, table = published.CODE_TABLES[-1]
    entries.append(
        _entry(
            f"cs-{n}-{radius}-{length}",
            "cs",
            n,
            radius,
            _joined(table),
            MERGED_TABLE,
            length,
            table=table,
            totals=totals,
        )
    )
    for (n, radius, length), (_, codewords, _) in tables.items():
        entries.append(
            _entry(
                f"csc-{n}-{radius}-{length}",
                "csc",
                n,
                radius,
                codewords,
                PUBLISHED_CODE,
                len(codewords),
                note=f"merges into length {length}",
            )
        )

    for table, printed, n, provenance in (
        (published.HAMMING_TABLE, published.HAMMING_PRINTED, 15, HAMMING_MERGE),
        (published.SELF_DUAL_TABLE, published.SELF_DUAL_PRINTED, 16, SELF_DUAL_MERGE),
    ):
        length, *totals = printed
        entries.append(
            _entry(
                f"cs-{n}-1-{length}",
                "cs",
                n,
                1,
                _joined(table),
                provenance,
                length,
                table=table,
                totals=tuple(totals),
            )
        )

    codewords = published.NINE_ONE_CODEWORDS
    entries.append(
        _entry("csc-9-1-8", "csc", 9, 1, codewords, PUBLISHED_CODE, len(codewords), m=10)
    )
    for bits, (length, *totals), table, note in zip(
        (published.NINE_ONE_106, published.NINE_ONE_93, published.NINE_ONE_102),
        published.NINE_ONE_PRINTED,
        (published.NINE_ONE_TABLE, (), ()),
        ("first merge of csc-9-1-8", "", "eight consecutive ones"),
    ):
        entries.append(
            _entry(
                f"cs-9-1-{length}",
                "cs",
                9,
                1,
                bits,
                MERGED_CODE,
                length,
                table=table,
                totals=tuple(totals) if totals[0] else None,
                note=note,
            )
        )

    rows, cols = published.SHIFTED_ARRAY_SHAPE
    entries.append(
        _entry(
            f"c2ds-2x6-2-{rows}x{cols}",
            "c2ds",
            6,
            2,
            published.SHIFTED_ARRAY,
            TRIANGULAR_SHIFTS,
            rows * cols,
            m=2,
        )
    )
    for (length, bits), n, radius, provenance in (
        (published.SIX_ONE, 6, 1, ARRAY_ROW),
        (published.SEVEN_ONE, 7, 1, LOCAL_SEARCH),
        (published.TEN_TWO, 10, 2, LOCAL_SEARCH),
    ):
        entry_id = f"cs-{n}-{radius}-{length}"
        entries.append(_entry(entry_id, "cs", n, radius, bits, provenance, length))
    return entries


@functools.lru_cache(maxsize=None)
def _loaded():
    entries = tuple(_build_entries())
    logger.debug("corpus loaded with %d entries", len(entries))
    return entries


def corpus_entries():
    return list(_loaded())


def get_entry(entry_id):
    """Look an entry up by id.

    Raises:
        CorpusEntryNotFound
    """
    for entry in corpus_entries():
        if entry.id == entry_id:
            return entry
    raise CorpusEntryNotFound(entry_id, [entry.id for entry in corpus_entries()])


class BoundsEntry(namedtuple("BoundsEntry", ["n", "radius", "lower", "upper", "source"])):
    """Best known lower and upper bounds on the shortest ``(n, R)`` covering sequence."""

    __slots__ = ()

    @property
    def is_exact(self):
        return self.lower == self.upper

    def __str__(self):
        span = str(self.upper) if self.is_exact else f"{self.lower}-{self.upper}"
        return f"{span} {self.source.value}"


_BOUNDS_TABLE = """
     9     62-93a        20b       12b
    10    107-175a       38b       16b
    11    180-283a    38-111a      20b
    12    342-597a    62-161a   34-40b
    13   598-1172a    97-292a   34-93a
    14  1172-2271a   159-525a  44-239c
    15  2048-3516e   310-907a  70-406a
    16  4096-4462f  512-1640c 115-1036d
    17 7419-17719a  859-5952d 187-1480d
    18 14564-95232d 1702-10506c 316-3720d
    19 26309-176170g 2898-31684h 513-7068d
    20 52618-358400d 5330-31684c 892-13300d
"""


def _parse_bounds(text):
    bounds = {}
    for line in text.strip().splitlines():
        n, *cells = line.split()
        for radius, cell in enumerate(cells, start=1):
            source = BoundSource.from_tag(cell[-1])
            lower, _, upper = cell[:-1].partition("-")
            upper = upper or lower
            bounds[(int(n), radius)] = BoundsEntry(int(n), radius, int(lower), int(upper), source)
    return bounds


BOUNDS = _parse_bounds(_BOUNDS_TABLE)


def table_bounds(n, radius):
    """The bounds table row for ``(n, R)``, or None outside ``n = 9..20``, ``R = 1..3``."""
    return BOUNDS.get((n, radius))


def bounds_rows():
    return [BOUNDS[key] for key in sorted(BOUNDS)]


class CorpusCheck(namedtuple("CorpusCheck", ["entry_id", "name", "passed", "detail"])):
    __slots__ = ()

    def __str__(self):
        status = "ok" if self.passed else "FAIL"
        return f"{status:<4} {self.entry_id:<18} {self.name:<10} {self.detail}"


class CorpusReport(namedtuple("CorpusReport", ["checks"])):
    __slots__ = ()

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def failures(self):
        return [check for check in self.checks if not check.passed]


def _coverage_of(entry, workers):
    if entry.kind == "cs":
        return is_covering_sequence(entry.sequence, entry.n, entry.radius, workers=workers)
    if entry.kind == "csc":
        return coverage(entry.code, workers=workers)
    return is_c2ds(entry.array, entry.m, entry.n, entry.radius, workers=workers)


def _totals_check(entry):
    bits, overlaps = entry.totals
    detail = f"printed {bits} - {overlaps} = {bits - overlaps}"
    passed = bits - overlaps == entry.claimed_length
    if entry.table:
        table_bits = sum(len(row) for row, _ in entry.table)
        table_overlaps = sum(t for _, t in entry.table)
        detail += f", table {table_bits} - {table_overlaps}"
        passed = passed and (table_bits, table_overlaps) == (bits, overlaps)
    return CorpusCheck(entry.id, "totals", passed, detail)


def _table_checks(entry):
    rows = [row for row, _ in entry.table]
    short = [
        i + 1
        for i, (row, t) in enumerate(entry.table)
        if max_overlap(row, rows[(i + 1) % len(rows)]) < t
    ]
    yield CorpusCheck(
        entry.id,
        "overlaps",
        not short,
        "every printed overlap is realised" if not short else f"rows {short} overlap less",
    )
    yield CorpusCheck(
        entry.id, "join", _joined(entry.table) == entry.payload[0], "table joins into the payload"
    )


def check_entry(entry, workers=None):
    """The checks of a single entry: checksum, printed length, coverage, printed totals, table
    overlaps and join, and coverage at one less window width."""
    return list(_entry_checks(entry, workers))


def _entry_checks(entry, workers):
    expected = CHECKSUMS.get(entry.id)
    yield CorpusCheck(entry.id, "checksum", expected == entry.checksum, entry.checksum[:16])
    yield CorpusCheck(
        entry.id,
        "length",
        entry.actual_length == entry.claimed_length,
        f"{entry.actual_length} (claimed {entry.claimed_length})",
    )
    report = _coverage_of(entry, workers)
    yield CorpusCheck(
        entry.id,
        "coverage",
        report.is_covering,
        f"{report.covered_count} of {report.space_size}"
        + ("" if report.is_covering else f", e.g. {report.witnesses()[0]}"),
    )
    if entry.totals:
        yield _totals_check(entry)
    if entry.table:
        yield from _table_checks(entry)
    if entry.kind == "cs" and 1 <= entry.radius <= entry.n - 2:
        smaller = is_covering_sequence(entry.sequence, entry.n - 1, entry.radius, workers=workers)
        yield CorpusCheck(
            entry.id,
            "downgrade",
            smaller.is_covering,
            f"also covers ({entry.n - 1},{entry.radius})",
        )


def _hamming_check():
    code = hamming_csc(4)
    profile = dict(Counter(len(c) for c in code.codewords))
    windows = len(code.window_set())
    return CorpusCheck(
        "hamming-15",
        "profile",
        profile == HAMMING_PROFILE and windows == 2048,
        f"{sorted(profile.items(), reverse=True)}, {windows} distinct windows",
    )


def _bounds_checks(entries):
    published = {}
    for entry in entries:
        if entry.kind == "cs":
            published.setdefault((entry.n, entry.radius), []).append(entry)
    for key, bound in sorted(BOUNDS.items()):
        found = published.get(key, [])
        if not found:
            continue
        lengths = [entry.claimed_length for entry in found]
        printed = [e.claimed_length for e in found if e.provenance != LOCAL_SEARCH]
        ok = min(lengths) >= bound.lower and (not printed or min(printed) <= bound.upper)
        yield CorpusCheck(
            f"bounds-{key[0]}-{key[1]}",
            "bounds",
            ok and bound.lower >= sphere_covering_bound(*key),
            f"shortest {min(lengths)} against {bound}",
        )


def verify_corpus(entry_ids=None, workers=None):
    """Recheck the corpus.

    Args:
        entry_ids: only check these entries; the table wide checks then are skipped
        workers: coverage marking threads

    Returns:
        :class:`CorpusReport`

    Raises:
        CorpusEntryNotFound for an unknown id
    """
    entries = corpus_entries() if entry_ids is None else [get_entry(i) for i in entry_ids]
    checks = []
    for entry in entries:
        checks.extend(check_entry(entry, workers))
    if entry_ids is None:
        checks.append(_hamming_check())
        checks.extend(_bounds_checks(entries))
    report = CorpusReport(tuple(checks))
    for check in report.failures():
        logger.warning("corpus check failed: %s", check)
    logger.info("corpus: %d checks, %d failed", len(checks), len(report.failures()))
    return report


class Recipe(
    namedtuple(
        "Recipe",
        ["n", "radius", "method", "components", "expected_length", "table_length", "options"],
    )
):
    """How to rebuild a longer covering sequence from corpus entries.

    ``components`` are corpus ids or ``debruijn-<span>``. For ``interleave`` the options are the
    window widths and radii of both components, for ``square`` the component's width, the run
    symbol and the seed shift.
    """

    __slots__ = ()

    @property
    def matches_table(self):
        return self.expected_length == self.table_length

    def build(self):
        seeds = [_component(name) for name in self.components]
        if self.method == "interleave":
            return interleave(*seeds, **self.options)
        return square_interleave(seeds[0], **self.options)


def _component(name):
    if name.startswith("debruijn-"):
        return debruijn_sequence(int(name.rpartition("-")[2]))
    return get_entry(name).sequence


def _pair(n, radius, a, b, widths, radii, length):
    options = {"n1": widths[0], "n2": widths[1], "r1": radii[0], "r2": radii[1]}
    return Recipe(n, radius, "interleave", (a, b), length, BOUNDS[(n, radius)].upper, options)


def _square(n, radius, seed, width, fill, shift, length):
    options = {"n": width, "fill": fill, "shift": shift}
    return Recipe(n, radius, "square", (seed,), length, BOUNDS[(n, radius)].upper, options)


def interleave_recipes():
    """Recipes for the interleaved bounds of the table.

    The ``(19,3)`` and ``(20,3)`` rows need a ``(10,2)`` sequence of length 38 that was never
    printed; they use the one from the local search.
    """
    return [
        _pair(16, 3, "cs-8-1-37", "cs-8-2-14", (8, 8), (1, 2), 1036),
        _pair(17, 3, "cs-9-2-20", "cs-8-1-37", (9, 8), (2, 1), 1480),
        _pair(18, 3, "cs-9-1-93", "cs-9-2-20", (9, 9), (1, 2), 3720),
        _pair(17, 2, "cs-9-1-93", "cs-8-1-32", (9, 8), (1, 1), 5952),
        _pair(18, 1, "debruijn-9", "cs-9-1-93", (9, 9), (0, 1), 95232),
        _pair(20, 1, "debruijn-10", "cs-10-1-175", (10, 10), (0, 1), 358400),
        _pair(19, 3, "cs-10-2-38", "cs-9-1-93", (10, 9), (2, 1), 7068),
        _pair(20, 3, "cs-10-1-175", "cs-10-2-38", (10, 10), (1, 2), 13300),
        _square(16, 2, "cs-8-1-40", 8, 0, 4, 1640),
        _square(18, 2, "cs-9-1-102", 9, 1, 0, 10506),
        _square(20, 2, "cs-10-1-177", 10, 0, 0, 31684),
    ]


def realign_square(recipe, workers=None):
    """Search the seed shift of a square recipe again instead of trusting the stored one."""
    if recipe.method != "square":
        raise ParameterError("only square recipes have a seed shift")
    options = recipe.options
    seed = _component(recipe.components[0])
    radius = recipe.radius // 2
    return aligned_square_interleave(seed, options["n"], radius, options["fill"], workers=workers)
