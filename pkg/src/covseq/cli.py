"""The ``covseq`` command.

Every command that produces a sequence, code or array writes a text document with a
``# kind=... n=... r=...`` header line, to ``--out`` or to standard output; summaries go to
standard error. Exit status is 0 on success, 1 when a verification fails and 2 on any error.
"""
import argparse
import logging
import sys

from . import construct
from . import corpus
from . import twod
from .core import format_document
from .core import format_symbols
from .core import Gf2Poly
from .core import Header
from .core import read_array
from .core import read_code
from .core import read_sequence
from .core import SequenceCode
from .exceptions import CovseqError
from .exceptions import ParameterError
from .merge import merge_code
from .search import search_cs
from .search import SearchConfig
from .verify import coverage
from .verify import covering_radius
from .verify import is_c2ds
from .verify import is_covering_sequence
from .verify import sphere_covering_bound

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as handle:
        return handle.read()


def _emit(args, header, lines):
    text = format_document(header, lines)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _note(*lines):
    for line in lines:
        print(line, file=sys.stderr)


def _sequence_doc(args, s, n, radius):
    _emit(args, Header(kind="cs", n=n, r=radius, length=len(s)), [s])
    _note(f"length={len(s)}")


def _params(args, header, names):
    """Fill ``names`` from the header when ``--auto`` is set; every name must end up set."""
    values = {}
    for name in names:
        value = getattr(args, name)
        if args.auto and header is not None and value is None:
            value = getattr(header, name)
        if value is None:
            raise ParameterError(f"--{name} is needed (or --auto with a header line)")
        values[name] = value
    return [values[name] for name in names]


def _verdict(report, **extra):
    for line in report.as_lines(**extra):
        print(line)
    return EXIT_OK if report.is_covering else EXIT_FAILED


def cmd_verify_cs(args):
    header, s = read_sequence(_read(args.file), strict=not args.lenient)
    n, r = _params(args, header, ["n", "r"])
    report = is_covering_sequence(s, n, r, workers=args.workers, max_bits=args.max_n)
    if args.radius:
        report = report.with_radius(covering_radius(s, n, max_bits=args.max_n))
    print(f"{report.verdict} length={len(s)}")
    return _verdict(report, length=len(s))


def cmd_verify_csc(args):
    header, codewords = read_code(_read(args.file))
    n, r = _params(args, header, ["n", "r"])
    report = coverage(SequenceCode(codewords, n, r), workers=args.workers, max_bits=args.max_n)
    print(f"{report.verdict} codewords={len(codewords)}")
    return _verdict(report, codewords=len(codewords))


def cmd_verify_c2ds(args):
    header, array = read_array(_read(args.file))
    m, n, r = _params(args, header, ["m", "n", "r"])
    report = is_c2ds(array, m, n, r, workers=args.workers, max_bits=args.max_n)
    print(f"{report.verdict} rows={array.rows} cols={array.cols}")
    return _verdict(report, rows=array.rows, cols=array.cols)


def cmd_construct_debruijn(args):
    if args.q == 2:
        _sequence_doc(args, construct.debruijn_sequence(args.span), args.span, 0)
        return EXIT_OK
    symbols = construct.debruijn(args.q, args.span)
    header = Header(kind="cs", n=args.span, r=0, length=len(symbols), q=args.q)
    _emit(args, header, [format_symbols(symbols, args.q)])
    _note(f"length={len(symbols)} q={args.q}")
    return EXIT_OK


def cmd_construct_hamming(args):
    poly = Gf2Poly.parse(args.poly) if args.poly else None
    code = construct.hamming_csc(args.k, poly)
    _emit(args, Header(kind="csc", n=code.n, r=1), code.codewords)
    _note(f"codewords={len(code)}", f"total_length={code.total_length}")
    return EXIT_OK


def cmd_construct_selfdual(args):
    code = construct.selfdual_code(args.target_n)
    if args.uncombined:
        result = code.as_code()
    else:
        result = construct.combine_selfdual(code)
    _emit(args, Header(kind="csc", n=result.n, r=1, m=result.uniform_length), result.codewords)
    _note(f"codewords={len(result)}", f"total_length={result.total_length}")
    return EXIT_OK


def cmd_construct_interleave(args):
    a = read_sequence(_read(args.a))[1]
    b = read_sequence(_read(args.b))[1]
    s = construct.interleave(a, b, args.n1, args.n2, args.r1, args.r2)
    _sequence_doc(args, s, args.n1 + args.n2, args.r1 + args.r2)
    return EXIT_OK


def cmd_construct_square(args):
    seed = read_sequence(_read(args.file))[1]
    n, radius = 2 * args.n, 2 * args.r
    if args.shift is None:
        result = construct.aligned_square_interleave(
            seed, args.n, args.r, args.fill, workers=args.workers
        )
    else:
        s = construct.square_interleave(seed, args.n, args.fill, args.shift)
        report = is_covering_sequence(s, n, radius, workers=args.workers, max_bits=args.max_n)
        result = construct.SquareResult(s, args.shift, report)
    _note(f"shift={result.shift}")
    if not result.report.is_covering:
        # no document for a sequence that fails its own header
        _note(f"not covering at ({n},{radius}): {result.report.uncovered_total} words missed")
        return EXIT_FAILED
    _sequence_doc(args, result.sequence, n, radius)
    return EXIT_OK


def cmd_construct_primitive(args):
    poly = Gf2Poly.parse(args.poly) if args.poly else None
    s = construct.primitive_cs(args.n, args.r, poly)
    _sequence_doc(args, s, args.n + 2 * args.r + 1, args.r)
    return EXIT_OK


def cmd_merge(args):
    header, codewords = read_code(_read(args.input))
    n, r = _params(args, header, ["n", "r"])
    result = merge_code(SequenceCode(codewords, n, r))
    _sequence_doc(args, result.sequence, n, r)
    _note(f"total_overlap={result.total_overlap}", f"baseline={result.baseline}")
    if args.verify:
        report = is_covering_sequence(result.sequence, n, r, workers=args.workers)
        _note(f"verdict={report.verdict}")
        return EXIT_OK if report.is_covering else EXIT_FAILED
    return EXIT_OK


def _array_doc(args, array, m, n, radius):
    header = Header(kind="c2ds", m=m, n=n, r=radius, rows=array.rows, cols=array.cols)
    _emit(args, header, array.row_strings())
    _note(f"rows={array.rows} cols={array.cols}")
    return EXIT_OK


def cmd_fold(args):
    seed = read_sequence(_read(args.file))[1]
    array = twod.fold(seed, args.m, args.n, args.r, pad=args.pad, verify_seed=not args.trust)
    return _array_doc(args, array, args.m, args.n, args.r)


def cmd_shift2d(args):
    seed = read_sequence(_read(args.file))[1]
    array = twod.triangular_shift_array(seed, args.n, args.r, verify_seed=not args.trust)
    return _array_doc(args, array, 2, args.n, 2 * args.r)


def cmd_shiftdb(args):
    seed = read_sequence(_read(args.file))[1]
    array = twod.debruijn_shift_array(seed, args.n, args.r, args.m, verify_seed=not args.trust)
    return _array_doc(args, array, args.m, args.n, args.m * args.r)


def cmd_search(args):
    cfg = SearchConfig(
        args.n,
        args.r,
        target_length=args.target,
        budget=args.budget,
        rng_seed=args.seed,
        restarts=args.restarts,
        shrink=not args.no_shrink,
    )
    report = search_cs(cfg)
    _sequence_doc(args, report.sequence, args.n, args.r)
    _note(f"iterations={report.iterations}", f"fell_back={report.fell_back}")
    return EXIT_OK


def cmd_corpus_list(args):
    for entry in corpus.corpus_entries():
        print(entry.describe())
    return EXIT_OK


def cmd_corpus_verify(args):
    report = corpus.verify_corpus(args.id or None, workers=args.workers)
    for check in report.checks:
        if args.all or not check.passed:
            print(check)
    print(f"{len(report.checks)} checks, {len(report.failures())} failed")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_corpus_export(args):
    entry = corpus.get_entry(args.id)
    _emit(args, entry.header(), entry.payload)
    return EXIT_OK


def cmd_corpus_recipes(args):
    status = EXIT_OK
    for recipe in corpus.interleave_recipes():
        line = (
            f"({recipe.n},{recipe.radius}) {recipe.method:<10} {' x '.join(recipe.components):<28}"
            f" length={recipe.expected_length} table={recipe.table_length}"
        )
        if args.build:
            s = recipe.build()
            report = is_covering_sequence(
                s, recipe.n, recipe.radius, workers=args.workers, max_bits=args.max_n
            )
            line += f" built={len(s)} {report.verdict}"
            if not report.is_covering or len(s) != recipe.expected_length:
                status = EXIT_FAILED
        print(line)
    return status


def cmd_bounds(args):
    print(f"sphere_bound={sphere_covering_bound(args.n, args.r)}")
    row = corpus.table_bounds(args.n, args.r)
    if row is not None:
        print(f"table={row} ({row.source.description})")
    return EXIT_OK


def _int_options(parser, *names, required=True):
    for name in names:
        parser.add_argument(f"--{name}", type=int, required=required)


def _seed_options(parser):
    parser.add_argument("--file", required=True, help="seed sequence file, - for stdin")
    parser.add_argument(
        "--trust", action="store_true", help="do not verify the seed before using it"
    )


def build_parser():
    parser = argparse.ArgumentParser(prog="covseq", description="Covering sequences and arrays")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument("--workers", type=int, default=None, help="coverage marking threads")
    parser.add_argument("--max-n", type=int, default=None, help="largest coverage table width")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    verify = commands.add_parser("verify", help="check the covering property").add_subparsers(
        dest="what", metavar="KIND"
    )
    verify.required = True
    for kind, handler, names in (
        ("cs", cmd_verify_cs, ("n", "r")),
        ("csc", cmd_verify_csc, ("n", "r")),
        ("c2ds", cmd_verify_c2ds, ("m", "n", "r")),
    ):
        sub = verify.add_parser(kind)
        _int_options(sub, *names, required=False)
        sub.add_argument("--file", required=True, help="input document, - for stdin")
        sub.add_argument("--auto", action="store_true", help="parameters from the header line")
        if kind == "cs":
            sub.add_argument("--radius", action="store_true", help="also report the radius")
            sub.add_argument(
                "--lenient", action="store_true", help="drop stray non binary characters"
            )
        sub.set_defaults(handler=handler)

    build = commands.add_parser("construct", help="build a sequence or code").add_subparsers(
        dest="what", metavar="CONSTRUCTION"
    )
    build.required = True
    sub = build.add_parser("debruijn")
    sub.add_argument("--span", "--n", dest="span", type=int, required=True, help="window width")
    sub.add_argument(
        "--q", type=int, default=2, help="alphabet size; above 10 symbols are comma separated"
    )
    sub.set_defaults(handler=cmd_construct_debruijn)
    sub = build.add_parser("hamming")
    _int_options(sub, "k")
    sub.add_argument("--poly", help="generator, e.g. x^4+x+1")
    sub.set_defaults(handler=cmd_construct_hamming)
    sub = build.add_parser("selfdual")
    sub.add_argument("--target-n", type=int, default=16, choices=(8, 16, 32))
    sub.add_argument("--uncombined", action="store_true", help="emit the unpaired codewords")
    sub.set_defaults(handler=cmd_construct_selfdual)
    sub = build.add_parser("interleave")
    sub.add_argument("--a", required=True, help="sequence for the even positions")
    sub.add_argument("--b", required=True, help="sequence for the odd positions")
    _int_options(sub, "n1", "n2", "r1", "r2")
    sub.set_defaults(handler=cmd_construct_interleave)
    sub = build.add_parser("square")
    sub.add_argument("--file", required=True)
    _int_options(sub, "n", "r")
    sub.add_argument("--fill", type=int, default=0, choices=(0, 1))
    sub.add_argument(
        "--shift", type=int, default=None, help="seed shift; searched for when omitted"
    )
    sub.set_defaults(handler=cmd_construct_square)
    sub = build.add_parser("primitive")
    _int_options(sub, "n", "r")
    sub.add_argument("--poly", help="feedback polynomial, found automatically when omitted")
    sub.set_defaults(handler=cmd_construct_primitive)
    for sub in build.choices.values():
        sub.add_argument("--out", help="output file, stdout when omitted")

    sub = commands.add_parser("merge", help="merge a code into one sequence")
    sub.add_argument("--in", dest="input", required=True)
    _int_options(sub, "n", "r", required=False)
    sub.add_argument("--auto", action="store_true")
    sub.add_argument("--verify", action="store_true")
    sub.add_argument("--out")
    sub.set_defaults(handler=cmd_merge)

    sub = commands.add_parser("fold", help="fold a sequence into an array")
    _seed_options(sub)
    _int_options(sub, "m", "n", "r")
    sub.add_argument("--pad", choices=twod.FOLD_PADDING, default="prefix")
    sub.add_argument("--out")
    sub.set_defaults(handler=cmd_fold)
    sub = commands.add_parser("shift2d", help="stack triangular shifts of a sequence")
    _seed_options(sub)
    _int_options(sub, "n", "r")
    sub.add_argument("--out")
    sub.set_defaults(handler=cmd_shift2d)
    sub = commands.add_parser("shiftdb", help="stack de Bruijn driven shifts of a sequence")
    _seed_options(sub)
    _int_options(sub, "n", "r", "m")
    sub.add_argument("--out")
    sub.set_defaults(handler=cmd_shiftdb)

    sub = commands.add_parser("search", help="local search for a short sequence")
    _int_options(sub, "n", "r", "seed")
    sub.add_argument("--target", type=int, default=None)
    sub.add_argument("--budget", type=int, default=200000)
    sub.add_argument("--restarts", type=int, default=4)
    sub.add_argument("--no-shrink", action="store_true")
    sub.add_argument("--out")
    sub.set_defaults(handler=cmd_search)

    data = commands.add_parser("corpus", help="published sequences").add_subparsers(
        dest="what", metavar="ACTION"
    )
    data.required = True
    data.add_parser("list").set_defaults(handler=cmd_corpus_list)
    sub = data.add_parser("verify")
    sub.add_argument("--id", action="append", help="only this entry, may be repeated")
    sub.add_argument("--all", action="store_true", help="print passing checks too")
    sub.set_defaults(handler=cmd_corpus_verify)
    sub = data.add_parser("export")
    sub.add_argument("--id", required=True)
    sub.add_argument("--out")
    sub.set_defaults(handler=cmd_corpus_export)
    sub = data.add_parser("recipes")
    sub.add_argument("--build", action="store_true", help="build and verify every recipe")
    sub.set_defaults(handler=cmd_corpus_recipes)

    sub = commands.add_parser("bounds", help="sphere covering bound and table row")
    _int_options(sub, "n", "r")
    sub.set_defaults(handler=cmd_bounds)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return stop.code
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.handler(args)
    except (CovseqError, OSError) as error:
        logger.debug("%s failed", args.command, exc_info=True)
        print(f"error: {error}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
