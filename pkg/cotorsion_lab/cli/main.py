"""Command line: cotorsion-lab COMMAND [options]

Exit codes: 0 holds, 1 fails, 2 bad input, 3 unknown within bounds, 4 replay mismatch.
"""
import sys
import time
from argparse import ArgumentParser
from logging import DEBUG, INFO, getLogger

from ..exception import (ApproximationUnavailable, ArgumentMismatchError, DecompositionInconclusive, EnumerationRefused,
                         ExpressionError, FixtureValidationError, InputFileError, PresentationError, ReplayMismatch,
                         ValidationError)
from ..fixtures import TWIN_FIXTURES, fixture_category, fixture_names, load_fixture
from ..heartcat import (Heart, check_abelian, check_integral, probe_integral_direct, probe_right_integral,
                        replay_certificate)
from ..pairs import compute_hearts, verify_twin
from ..repcore import PrimeField, QuiverPresentation
from ..serialcat import generate
from ..subcat import SearchBounds, Verdict, VerdictKind
from .files import REPORT_SCHEMA, category_file, load_category, load_twin, pair_definitions, read_json, \
    write_json_atomic
from .report import build_report, render

logger = getLogger(__name__)


EXIT_USAGE = 2
EXIT_UNKNOWN = 3
EXIT_REPLAY_MISMATCH = 4

_exit_codes = {VerdictKind.holds: 0, VerdictKind.fails: 1, VerdictKind.unknown: EXIT_UNKNOWN}

_input_errors = (ArgumentMismatchError, EnumerationRefused, ExpressionError, FixtureValidationError, InputFileError,
                 PresentationError, ValidationError)

# A search that ran out of room before it could decide
_bound_errors = (ApproximationUnavailable, DecompositionInconclusive)


def exit_code(verdict):
    return _exit_codes[verdict.kind]


def parse_relations(text):
    """"1-5,2-6" -> [(1, 5), (2, 6)]"""
    relations = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        try:
            a, b = (int(v) for v in part.split("-"))

        except ValueError:
            raise PresentationError("Malformed relation {!r}; expected a-b".format(part))

        relations.append((a, b))

    return relations


def build_parser():
    parser = ArgumentParser(prog="cotorsion-lab", description="Twin cotorsion pairs and their hearts")

    common = ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--bound-mult", type=int, default=2)
    common.add_argument("--dim-cap", type=int, default=24)
    common.add_argument("--terms", type=int, default=2)
    common.add_argument("--report", help="write the report to this path")
    common.add_argument("-v", "--verbose", action="count", default=0)

    inputs = ArgumentParser(add_help=False)
    inputs.add_argument("--fixture", choices=fixture_names())
    inputs.add_argument("--category")
    inputs.add_argument("--pairs")

    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True

    parser_generate = subparsers.add_parser("generate", parents=[common], help="write a category file")
    parser_generate.add_argument("--n", type=int, required=True)
    parser_generate.add_argument("--relations", default="")
    parser_generate.add_argument("--char", type=int, default=2)
    parser_generate.add_argument("--out")
    parser_generate.add_argument("--validate", action="store_true", help="compare closed forms with brute force")
    parser_generate.set_defaults(handler=cmd_generate)

    parser_census = subparsers.add_parser("census", parents=[common, inputs], help="count indecomposables")
    parser_census.set_defaults(handler=cmd_census)

    for name, handler, description in (("check-twin", cmd_check_twin, "verify a twin cotorsion pair"),
                                       ("heart", cmd_heart, "membership tables of the hearts"),
                                       ("check-integral", cmd_check_integral, "decide integrality of the heart"),
                                       ("check-abelian", cmd_check_abelian, "decide abelianness of the heart")):
        subparser = subparsers.add_parser(name, parents=[common, inputs], help=description)
        subparser.set_defaults(handler=handler)

    parser_probe = subparsers.add_parser("probe", parents=[common, inputs], help="search squares breaking integrality")
    parser_probe.add_argument("--side", choices=("left", "right"), default="left")
    parser_probe.set_defaults(handler=cmd_probe)

    parser_replay = subparsers.add_parser("replay", parents=[common], help="revalidate a stored certificate")
    parser_replay.add_argument("replay_file", metavar="REPORT")
    parser_replay.set_defaults(handler=cmd_replay)

    return parser


def bounds_from_args(args):
    return SearchBounds(args.bound_mult, args.dim_cap, args.terms)


def load_inputs(args, need_pairs=True):
    """Category, twin pair and pair definitions named by --fixture or --category/--pairs"""
    if args.fixture:
        ctx = fixture_category(args.fixture)
        if not need_pairs:
            return ctx, None, None

        if args.fixture not in TWIN_FIXTURES:
            raise InputFileError("Fixture {} holds no twin cotorsion pair".format(args.fixture))

        data = load_fixture(args.fixture)

    else:
        if not args.category:
            raise InputFileError("Name a --fixture or a --category file")

        ctx = load_category(read_json(args.category))
        if not need_pairs:
            return ctx, None, None

        if not args.pairs:
            raise InputFileError("Name a --pairs file")

        data = read_json(args.pairs)

    return ctx, load_twin(ctx, data), pair_definitions(data)


def _verified_heart(tp, bounds):
    """Heart of a verified twin pair, or the verdict that stopped verification"""
    verdict = verify_twin(tp, bounds)
    if not verdict.is_holds:
        return None, verdict

    return Heart(compute_hearts(tp, bounds)), None


# Commands
def cmd_generate(args, bounds):
    ctx = generate(QuiverPresentation(args.n, parse_relations(args.relations)), PrimeField(args.char),
                   validate=args.validate)
    if args.out:
        write_json_atomic(args.out, category_file(ctx))

    verdict = Verdict.holds(route="generate", witness=ctx.census,
                            details={"indecomposables": list(ctx.indecomposables)})
    return verdict, ctx, None


def cmd_census(args, bounds):
    ctx, _, _ = load_inputs(args, need_pairs=False)
    verdict = Verdict.holds(route="census", witness=ctx.census, details={"indecomposables": list(ctx.indecomposables)})
    return verdict, ctx, None


def cmd_check_twin(args, bounds):
    ctx, tp, definitions = load_inputs(args)
    return verify_twin(tp, bounds), ctx, definitions


def cmd_heart(args, bounds):
    ctx, tp, definitions = load_inputs(args)
    heart, stopped = _verified_heart(tp, bounds)
    if stopped is not None:
        return stopped, ctx, definitions

    classes = heart.classes
    if classes.tainted:
        verdict = Verdict.unknown(bounds=bounds, details={"classes": classes})

    else:
        verdict = Verdict.holds(route="membership tables", witness=classes, bounds=bounds,
                                details={"quotient_homs": {"{} -> {}".format(x, y): dim for (x, y), dim
                                                           in heart.quotient_hom_table().items() if dim}})

    return verdict, ctx, definitions


def _heart_command(check):
    def command(args, bounds):
        ctx, tp, definitions = load_inputs(args)
        heart, stopped = _verified_heart(tp, bounds)
        if stopped is not None:
            return stopped, ctx, definitions

        return check(heart, bounds), ctx, definitions

    return command


cmd_check_integral = _heart_command(check_integral)
cmd_check_abelian = _heart_command(check_abelian)


def cmd_probe(args, bounds):
    probe = probe_integral_direct if args.side == "left" else probe_right_integral
    return _heart_command(probe)(args, bounds)


def cmd_replay(args, bounds):
    data = read_json(args.replay_file)
    if not isinstance(data, dict) or data.get("schema") != REPORT_SCHEMA:
        raise InputFileError("{} is not a {} report".format(args.replay_file, REPORT_SCHEMA))

    try:
        ctx = load_category(data["category"])
        definitions = pair_definitions(data["pairs"])
        tp = load_twin(ctx, data["pairs"])
        certificate = data["result"]["certificate"]
        stored_bounds = SearchBounds(**data["bounds"])

    except KeyError as err:
        raise InputFileError("Report lacks {} needed for replay".format(err))

    replay_certificate(tp, certificate, stored_bounds)
    verdict = Verdict.holds(route="replay", witness=certificate.get("kind"), bounds=stored_bounds,
                            details={"command": data.get("command")})
    return verdict, ctx, definitions


def _configure_logging(verbosity):
    if verbosity >= 2:
        getLogger().setLevel(DEBUG)

    elif verbosity == 1:
        getLogger().setLevel(INFO)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)

    except SystemExit as err:
        return err.code

    _configure_logging(args.verbose)
    try:
        bounds = bounds_from_args(args)
        started = time.perf_counter()
        verdict, ctx, definitions = args.handler(args, bounds)
        elapsed = time.perf_counter() - started

    except ReplayMismatch as err:
        print("replay mismatch: {}".format(err), file=sys.stderr)
        return EXIT_REPLAY_MISMATCH

    except _input_errors as err:
        print("error: {}".format(err), file=sys.stderr)
        return EXIT_USAGE

    except _bound_errors as err:
        print("unknown within bounds: {}".format(err), file=sys.stderr)
        return EXIT_UNKNOWN

    report = build_report(args.command, verdict, bounds, ctx, definitions, elapsed)
    if args.report:
        write_json_atomic(args.report, report)

    print(render(report, args.format))
    return exit_code(verdict)


if __name__ == "__main__":
    sys.exit(main())
