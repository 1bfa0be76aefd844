"""
Command-line entry point: ``monoideal eval|run|repl|gen|selftest``.

Exit codes: 0 success, 1 parse error, 2 semantic or precondition error,
3 resource limit.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from .. import __version__
from ..classes.types import IdealClass, check_characteristic
from ..config.settings import settings
from ..core.errors import MonoidealError
from ..generators.instances import gen_ideal
from ..models.schemas import IdealModel
from ..monitoring.analytics import OperationAnalytics
from ..utils.helpers import dump_json, format_error, setup_logging
from .goldens import run_goldens
from .render import render
from .session import Session, SessionConfig

logger = logging.getLogger(__name__)

PROMPT = "monoideal> "


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, help="field characteristic, 0 or a prime")
    common.add_argument("--kmax", type=int, help="power bound for stable tests")
    common.add_argument("--max-terms", type=int, help="intermediate monomial budget")
    common.add_argument("--seed", type=int, help="seed for random instances")
    common.add_argument("--format", choices=["text", "json"], help="output format")
    common.add_argument("--log-level", help="logging level, e.g. DEBUG")
    common.add_argument("--metrics-file", type=Path, help="write metrics here")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="monoideal", description="Exact computations with monomial ideals."
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    evaluate = commands.add_parser("eval", parents=[common], help="evaluate a script")
    evaluate.add_argument("-e", "--expression", required=True, help="script text")

    run = commands.add_parser("run", parents=[common], help="run a script file")
    run.add_argument("file", type=Path)

    commands.add_parser("repl", parents=[common], help="interactive session")

    gen = commands.add_parser("gen", parents=[common], help="random ideal as JSON")
    gen.add_argument(
        "--class",
        dest="ideal_class",
        required=True,
        choices=[c.value for c in IdealClass],
    )
    gen.add_argument("--n", type=int, required=True, help="number of variables")
    gen.add_argument("--max-deg", type=int, default=4)
    gen.add_argument("--max-gens", type=int, default=4)

    commands.add_parser("selftest", parents=[common], help="run the worked examples")
    return parser


def _print_values(values: List, output_format: str) -> None:
    for value in values:
        print(render(value, output_format))


def _report(error: Exception, output_format: str) -> None:
    if output_format == "json":
        print(dump_json(format_error(error)), file=sys.stderr)
    elif isinstance(error, MonoidealError):
        print(f"error[{error.code}]: {error}", file=sys.stderr)
    else:
        print(f"error: {error}", file=sys.stderr)


def cmd_eval(args: argparse.Namespace, session: Session) -> int:
    _print_values(session.run(args.expression), session.config.output_format)
    return 0


def cmd_run(args: argparse.Namespace, session: Session) -> int:
    logger.info(f"Running script {args.file}")
    script = args.file.read_text()
    _print_values(session.run(script), session.config.output_format)
    return 0


def cmd_repl(args: argparse.Namespace, session: Session) -> int:
    interactive = sys.stdin.isatty()
    while True:
        try:
            line = input(PROMPT if interactive else "")
        except EOFError:
            break
        if line.strip() in ("quit", "exit"):
            break
        if not line.strip():
            continue
        try:
            _print_values(session.run(line), session.config.output_format)
        except MonoidealError as error:
            _report(error, session.config.output_format)
    return 0


def cmd_gen(args: argparse.Namespace, session: Session) -> int:
    ideal = gen_ideal(
        args.ideal_class,
        args.n,
        args.max_deg,
        args.max_gens,
        session.config.seed,
        session.config.characteristic,
    )
    print(dump_json(IdealModel.from_ideal(ideal).model_dump()))
    return 0


def cmd_selftest(args: argparse.Namespace, session: Session) -> int:
    results = run_goldens()
    for result in results:
        if result.passed:
            print(f"PASS {result.golden.name}")
        else:
            print(
                f"FAIL {result.golden.name}: expected "
                f"{list(result.golden.expected)}, got {list(result.actual)}"
            )
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed} passed, {failed} failed")
    return 0 if failed == 0 else 2


COMMANDS: Dict[str, Callable[[argparse.Namespace, Session], int]] = {
    "eval": cmd_eval,
    "run": cmd_run,
    "repl": cmd_repl,
    "gen": cmd_gen,
    "selftest": cmd_selftest,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)
    output_format = args.format or settings.OUTPUT_FORMAT
    analytics = OperationAnalytics()
    previous: Dict = {}
    try:
        if args.char is not None:
            check_characteristic(args.char)
        previous = settings.overrides(
            CHARACTERISTIC=args.char,
            KMAX=args.kmax,
            MAX_TERMS=args.max_terms,
            SEED=args.seed,
            OUTPUT_FORMAT=args.format,
        )
        session = Session(SessionConfig.from_settings(), analytics)
        return COMMANDS[args.command](args, session)
    except MonoidealError as error:
        logger.debug(f"{args.command} failed with {error.code}")
        _report(error, output_format)
        return error.exit_code
    except OSError as error:
        logger.error(f"Cannot read input: {error}")
        _report(error, output_format)
        return 2
    except Exception as error:
        logger.error(f"Unexpected error in {args.command}: {error}", exc_info=True)
        _report(error, output_format)
        return 2
    finally:
        settings.overrides(**previous)
        if args.metrics_file:
            analytics.export(str(args.metrics_file))
        logger.debug(f"Operation summary: {analytics.summary()}")


if __name__ == "__main__":
    sys.exit(main())
