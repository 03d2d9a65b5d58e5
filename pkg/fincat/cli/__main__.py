import argparse
import logging
import sys

from fincat.category import Verdict
from fincat.cli._commands import COMMANDS, run_command
from fincat.cli._report import FORMATS, INPUT_ERROR, Report
from fincat.cli._workspace import parse_workspace
from fincat.errors import FincatError, ValidationError, WorkspaceSyntaxError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fincat",
        description="Fundamental groups, homology and Lascar groups of finite categories.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("files", nargs="*", help="workspace files (JSON)")
    parser.add_argument("--category", help="category name, from a file or the bundled corpus")
    parser.add_argument("--complex", help="simplicial complex name")
    parser.add_argument("--basepoint", help="basepoint object of pi1")
    parser.add_argument(
        "--identify", type=int, metavar="N",
        help="enumerate pi1 with up to N cosets and name the group")
    parser.add_argument(
        "--sub", help="comma-separated small objects, or size<=k for U0..Uk")
    parser.add_argument("--at", help="monster object(s), or codomain objects for quillen-a")
    parser.add_argument("--property", action="append", help="property to decide (repeatable)")
    parser.add_argument("--functor", action="append", help="functor name (repeatable)")
    parser.add_argument(
        "--transformation", action="append", help="transformation name (repeatable)")
    parser.add_argument("--side", choices=("Slice", "Fiber"), default="Slice")
    parser.add_argument(
        "--span", action="append", help="span as 'A,f,g' or 'f,g' (repeatable)")
    parser.add_argument("--steps", type=int, default=1, help="amalgamation rounds")
    parser.add_argument(
        "--normal-closure", action="store_true",
        help="replace a non-normal Lst by its normal closure")
    parser.add_argument("--max-dim", type=int)
    parser.add_argument("--max-cosets", type=int)
    parser.add_argument("--max-objects", type=int)
    parser.add_argument("--format", choices=FORMATS, default="text")
    parser.add_argument("--verbose", "-v", action="count", default=0)
    return parser


def _input_error(command, flags, error) -> Report:
    data = {"error": str(error), "type": type(error).__name__}
    witness = getattr(error, "witness", None)
    if witness:
        data["witness"] = witness
    return Report(command, flags, None, data)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(
            level=logging.DEBUG if args.verbose > 1 else logging.INFO,
            format="%(levelname)s %(name)s: %(message)s")
    flags = {
        key: value for key, value in vars(args).items()
        if key not in ("command", "files", "format", "verbose")}

    try:
        workspace = parse_workspace(args.files)
        report = run_command(workspace, args.command, flags)
        code = report.exit_code
    except WorkspaceSyntaxError as error:
        report, code = _input_error(args.command, flags, error), INPUT_ERROR
    except ValidationError as error:
        report = _input_error(args.command, flags, error)
        if args.command == "validate":
            report.verdict = Verdict.FAILS
            code = report.exit_code
        else:
            code = INPUT_ERROR
    except (FincatError, OSError, ValueError) as error:
        report, code = _input_error(args.command, flags, error), INPUT_ERROR
    print(report.render(args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
