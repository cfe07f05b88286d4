"""
Command-line entry point: python -m ivhfs.main COMMAND ...
Exit status 0 for true or valid results, 1 for false or invalid ones, 2 for errors.
"""
import sys
from typing import Optional, Sequence, TextIO

import structlog
from pydantic import ValidationError

from ivhfs.cli.render import describe_error, render, render_error_machine
from ivhfs.cli.router import NO_WORKSPACE, build_parser
from ivhfs.core.config import settings
from ivhfs.core.exceptions import IvhfsError, SchemaError, WorkspaceError
from ivhfs.core.logging import setup_logging
from ivhfs.fixtures import load_fixture
from ivhfs.models.interval import OrderProfile
from ivhfs.services.workspace_service import load_workspace

logger = structlog.get_logger(__name__)

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_ERROR = 2


def _load(args):
    if hasattr(args, "workspace"):
        return load_workspace(args.workspace)
    if hasattr(args, "fixture"):
        return load_fixture(args.fixture)
    raise WorkspaceError("No workspace given; pass --workspace FILE or --fixture NAME")


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    profile = OrderProfile.parse(getattr(args, "profile", settings.DEFAULT_PROFILE))
    output_format = getattr(args, "output_format", settings.OUTPUT_FORMAT)

    try:
        workspace = None if args.command in NO_WORKSPACE else _load(args)
        outcome = args.handler(args, workspace, profile)
    except (IvhfsError, ValueError) as exc:
        if isinstance(exc, IvhfsError):
            error = exc
        elif isinstance(exc, ValidationError):
            error = SchemaError("Invalid value", {"errors": [e["msg"] for e in exc.errors()]})
        else:
            error = SchemaError(str(exc))
        kind, message = describe_error(error)
        logger.debug("Command failed", command=args.command, kind=kind)
        stderr.write(f"error: {kind}: {message}\n")
        if output_format == "machine":
            stdout.write(render_error_machine(args.command, profile, error))
        return EXIT_ERROR

    stdout.write(render(outcome, profile, output_format))
    return EXIT_TRUE if outcome.ok else EXIT_FALSE


def main():
    setup_logging()
    sys.exit(run())


if __name__ == "__main__":
    main()
