"""Command-line router."""
import argparse

from ivhfs.cli import commands
from ivhfs.core.config import settings

# (name, handler, positional arguments, help)
COMMANDS = (
    ("validate", commands.validate, ("topology",), "check the topology axioms"),
    ("canon", commands.canon, ("set",), "print a set in canonical form"),
    ("complement", commands.complement, ("set",), "complement of a set (normalized)"),
    ("union", commands.union, ("left", "right"), "union of two sets"),
    ("intersect", commands.intersect, ("left", "right"), "intersection of two sets"),
    ("ring-sum", commands.ring_sum, ("left", "right"), "ring sum on the shared support"),
    ("ring-product", commands.ring_product, ("left", "right"), "ring product on the shared support"),
    ("subset", commands.subset, ("left", "right"), "is the left set inside the right one"),
    ("equal", commands.equal, ("left", "right"), "are two sets equal"),
    ("score", commands.score_cells, ("set",), "score interval of every cell"),
    ("closure", commands.closure, ("topology", "set"), "closure of a set"),
    ("interior", commands.interior, ("topology", "set"), "interior of a set"),
    ("closed-sets", commands.closed_sets, ("topology",), "complements of every member"),
    ("compare", commands.compare, ("first", "second"), "coarser, finer, equal or incomparable"),
    ("point", commands.point, ("set",), "is the set a soft point"),
    ("in", commands.point_in, ("point", "set"), "does the point lie in the set"),
    ("nbd", commands.nbd, ("topology", "set", "point"), "is the set a neighborhood of the point"),
    ("nbd-system", commands.nbd_system, ("topology", "point"), "neighborhoods of a point among members and complements"),
    ("nbd-of-set", commands.nbd_of_set, ("topology", "set", "inner"), "is the set a neighborhood of the inner set"),
    ("fixtures", commands.list_fixtures, (), "list the bundled fixtures"),
)

NO_WORKSPACE = {"fixtures"}


def _common_options() -> argparse.ArgumentParser:
    # Defaults are suppressed so flags given before and after the subcommand merge
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group()
    source.add_argument("--workspace", metavar="FILE", default=argparse.SUPPRESS, help="workspace JSON file")
    source.add_argument("--fixture", metavar="NAME", default=argparse.SUPPRESS, help="bundled fixture name")
    common.add_argument(
        "--profile",
        choices=["componentwise", "rank"],
        default=argparse.SUPPRESS,
        help=f"order profile (default {settings.DEFAULT_PROFILE})",
    )
    common.add_argument(
        "--format",
        dest="output_format",
        choices=["text", "machine"],
        default=argparse.SUPPRESS,
        help=f"output format (default {settings.OUTPUT_FORMAT})",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog=settings.APP_NAME,
        description="Interval-valued hesitant fuzzy soft sets and their topologies",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.APP_VERSION}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    for name, handler, positionals, help_text in COMMANDS:
        subparser = subparsers.add_parser(name, parents=[common], help=help_text)
        for positional in positionals:
            subparser.add_argument(positional)
        subparser.set_defaults(handler=handler)
    return parser
