"""Command-line front end: generation, invariants, enumeration, certification, scans and conversion.

Exit status: 0 on success or a true verdict, 1 on a false verdict, 2 on a
usage or input error, 3 when an enumeration limit or budget is exceeded.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel
from rich.console import Console
from rich.logging import RichHandler

from topology_engine import __version__
from topology_engine.errors import BudgetExhausted, LimitExceeded, TopologyEngineError
from topology_engine.schemas.reports import RunHeader
from topology_engine.tools.certify import CertifyToolInputSchema
from topology_engine.tools.convert import ConvertToolInputSchema
from topology_engine.tools.generate import FAMILIES, GenerateToolInputSchema
from topology_engine.tools.invariants import InvariantsToolInputSchema
from topology_engine.tools.normal import NormalToolInputSchema
from topology_engine.tools.scan import ScanToolInputSchema
from topology_engine.utils.config_manager import ConfigManager
from topology_engine.utils.display import show_report
from topology_engine.utils.tool_manager import ToolManager

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_LIMITS = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _add_parameters(parser: argparse.ArgumentParser, *names: str) -> None:
    for name in names:
        parser.add_argument(f"--{name}", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="topology", description="Triangulations, normal surfaces and tightness certificates.")
    parser.add_argument("--version", action="version", version=f"topology_engine {__version__}")
    parser.add_argument("--json", action="store_true", help="Print the JSON report instead of a summary.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="Build a named triangulation.")
    gen.add_argument("family", choices=sorted(FAMILIES))
    _add_parameters(gen, "k", "n", "m", "j")
    gen.add_argument("--out", choices=("isosig", "table", "json"), default="isosig")

    inv = sub.add_parser("invariants", help="Homology, links and degrees.")
    inv.add_argument("triangulation", help="Iso signature, gluing-table file, or - for stdin.")
    inv.add_argument("--ideal-policy", choices=("truncate", "keep"), default="truncate")

    normal = sub.add_parser("normal", help="Normal surface enumeration.")
    normal_sub = normal.add_subparsers(dest="action", required=True, parser_class=_Parser)
    enum = normal_sub.add_parser("enumerate")
    enum.add_argument("triangulation")
    enum.add_argument("--which", choices=("vertex", "fundamental"), default="vertex")
    enum.add_argument("--coords", choices=("std", "quad"), default="std")
    enum.add_argument("--filter", dest="surface_filter", choices=("closed", "with-boundary", "all"), default="all")
    enum.add_argument("--allow-long", action="store_true")

    certify = sub.add_parser("certify", help="Certificates and checks.")
    certify_sub = certify.add_subparsers(dest="check", required=True, parser_class=_Parser)
    for name in ("tightness", "angles"):
        p = certify_sub.add_parser(name)
        p.add_argument("triangulation", nargs="?")
        p.add_argument("--family", choices=sorted(FAMILIES))
        _add_parameters(p, "k", "n")
    norms = certify_sub.add_parser("norms")
    _add_parameters(norms, "k", "n")
    certify_sub.add_parser("table3")

    scan = sub.add_parser("scan", help="Certify every signature in a file.")
    scan.add_argument("path")

    convert = sub.add_parser("convert", help="Gluing table <-> iso signature.")
    convert.add_argument("triangulation")
    convert.add_argument("--to", choices=("isosig", "table"), required=True)
    convert.add_argument("--simplify", action="store_true")
    return parser


def read_source(value: str) -> str:
    """``-`` reads stdin, an existing path reads the file, anything else is taken literally."""
    if value == "-":
        return sys.stdin.read()
    path = Path(value)
    if len(value) < 256 and path.is_file():
        return path.read_text(encoding="utf-8")
    return value


def _request(args: argparse.Namespace):
    """The tool name and input schema for parsed arguments."""
    if args.command == "gen":
        return "generate", GenerateToolInputSchema(family=args.family, k=args.k, n=args.n, m=args.m, j=args.j, out=args.out)
    if args.command == "invariants":
        return "invariants", InvariantsToolInputSchema(
            triangulation=read_source(args.triangulation), ideal_policy=args.ideal_policy
        )
    if args.command == "normal":
        return "normal", NormalToolInputSchema(
            triangulation=read_source(args.triangulation),
            which=args.which,
            coords=args.coords,
            surface_filter=args.surface_filter,
            allow_long=args.allow_long,
        )
    if args.command == "certify":
        triangulation = getattr(args, "triangulation", None)
        return "certify", CertifyToolInputSchema(
            check=args.check,
            triangulation=read_source(triangulation) if triangulation else None,
            family=getattr(args, "family", None),
            k=args.k if hasattr(args, "k") else None,
            n=args.n if hasattr(args, "n") else None,
        )
    if args.command == "scan":
        return "scan", ScanToolInputSchema(path=args.path)
    return "convert", ConvertToolInputSchema(
        text=read_source(args.triangulation), to=args.to, simplify=args.simplify
    )


def _emit(console: Console, report: BaseModel, as_json: bool) -> None:
    if as_json:
        print(report.model_dump_json(indent=2))
    else:
        show_report(console, report)


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def run(argv: Optional[List[str]] = None) -> int:
    """Runs one command line and returns its exit status."""
    config = ConfigManager.load_configuration()
    _configure_logging(config["log_level"])
    err = Console(stderr=True)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.print(f"[bold red]usage error:[/bold red] {exc}")
        return EXIT_USAGE

    header = RunHeader(
        version=__version__,
        seed=config["seed"],
        limits={
            "max_enum_tets": config["max_enum_tets"],
            "hilbert_budget": config["hilbert_budget"],
            "allow_long": bool(getattr(args, "allow_long", False)),
        },
    )
    err.print(header.line(), markup=False, highlight=False)

    manager = ToolManager(ConfigManager.initialize_tools(config))
    console = Console()
    try:
        tool, params = _request(args)
        result = manager.execute_tool(tool, params)
    except (LimitExceeded, BudgetExhausted) as exc:
        err.print(f"[bold yellow]limits exceeded:[/bold yellow] {exc}")
        return EXIT_LIMITS
    except (TopologyEngineError, ValueError) as exc:
        err.print(f"[bold red]error:[/bold red] {exc}")
        return EXIT_USAGE

    if tool in ("generate", "convert"):
        print(result.text)
        return EXIT_OK
    _emit(console, result.report, args.json)
    if tool == "certify":
        return EXIT_OK if result.verdict else EXIT_FALSE
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
