import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from src.Calculus.utils.errors import ExplorationBoundExceeded, IndeterminateError, SynthesisError
from src.Commands.run_commands import commands
from src.Testing.utils.types import (
    AxiomClass,
    AxiomId,
    AxiomTarget,
    LeqMethod,
    OutputFormat,
    RunConfig,
)
from src.Calculus.utils.types import CalculusId
from src.config.settings import settings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BOUND = 2
EXIT_INTERNAL = 3

def _split(text: Optional[str]) -> Optional[List[str]]:
    if text is None:
        return None
    return [x.strip() for x in text.split(",") if x.strip()]

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mustpreorder",
        description="Decide the must-preorder for CCS, ACCS, VCCS and VACCS processes.",
    )
    parser.add_argument("--calculus", choices=[c.value for c in CalculusId], default=settings.DEFAULT_CALCULUS)
    parser.add_argument("--val", default=",".join(settings.DEFAULT_VAL), help="value domain, e.g. 0,1")
    parser.add_argument("--bound", type=int, default=settings.EXPLORATION_BOUND, help="maximum number of explored states")
    parser.add_argument("--abstraction", default=None, help="preset name or table file")
    parser.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat], default=settings.OUTPUT_FORMAT)
    parser.add_argument("--mail-capacity", type=int, default=settings.MAIL_CAPACITY)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="echo the canonical form of every definition")
    p.add_argument("file", help="definition file, - for stdin")

    p = sub.add_parser("lts", help="explore and print a transition system")
    p.add_argument("file")
    p.add_argument("name", nargs="?")
    p.add_argument("--target", choices=[t.value for t in AxiomTarget], default=AxiomTarget.TERM.value)
    p.add_argument("--channels", default=None)

    p = sub.add_parser("must", help="does the server pass the client test")
    p.add_argument("file")
    p.add_argument("server")
    p.add_argument("client")

    p = sub.add_parser("leq", help="is P below Q in the must-preorder")
    p.add_argument("file")
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("--method", choices=[m.value for m in LeqMethod], default=LeqMethod.ALT.value)
    p.add_argument("--tests", default=None, help="comma separated definitions added to the sampled tests")

    p = sub.add_parser("distinguish", help="synthesize a test passed by P and failed by Q")
    p.add_argument("file")
    p.add_argument("p")
    p.add_argument("q")

    p = sub.add_parser("axioms", help="check the non-blocking axioms on an explored graph")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("name", nargs="?")
    p.add_argument("--target", choices=[t.value for t in AxiomTarget], default=AxiomTarget.TERM.value)
    p.add_argument("--class", dest="axiom_class", choices=[c.value for c in AxiomClass], default=None)
    p.add_argument("--axiom", action="append", choices=[a.value for a in AxiomId], default=[])
    p.add_argument("--channels", default=None)
    p.add_argument("--mail-capacity", type=int, default=argparse.SUPPRESS)
    return parser

def _read(path: Optional[str]) -> str:
    if path is None:
        return ""
    if path == "-":
        return sys.stdin.read()
    with open(path) as f:
        return f.read()

def run(args: argparse.Namespace):
    config = RunConfig(
        calculus=args.calculus,
        val=args.val,
        bound=args.bound,
        mail_capacity=args.mail_capacity,
        abstraction=args.abstraction,
        output_format=args.output_format,
    )
    text = _read(args.file)
    if args.command == "parse":
        return config, commands.cmd_parse(text, config)
    if args.command == "lts":
        return config, commands.cmd_lts(text, args.name, AxiomTarget(args.target), config, _split(args.channels))
    if args.command == "must":
        return config, commands.cmd_must(text, args.server, args.client, config)
    if args.command == "leq":
        return config, commands.cmd_leq(text, args.p, args.q, LeqMethod(args.method), config, _split(args.tests) or [])
    if args.command == "distinguish":
        return config, commands.cmd_distinguish(text, args.p, args.q, config)
    axiom_class = AxiomClass(args.axiom_class) if args.axiom_class else None
    return config, commands.cmd_axioms(
        text,
        args.name,
        AxiomTarget(args.target),
        config,
        axiom_class,
        [AxiomId(a) for a in args.axiom],
        _split(args.channels),
    )

def main(argv: Optional[List[str]] = None) -> int:
    logging.getLogger().setLevel(settings.LOG_LEVEL)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2 on bad usage, which is reserved for bound errors
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        config, doc = run(args)
    except (ExplorationBoundExceeded, IndeterminateError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BOUND
    except SynthesisError as e:
        logger.error(f"Internal failure: {e}")
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, ValidationError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if config.output_format is OutputFormat.STRUCTURED:
        print(doc.model_dump_json(indent=2))
    else:
        print(commands.render_human(doc))
    return EXIT_OK

if __name__ == "__main__":
    sys.exit(main())
