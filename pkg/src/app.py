"""
This is the main file that runs the command-line toolkit.
"""

import argparse
import json
import logging
import os
import re
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Literal, Optional, Sequence

from dotenv import load_dotenv
from jinja2 import Template
from pydantic import BaseModel, Field, field_validator, model_validator

from certifiers import Certificate
from certifiers.main import certify
from engine import ENGINES, TraceStep, search
from graphs import (
    Graph,
    VertexOrdering,
    graph_to_text,
    ordering_to_text,
    parse_ordering,
    read_graph,
    read_ordering,
)
from hierarchy import (
    ATLAS_MAX_N,
    DEFAULT_LABEL_UNIVERSE,
    MAX_HIERARCHY_UNIVERSE,
    layered_fixture_check,
    load_corpus,
    small_graph_corpus,
    verify_hierarchy,
    witness_graph,
)
from labels import LabelOrder, parse_order
from multisweep import (
    gen_permutation_graph,
    gen_unit_interval_graph,
    is_cocomp_ordering,
    is_unit_interval_ordering,
    sweep_sequence,
)

__version__ = "1.0.0"

COMMANDS = ("search", "certify", "multisweep", "hierarchy", "witness")
TEMPLATE_DIR = Path(__file__).resolve().parent.parent / "templates"
IDENTITY = "identity"

EXIT_ACCEPT = 0
EXIT_REJECT = 1
EXIT_INPUT_ERROR = 2

logger = logging.getLogger(__name__)


def render(name: str, **context: Any) -> str:
    """Render templates/<name>.txt with the given context."""
    with open(TEMPLATE_DIR / f"{name}.txt", "r", encoding="utf-8") as file:
        template = Template(file.read(), trim_blocks=True, lstrip_blocks=True)
    return template.render(context)


def parse_label_argument(text: str) -> List[int]:
    """A label given as "1 3", "1,3" or "" for the empty set."""
    return [int(token) for token in re.split(r"[\s,]+", text.strip()) if token]


def _is_file(argument: str) -> bool:
    try:
        return Path(argument).is_file()
    except OSError:
        return False


class CommandConfig(BaseModel):
    """
    Validated command-line configuration; checked in full before any
    computation starts.
    """

    command: Literal["search", "certify", "multisweep", "hierarchy", "witness"]
    graph: Optional[Path] = None
    order: Optional[str] = None
    engine: Literal["ref", "fast", "auto"] = "auto"
    output_format: Literal["text", "json"] = "text"
    tau: str = IDENTITY
    ordering: Optional[str] = None
    seed: int = 0
    trace: bool = False
    full_table: bool = False
    sweeps: int = Field(3, ge=0)
    check: Optional[Literal["unit-interval", "cocomp"]] = None
    seed_ordering: Optional[str] = None
    generate: Optional[Literal["unit-interval", "permutation"]] = None
    n: int = Field(50, ge=1)
    max_label: int = Field(DEFAULT_LABEL_UNIVERSE, ge=0, le=MAX_HIERARCHY_UNIVERSE)
    corpus: Optional[Path] = None
    corpus_max_n: int = Field(5, ge=0, le=ATLAS_MAX_N)
    a: str = ""
    b: str = ""
    p: Optional[int] = None
    graph_out: Optional[Path] = None
    ordering_out: Optional[Path] = None

    @field_validator("order")
    @classmethod
    def _known_order(cls, token: Optional[str]) -> Optional[str]:
        if token is not None:
            parse_order(token)
        return token

    @model_validator(mode="after")
    def _required_inputs(self) -> "CommandConfig":
        if self.command in ("search", "certify", "witness") and self.order is None:
            raise ValueError(f"{self.command} requires --order")
        if self.command in ("search", "certify") and self.graph is None:
            raise ValueError(f"{self.command} requires --graph")
        if self.command == "certify" and self.ordering is None:
            raise ValueError("certify requires --ordering")
        if self.command == "multisweep" and (self.graph is None) == (
            self.generate is None
        ):
            raise ValueError(
                "multisweep requires exactly one of --graph and --generate"
            )
        return self


class App:
    """
    Class to run one validated command.
    """

    def __init__(self, config: CommandConfig) -> None:
        self.config = config
        self.order: LabelOrder = parse_order(config.order or "lbfs")

    def run(self) -> int:
        """Dispatch to the command handler and return the exit code."""
        handlers: Dict[str, Callable[[], int]] = {
            "search": self.run_search_cmd,
            "certify": self.run_certify_cmd,
        }
        return handlers.get(self.config.command, self.run_remaining_cmds)()

    def _read_graph(self) -> Graph:
        assert self.config.graph is not None
        return read_graph(self.config.graph)

    def _ordering(self, argument: str, n: int) -> VertexOrdering:
        """identity, an ordering file, or an inline permutation."""
        if argument == IDENTITY:
            return VertexOrdering.identity(n)
        if _is_file(argument):
            return read_ordering(argument, n)
        return parse_ordering(argument, n)

    def _json(self) -> bool:
        return self.config.output_format == "json"

    def _emit_certificate(self, certificate: Certificate) -> int:
        if self._json():
            print(certificate.to_json())
        else:
            print(render("certificate", certificate=certificate), end="")
        return EXIT_ACCEPT if certificate.accepted else EXIT_REJECT

    def run_search_cmd(self) -> int:
        """Print the ordering produced under the tie-break ordering."""
        graph = self._read_graph()
        tau = self._ordering(self.config.tau, graph.n)
        steps: List[TraceStep] = []
        result = search(
            graph,
            self.order,
            tau,
            self.config.engine,
            trace=steps.append if self.config.trace else None,
        )
        if self._json():
            output: Dict[str, Any] = {
                "ordering": list(result.ordering),
                "engine": result.engine,
            }
            if result.fallback_reason:
                output["fallback"] = result.fallback_reason
            if self.config.trace:
                output["trace"] = steps
            print(json.dumps(output))
            return EXIT_ACCEPT
        for step in steps:
            print(render("trace", step=step), end="")
        print(ordering_to_text(result.ordering))
        return EXIT_ACCEPT

    def run_certify_cmd(self) -> int:
        """Certify the given ordering; exit 1 on reject."""
        assert self.config.ordering is not None
        graph = self._read_graph()
        sigma = self._ordering(self.config.ordering, graph.n)
        certificate = certify(
            graph, self.order, sigma, self.config.engine, self.config.full_table
        )
        return self._emit_certificate(certificate)

    def run_remaining_cmds(self) -> int:
        """multisweep, hierarchy and witness."""
        if self.config.command == "multisweep":
            return self._run_multisweep()
        if self.config.command == "hierarchy":
            return self._run_hierarchy()
        return self._run_witness()

    def _sweep_graph(self) -> Graph:
        if self.config.generate == "unit-interval":
            return gen_unit_interval_graph(self.config.n, self.config.seed)
        if self.config.generate == "permutation":
            return gen_permutation_graph(self.config.n, self.config.seed)
        return self._read_graph()

    def _run_multisweep(self) -> int:
        graph = self._sweep_graph()
        seed = self._ordering(self.config.seed_ordering or IDENTITY, graph.n)
        trace = sweep_sequence(
            graph, self.order, seed, self.config.sweeps, self.config.engine
        )
        orderings = trace["orderings"]
        certificate: Optional[Certificate] = None
        if self.config.check == "unit-interval":
            certificate = is_unit_interval_ordering(graph, orderings[-1])
        elif self.config.check == "cocomp":
            certificate = is_cocomp_ordering(graph, orderings[-1])
        for i, sigma in enumerate(orderings):
            if self._json():
                print(json.dumps({"sweep": i, "ordering": list(sigma)}))
            else:
                print(f"sigma_{i}: {ordering_to_text(sigma)}")
        if certificate is None:
            return EXIT_ACCEPT
        return self._emit_certificate(certificate)

    def _run_hierarchy(self) -> int:
        if self.config.corpus is not None:
            corpus = load_corpus(self.config.corpus)
        elif self.config.corpus_max_n:
            corpus = small_graph_corpus(self.config.corpus_max_n)
        else:
            corpus = []
        report = verify_hierarchy(self.config.max_label, corpus, seed=self.config.seed)
        layered = layered_fixture_check()
        if self._json():
            print(json.dumps({"hierarchy": report, "layered": layered}))
        else:
            print(render("hierarchy", report=report), end="")
            print(render("layered", layered=layered), end="")
        consistent = (
            report["hasse_matches"]
            and not report["ordering_failures"]
            and layered["contradiction"]
        )
        return EXIT_ACCEPT if consistent else EXIT_REJECT

    def _run_witness(self) -> int:
        a = parse_label_argument(self.config.a)
        b = parse_label_argument(self.config.b)
        p = self.config.p if self.config.p is not None else max(a + b, default=0) + 2
        graph, sigma = witness_graph(self.order, a, b, p)
        if self._json():
            print(
                json.dumps(
                    {
                        "n": graph.n,
                        "edges": [[u, v] for u, v in graph.edges()],
                        "ordering": list(sigma),
                    }
                )
            )
            return EXIT_ACCEPT
        graph_text = graph_to_text(graph)
        ordering_text = ordering_to_text(sigma) + "\n"
        if self.config.graph_out is not None:
            self.config.graph_out.write_text(graph_text, encoding="utf-8")
            logger.info("wrote witness graph to %s", self.config.graph_out)
        else:
            print(graph_text, end="")
        if self.config.ordering_out is not None:
            self.config.ordering_out.write_text(ordering_text, encoding="utf-8")
            logger.info("wrote witness ordering to %s", self.config.ordering_out)
        else:
            print(ordering_text, end="")
        return EXIT_ACCEPT


def build_parser() -> argparse.ArgumentParser:
    """The argument parser with one subcommand per toolkit operation."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", help="label order token, e.g. lbfs or meet:bfs+dfs")
    common.add_argument("--engine", choices=ENGINES, help="search engine")
    common.add_argument(
        "--format", dest="output_format", choices=("text", "json"), help="output format"
    )
    common.add_argument("--seed", type=int, help="seed for generators and tie-breaks")
    common.add_argument("--verbose", action="store_true", help="log at DEBUG level")

    parser = argparse.ArgumentParser(description="Tie-breaking label search toolkit.")
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    search_cmd = commands.add_parser("search", parents=[common], help="run a search")
    search_cmd.add_argument("--graph", type=Path, help="edge-list file")
    search_cmd.add_argument("--tau", help='tie-break: "identity", a file or "1 2 3"')
    search_cmd.add_argument("--trace", action="store_true", help="print every step")

    certify_cmd = commands.add_parser(
        "certify", parents=[common], help="certify an ordering"
    )
    certify_cmd.add_argument("--graph", type=Path, help="edge-list file")
    certify_cmd.add_argument("--ordering", help='"identity", a file or "1 2 3"')
    certify_cmd.add_argument(
        "--full-table",
        dest="full_table",
        action="store_true",
        help="attach the pattern table",
    )
    certify_cmd.add_argument(
        "--no-table",
        dest="full_table",
        action="store_false",
        help="stream pattern pairs",
    )

    sweep_cmd = commands.add_parser(
        "multisweep", parents=[common], help="repeated sweeps"
    )
    sweep_cmd.add_argument("--graph", type=Path, help="edge-list file")
    sweep_cmd.add_argument("--generate", choices=("unit-interval", "permutation"))
    sweep_cmd.add_argument("--n", type=int, help="size of a generated graph")
    sweep_cmd.add_argument("--sweeps", type=int, help="number of sweeps")
    sweep_cmd.add_argument("--check", choices=("unit-interval", "cocomp"))
    sweep_cmd.add_argument("--seed-ordering", help="ordering for sigma_0")

    hierarchy_cmd = commands.add_parser(
        "hierarchy", parents=[common], help="verify extensions"
    )
    hierarchy_cmd.add_argument("--max-label", type=int, help="label universe 1..u")
    hierarchy_cmd.add_argument(
        "--corpus", type=Path, help="directory of edge-list files"
    )
    hierarchy_cmd.add_argument(
        "--corpus-max-n", type=int, help="atlas graphs up to n, 0 for none"
    )

    witness_cmd = commands.add_parser(
        "witness", parents=[common], help="build a witness graph"
    )
    witness_cmd.add_argument("--A", dest="a", help='label A, e.g. "1 3"')
    witness_cmd.add_argument("--B", dest="b", help="label B")
    witness_cmd.add_argument("--p", type=int, help="number of vertices")
    witness_cmd.add_argument("--graph-out", type=Path)
    witness_cmd.add_argument("--ordering-out", type=Path)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point for the application.
    """
    load_dotenv()
    args = build_parser().parse_args(argv)
    options = {
        key: value
        for key, value in vars(args).items()
        if value is not None and key != "verbose"
    }
    try:
        level = (
            "DEBUG"
            if args.verbose
            else os.getenv("TBLS_LOG_LEVEL", "WARNING").upper()
        )
        logging.basicConfig(
            level=level,
            format="%(asctime)s - %(levelname)s - %(name)s - %(message)s",
            stream=sys.stderr,
        )
        return App(CommandConfig(**options)).run()
    except (ValueError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
