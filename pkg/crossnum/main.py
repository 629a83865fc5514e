"""
Command-line pipeline for the crossing-number toolkit.

    crossnum cross decide|number|draw|validate
    crossnum grid gen|embed|reduce
    crossnum mso eval|interpret

Results go to stdout, progress and log records to stderr. Exit status:
0 yes / true / valid, 1 no / false / invalid, 2 budget exhausted, 3 input error.
"""

import argparse
import dataclasses
import logging
import sys
import time
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel
from rich.console import Console
from rich.logging import RichHandler

from .config import ReductionConfig, RunConfig, config
from .drawing.realize import DrawingRealizer
from .drawing.svg import SvgExporter
from .drawing.validate import DrawingValidator
from .errors import BudgetExceeded, CrossnumError
from .graphs.homeomorphism import SearchStatus
from .graphs.io import dump_graph, format_edge_list, load_graph, parse_id_list
from .graphs.multigraph import MultiGraph
from .graphs.surgery import check_edge_set
from .grid.embedding import embed_grid, is_flat
from .grid.hexgrid import hex_grid, planted_grid
from .grid.reduction import FlatGridReducer
from .mso.builders import FORBIDDEN_SET, build_chi
from .mso.evaluator import MSOEvaluator, Value
from .mso.formula import Formula, free_variables, is_set_variable, size
from .mso.interpret import interpret_crossed
from .mso.parser import parse, to_text
from .schemas import CrossingWitness, Drawing, SolveReport, ValidationReport, Verdict
from .solver.bounds import lower_bound
from .solver.crossing_solver import CrossingSolver
from .utils.validators import validate_crossing_witness

logger = logging.getLogger(__name__)
console = Console(stderr=True)

EXIT_YES, EXIT_NO, EXIT_UNKNOWN, EXIT_INPUT = 0, 1, 2, 3
_VERDICT_EXIT = {Verdict.YES: EXIT_YES, Verdict.NO: EXIT_NO, Verdict.UNKNOWN: EXIT_UNKNOWN}


class CrossingPipeline:
    """Runs one subcommand described by a RunConfig"""

    def __init__(self, run_config: RunConfig):
        self.run_config = run_config
        self._total = 0
        self._done = 0

    def dispatch(self) -> int:
        handlers = {
            ("cross", "decide"): self.decide,
            ("cross", "number"): self.number,
            ("cross", "draw"): self.draw,
            ("cross", "validate"): self.validate,
            ("grid", "gen"): self.grid_gen,
            ("grid", "embed"): self.grid_embed,
            ("grid", "reduce"): self.grid_reduce,
            ("mso", "eval"): self.mso_eval,
            ("mso", "interpret"): self.mso_interpret,
        }
        key = (self.run_config.group, self.run_config.command)
        if key not in handlers:
            raise ValueError(f"unknown command {' '.join(key)!r}")
        return handlers[key]()

    # ========== cross ==========

    def decide(self) -> int:
        """Decide k-good drawability, optionally after flat-grid contraction"""
        rc = self.run_config
        k = self._require(rc.k, "--k")
        self._begin(4 if rc.reduce else 3)

        self._step("Loading graph...")
        graph, forbidden = self._load()

        target, target_forbidden, reducer = graph, forbidden, None
        if rc.reduce:
            self._step("Contracting flat grids...")
            reducer = FlatGridReducer(ReductionConfig(k=k, r=rc.r, budget=rc.grid_config()))
            target, target_forbidden, trace = reducer.reduce_loop(graph, forbidden)
            self._detail(f"{len(trace.steps)} contraction(s), {trace.stopped}")

        self._step(f"Deciding k={k}...")
        solver = CrossingSolver(rc.solver_config())
        decide = solver.decide_naive if rc.naive else solver.decide_k_good
        report = decide(target, target_forbidden, k)
        if report.witness is not None and reducer is not None and reducer.history:
            report.witness = reducer.lift(report.witness)
        self._detail(f"verdict {report.verdict.value} after {report.nodes} node(s)")

        self._step("Writing artifacts...")
        self._write_model(rc.report, self._timed(report))
        if report.witness is not None:
            self._write_model(rc.witness, report.witness)
            if rc.drawing or rc.svg:
                self._write_drawing(graph, forbidden, report.witness, rc.drawing, rc.svg, k)

        print(report.verdict.value)
        return _VERDICT_EXIT[report.verdict]

    def number(self) -> int:
        """Exact crossing number with witness and drawing"""
        rc = self.run_config
        self._begin(3)

        self._step("Loading graph...")
        graph, _ = self._load()

        self._step("Searching crossing configurations...")
        solver = CrossingSolver(rc.solver_config())
        started = time.monotonic()
        value, witness = solver.crossing_number(graph)
        self._detail(f"crossing number {value} after {solver.nodes} node(s)")

        self._step("Writing artifacts...")
        report = SolveReport(
            verdict=Verdict.YES,
            k=value,
            witness=witness,
            lower_bound=lower_bound(graph),
            nodes=solver.nodes,
            elapsed_seconds=round(time.monotonic() - started, 6),
        )
        self._write_model(rc.report, self._timed(report))
        self._write_model(self._artifact(rc.witness, ".witness.json"), witness)
        self._write_drawing(graph, frozenset(), witness, rc.drawing, self._artifact(rc.svg, ".svg"), value)

        print(value)
        return EXIT_YES

    def draw(self) -> int:
        """Realize a witness (or a fresh optimal one) as a drawing"""
        rc = self.run_config
        self._begin(3)

        self._step("Loading graph...")
        graph, forbidden = self._load()

        if rc.witness is not None:
            self._step("Reading witness...")
            witness = CrossingWitness.model_validate_json(self._read(rc.witness))
        else:
            self._step("Searching crossing configurations...")
            _, witness = CrossingSolver(rc.solver_config()).crossing_number(graph)

        self._step("Realizing drawing...")
        drawing = self._write_drawing(
            graph,
            forbidden,
            witness,
            self._artifact(rc.drawing, ".drawing.json"),
            self._artifact(rc.svg, ".svg"),
            rc.k,
        )
        print(len(drawing.crossings))
        return EXIT_YES

    def validate(self) -> int:
        """Audit a witness and/or a drawing against (G, F)"""
        rc = self.run_config
        if rc.witness is None and rc.drawing is None:
            raise ValueError("cross validate needs --witness or --drawing")
        self._begin(2)

        self._step("Loading graph...")
        graph, forbidden = self._load()

        self._step("Auditing certificates...")
        violations: List[str] = []
        report = ValidationReport(k=rc.k)
        if rc.witness is not None:
            witness = CrossingWitness.model_validate_json(self._read(rc.witness))
            issues = validate_crossing_witness(graph, forbidden, witness, rc.k)
            violations += [f"witness: {issue}" for issue in issues]
            report = ValidationReport(crossing_count=witness.size, k=rc.k, k_good=not issues)
        if rc.drawing is not None:
            drawing = Drawing.model_validate_json(self._read(rc.drawing))
            report = DrawingValidator(graph, forbidden).validate(drawing, rc.k)
            violations += [f"drawing: {issue}" for issue in report.violations]
            if rc.k is not None and not report.violations and not report.k_good:
                violations.append(f"drawing: not {rc.k}-good with respect to the forbidden edges")

        report = report.model_copy(update={"violations": violations})
        self._write_model(rc.report, report)
        for violation in violations:
            console.print(f"  ✗ {violation}", markup=False, highlight=False)

        print("valid" if not violations else "invalid")
        return EXIT_YES if not violations else EXIT_NO

    # ========== grid ==========

    def grid_gen(self) -> int:
        """Emit H_r, or a planted instance around it"""
        rc = self.run_config
        r = self._require(rc.r, "--r")
        if rc.plant:
            logger.info("planting with seed %d", rc.seed)
            graph, _ = planted_grid(r, rc.seed, rc.pendants)
        else:
            graph = hex_grid(r).graph
        text = format_edge_list(graph) if rc.format == "edges" else dump_graph(graph) + "\n"
        self._emit(text, rc.output)
        return EXIT_YES

    def grid_embed(self) -> int:
        """Search a topological H_r in the input graph"""
        rc = self.run_config
        r = self._require(rc.r, "--r")
        self._begin(2)

        self._step("Loading graph...")
        graph, _ = self._load()

        self._step(f"Searching H_{r}...")
        result = embed_grid(graph, r, rc.grid_config())
        if result.status == SearchStatus.EXHAUSTED:
            self._detail(f"budget exhausted after {result.nodes} node(s)")
            print("unknown")
            return EXIT_UNKNOWN
        if not result.found:
            print("absent")
            return EXIT_NO

        self._detail("flat" if is_flat(result.embedding, graph) else "not flat")
        self._emit(result.embedding.model_dump_json(indent=2) + "\n", rc.output)
        return EXIT_YES

    def grid_reduce(self) -> int:
        """Contract flat grids until none is found"""
        rc = self.run_config
        k = self._require(rc.k, "--k")
        self._begin(3)

        self._step("Loading graph...")
        graph, forbidden = self._load()

        self._step("Contracting flat grids...")
        reducer = FlatGridReducer(ReductionConfig(k=k, r=rc.r, budget=rc.grid_config()))
        reduced, reduced_forbidden, trace = reducer.reduce_loop(graph, forbidden)
        self._detail(
            f"{len(trace.steps)} contraction(s), |V| {graph.num_vertices} -> {reduced.num_vertices}, {trace.stopped}"
        )

        self._step("Writing artifacts...")
        self._write_model(rc.report, trace)
        self._emit(dump_graph(reduced, reduced_forbidden) + "\n", rc.output)
        return EXIT_UNKNOWN if trace.exhausted else EXIT_YES

    # ========== mso ==========

    def mso_eval(self) -> int:
        """Evaluate a formula file on a graph"""
        rc = self.run_config
        self._begin(3)

        self._step("Loading graph...")
        graph, forbidden = self._load()

        self._step("Parsing formula...")
        formula = self._formula()
        assignment = self._assignment(graph, formula, forbidden)

        self._step("Evaluating...")
        holds = MSOEvaluator(graph, rc.mso_config()).evaluate(formula, assignment)
        print("true" if holds else "false")
        return EXIT_YES if holds else EXIT_NO

    def mso_interpret(self) -> int:
        """Print φ*(x1, x2), or χ_l built on the formula with --chi"""
        rc = self.run_config
        formula = self._formula()
        if rc.chi is not None:
            family = build_chi(rc.chi, formula)
            for name, value in family.sizes.items():
                self._detail(f"{name}: {value} node(s)")
            result = family.chi
        else:
            result = interpret_crossed(formula, rc.x1, rc.x2)
            self._detail(f"size {size(formula)} -> {size(result)}")
        self._emit(to_text(result) + "\n", rc.output)
        return EXIT_YES

    # ========== helpers ==========

    def _begin(self, total: int) -> None:
        self._total, self._done = total, 0

    def _step(self, message: str) -> None:
        self._done += 1
        console.print(f"[{self._done}/{self._total}] {message}", markup=False, highlight=False)

    @staticmethod
    def _detail(message: str) -> None:
        console.print(f"     ✓ {message}", markup=False, highlight=False)

    @staticmethod
    def _require(value, option: str):
        if value is None:
            raise ValueError(f"{option} is required for this command")
        return value

    @staticmethod
    def _read(path: Path) -> str:
        return Path(path).read_text(encoding="utf-8")

    def _load(self) -> Tuple[MultiGraph, frozenset]:
        rc = self.run_config
        path = self._require(rc.input, "--in")
        graph, forbidden = load_graph(path)
        if rc.forbid:
            forbidden = forbidden | parse_id_list(rc.forbid)
            check_edge_set(graph, forbidden)
        logger.info("loaded %s: %d vertices, %d edges, %d forbidden", path, graph.num_vertices, graph.num_edges, len(forbidden))
        return graph, frozenset(forbidden)

    def _formula(self) -> Formula:
        path = self._require(self.run_config.formula, "--formula")
        return parse(self._read(path))

    def _assignment(self, graph: MultiGraph, formula: Formula, forbidden: frozenset) -> Dict[str, Value]:
        """Values from --assign NAME=ids; a free Y defaults to the forbidden set"""
        assignment: Dict[str, Value] = {}
        for item in self.run_config.assign:
            name, sep, values = item.partition("=")
            name = name.strip()
            if not sep or not name:
                raise ValueError(f"expected NAME=VALUES in --assign, got {item!r}")
            ids = parse_id_list(values)
            if is_set_variable(name):
                assignment[name] = ids
            elif len(ids) != 1:
                raise ValueError(f"individual variable {name!r} needs exactly one id, got {values!r}")
            else:
                assignment[name] = next(iter(ids))
        if FORBIDDEN_SET in free_variables(formula) and FORBIDDEN_SET not in assignment:
            assignment[FORBIDDEN_SET] = forbidden
        return assignment

    def _artifact(self, path: Optional[Path], suffix: str) -> Path:
        if path is not None:
            return path
        stem = Path(self.run_config.input).stem
        return self.run_config.output_dir / f"{stem}{suffix}"

    def _timed(self, report: SolveReport) -> SolveReport:
        if self.run_config.timings:
            return report
        return report.model_copy(update={"elapsed_seconds": None})

    def _write_drawing(
        self,
        graph: MultiGraph,
        forbidden: frozenset,
        witness: CrossingWitness,
        drawing_path: Optional[Path],
        svg_path: Optional[Path],
        k: Optional[int],
    ) -> Drawing:
        drawing = DrawingRealizer().realize(graph, witness)
        audit = DrawingValidator(graph, forbidden).validate(drawing, k)
        if not audit.k_good:
            logger.warning("realized drawing is not %s-good: %s", k, audit.violations or "crossing budget or F")
        self._write_model(drawing_path, drawing)
        if svg_path is not None:
            self._write(svg_path, SvgExporter().to_svg(drawing, forbidden))
        return drawing

    def _write_model(self, path: Optional[Path], model: BaseModel) -> None:
        if path is not None:
            self._write(path, model.model_dump_json(indent=2) + "\n")

    @staticmethod
    def _write(path: Path, text: str) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info("wrote %s", path)

    def _emit(self, text: str, path: Optional[Path]) -> None:
        if path is None:
            sys.stdout.write(text)
        else:
            self._write(path, text)


def run(run_config: RunConfig) -> int:
    """
    Run one subcommand.

    Returns:
        Exit status (0 yes, 1 no, 2 budget exhausted, 3 input error)
    """
    try:
        return CrossingPipeline(run_config).dispatch()
    except BudgetExceeded as exc:
        logger.warning("%s", exc)
        if exc.lower is not None:
            console.print(f"     best lower bound {exc.lower}", markup=False, highlight=False)
        print("unknown")
        return EXIT_UNKNOWN
    except (CrossnumError, ValueError, OSError) as exc:
        logger.error("%s", exc)
        return EXIT_INPUT


# ========== Argument parsing ==========

def setup_logging(verbose: bool = False) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )


def _add_input(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument(
        "--in", "--graph", dest="input", type=Path, required=required,
        help="Graph file (edge list, or .json graph document)",
    )
    parser.add_argument("--forbid", help="Extra forbidden edge ids, e.g. '7,9'")


def _add_budgets(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-nodes", type=int, help="Search node budget")
    parser.add_argument("--max-seconds", type=float, help="Search time budget")
    parser.add_argument("--workers", type=int, help="Worker processes over root branches")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crossnum", description="Exact crossing numbers for small k")
    groups = parser.add_subparsers(dest="group", required=True)

    # cross
    cross = groups.add_parser("cross", help="Crossing number decisions and drawings")
    commands = cross.add_subparsers(dest="command", required=True)

    decide = commands.add_parser("decide", help="Is there a drawing with at most k crossings avoiding F?")
    _add_input(decide)
    decide.add_argument("--k", type=int, required=True)
    decide.add_argument("--reduce", action="store_true", help="Contract flat grids first")
    decide.add_argument("--r", type=int, help="Grid radius for --reduce (default 2k+2)")
    decide.add_argument("--naive", action="store_true", help="Use the unpruned pair enumeration")
    decide.add_argument("--report", type=Path, help="Write the JSON report here")
    decide.add_argument("--witness", type=Path, help="Write the witness here")
    decide.add_argument("--drawing", type=Path, help="Write the drawing JSON here")
    decide.add_argument("--svg", type=Path, help="Write the SVG drawing here")
    decide.add_argument("--timings", action="store_true", help="Keep wall-clock times in the report")
    _add_budgets(decide)

    number = commands.add_parser("number", help="Exact crossing number")
    _add_input(number)
    number.add_argument("--report", type=Path)
    number.add_argument("--witness", type=Path, help="Witness output (default: output dir)")
    number.add_argument("--drawing", type=Path)
    number.add_argument("--svg", type=Path, help="SVG output (default: output dir)")
    number.add_argument("--output-dir", type=Path, default=config.paths.output_dir)
    number.add_argument("--timings", action="store_true")
    _add_budgets(number)

    draw = commands.add_parser("draw", help="Realize a witness as a polyline drawing")
    _add_input(draw)
    draw.add_argument("--witness", type=Path, help="Witness to realize (default: an optimal one)")
    draw.add_argument("--k", type=int, help="Crossing budget for the audit")
    draw.add_argument("--drawing", type=Path, help="Drawing output (default: output dir)")
    draw.add_argument("--svg", type=Path, help="SVG output (default: output dir)")
    draw.add_argument("--output-dir", type=Path, default=config.paths.output_dir)
    _add_budgets(draw)

    check = commands.add_parser("validate", help="Audit a witness or drawing")
    _add_input(check)
    check.add_argument("--witness", type=Path)
    check.add_argument("--drawing", type=Path)
    check.add_argument("--k", type=int)
    check.add_argument("--report", type=Path)

    for sub in (decide, number, draw, check):
        _add_common(sub)

    # grid
    grid = groups.add_parser("grid", help="Hexagonal grids and flat-grid reduction")
    commands = grid.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="Print H_r")
    gen.add_argument("--r", type=int, required=True)
    gen.add_argument("--format", choices=["edges", "json"], default="edges")
    gen.add_argument("--plant", action="store_true", help="Glue a K5 at a random outer vertex")
    gen.add_argument("--pendants", type=int, default=0, help="Random pendants on inner rings (with --plant)")
    gen.add_argument("--seed", type=int, default=0, help="Seed for the planted instance")
    gen.add_argument("--output", type=Path)

    embed = commands.add_parser("embed", help="Find a topological H_r")
    _add_input(embed)
    embed.add_argument("--r", type=int, required=True)
    embed.add_argument("--output", type=Path)
    _add_budgets(embed)

    reduce = commands.add_parser("reduce", help="Contract flat grids")
    _add_input(reduce)
    reduce.add_argument("--k", type=int, required=True)
    reduce.add_argument("--r", type=int, help="Grid radius (default 2k+2)")
    reduce.add_argument("--report", type=Path, help="Write the reduction trace here")
    reduce.add_argument("--output", type=Path, help="Write the reduced graph here")
    _add_budgets(reduce)

    for sub in (gen, embed, reduce):
        _add_common(sub)

    # mso
    mso = groups.add_parser("mso", help="Monadic second-order formulas")
    commands = mso.add_subparsers(dest="command", required=True)

    evaluate = commands.add_parser("eval", help="Evaluate a formula on a graph")
    _add_input(evaluate)
    evaluate.add_argument("--formula", type=Path, required=True)
    evaluate.add_argument("--assign", action="append", default=[], help="Free variable value, e.g. X=1,2 or x=5")
    evaluate.add_argument("--max-universe", type=int, help="Largest universe for set quantifiers")

    interpret = commands.add_parser("interpret", help="Print the crossed-pair interpretation")
    interpret.add_argument("--formula", type=Path, required=True)
    interpret.add_argument("--x1", default="x1")
    interpret.add_argument("--x2", default="x2")
    interpret.add_argument("--chi", type=int, help="Build the level-l crossing formula instead")
    interpret.add_argument("--output", type=Path)

    for sub in (evaluate, interpret):
        _add_common(sub)

    return parser


def run_config_from(args: argparse.Namespace) -> RunConfig:
    values = {f.name: getattr(args, f.name) for f in dataclasses.fields(RunConfig) if hasattr(args, f.name)}
    return RunConfig(**values)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """CLI entry point"""
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    try:
        config.validate()
        run_config = run_config_from(args)
    except ValueError as exc:
        logger.error("Configuration error: %s", exc)
        return EXIT_INPUT
    return run(run_config)


def _group_main(group: str, argv: Optional[Sequence[str]]) -> int:
    rest = list(sys.argv[1:] if argv is None else argv)
    return main([group, *rest])


def cross_main(argv: Optional[Sequence[str]] = None) -> int:
    return _group_main("cross", argv)


def grid_main(argv: Optional[Sequence[str]] = None) -> int:
    return _group_main("grid", argv)


def mso_main(argv: Optional[Sequence[str]] = None) -> int:
    return _group_main("mso", argv)


if __name__ == "__main__":
    sys.exit(main())
