"""
Configuration module for the crossing-number toolkit.
Manages search budgets, worker counts, MSO limits and drawing settings.
"""

import os
from pathlib import Path
from typing import List, Optional
from dataclasses import dataclass, field
from dotenv import load_dotenv

# Load environment variables before any os.getenv() default is evaluated
env_path = Path(__file__).parent / '.env'
load_dotenv(env_path, override=False)


def _env_int(name: str, default: int) -> int:
    return int(os.getenv(name, str(default)))


def _env_float(name: str, default: float) -> float:
    return float(os.getenv(name, str(default)))


# ========== Search Budget Configuration ==========
@dataclass
class SearchBudget:
    """Node and wall-clock limits shared by every backtracking search"""

    max_nodes: int = field(default_factory=lambda: _env_int("CROSSNUM_NODE_BUDGET", 2_000_000))
    max_seconds: float = field(default_factory=lambda: _env_float("CROSSNUM_TIME_BUDGET", 300.0))

    def __post_init__(self):
        if self.max_nodes <= 0:
            raise ValueError(f"max_nodes must be positive, got {self.max_nodes}")
        if self.max_seconds <= 0:
            raise ValueError(f"max_seconds must be positive, got {self.max_seconds}")


# ========== Solver Configuration ==========
@dataclass
class SolverConfig:
    """Settings for the k-crossing search and its naive oracle"""

    budget: SearchBudget = field(default_factory=SearchBudget)

    # Worker processes over root branches (1 = deterministic single worker)
    workers: int = field(default_factory=lambda: _env_int("CROSSNUM_WORKERS", 1))

    # Largest number of candidate pair sets the naive oracle may enumerate
    naive_max_candidates: int = field(default_factory=lambda: _env_int("CROSSNUM_NAIVE_BUDGET", 500_000))

    # Audit every yes-witness before reporting it
    audit_witnesses: bool = True


# ========== Grid Configuration ==========
@dataclass
class GridConfig:
    """Settings for hexagonal grid embedding search"""

    max_nodes: int = field(default_factory=lambda: _env_int("CROSSNUM_GRID_BUDGET", 200_000))
    max_seconds: Optional[float] = None


# ========== Reduction Configuration ==========
@dataclass
class ReductionConfig:
    """Target crossing bound and grid radius for the flat-grid contraction"""

    k: int = 1
    r: Optional[int] = None
    budget: GridConfig = field(default_factory=GridConfig)

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"k must be non-negative, got {self.k}")
        if self.r is None:
            self.r = 2 * self.k + 2
        if self.r < 2:
            raise ValueError(f"grid radius must be at least 2, got {self.r}")

    @property
    def experimental(self) -> bool:
        """Radii below 2k+2 carry no decision-preservation guarantee"""
        return self.r < 2 * self.k + 2


# ========== MSO Configuration ==========
@dataclass
class MSOConfig:
    """Limits for naive MSO evaluation"""

    max_universe: int = field(default_factory=lambda: _env_int("CROSSNUM_MSO_UNIVERSE", 24))
    max_steps: int = field(default_factory=lambda: _env_int("CROSSNUM_MSO_STEPS", 50_000_000))


# ========== Drawing Configuration ==========
@dataclass
class DrawingConfig:
    """SVG rendering settings"""

    scale: int = 40
    margin: int = 30
    vertex_radius: float = 5.0
    crossing_radius: float = 4.0
    stroke_width: float = 1.5
    vertex_color: str = "#1f3b73"
    edge_color: str = "#444444"
    forbidden_color: str = "#2a9d8f"
    crossing_color: str = "#d62828"


# ========== Path Configuration ==========
@dataclass
class PathConfig:
    """Default output location for CLI artifacts"""

    output_dir: Path = field(default_factory=lambda: Path(os.getenv("CROSSNUM_OUTPUT_DIR", "output")))


# ========== Run Configuration ==========
@dataclass
class RunConfig:
    """One CLI invocation: subcommand, inputs, budgets and artifact paths"""

    group: str
    command: str
    input: Optional[Path] = None
    k: Optional[int] = None
    forbid: Optional[str] = None
    r: Optional[int] = None

    # artifacts (inputs for cross draw/validate, outputs elsewhere)
    report: Optional[Path] = None
    witness: Optional[Path] = None
    drawing: Optional[Path] = None
    svg: Optional[Path] = None
    output: Optional[Path] = None
    output_dir: Path = field(default_factory=lambda: PathConfig().output_dir)

    # budgets; None keeps the environment defaults
    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None
    max_universe: Optional[int] = None
    workers: Optional[int] = None

    reduce: bool = False
    naive: bool = False
    timings: bool = False
    verbose: bool = False

    # grid gen
    format: str = "edges"
    plant: bool = False
    pendants: int = 0
    seed: int = 0

    # mso
    formula: Optional[Path] = None
    assign: List[str] = field(default_factory=list)
    x1: str = "x1"
    x2: str = "x2"
    chi: Optional[int] = None

    def __post_init__(self):
        if self.k is not None and self.k < 0:
            raise ValueError(f"k must be non-negative, got {self.k}")
        for name in ("max_nodes", "max_seconds", "max_universe", "workers"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"{name.replace('_', '-')} must be positive, got {value}")
        if self.format not in ("edges", "json"):
            raise ValueError(f"unknown graph format {self.format!r}")
        if self.pendants < 0:
            raise ValueError(f"pendants must be non-negative, got {self.pendants}")

    def solver_config(self) -> SolverConfig:
        budget = SearchBudget()
        if self.max_nodes is not None:
            budget.max_nodes = self.max_nodes
        if self.max_seconds is not None:
            budget.max_seconds = self.max_seconds
        solver = SolverConfig(budget=budget)
        if self.workers is not None:
            solver.workers = self.workers
        return solver

    def grid_config(self) -> GridConfig:
        grid = GridConfig()
        if self.max_nodes is not None:
            grid.max_nodes = self.max_nodes
        if self.max_seconds is not None:
            grid.max_seconds = self.max_seconds
        return grid

    def mso_config(self) -> MSOConfig:
        mso = MSOConfig()
        if self.max_universe is not None:
            mso.max_universe = self.max_universe
        return mso


# ========== Global Configuration Instance ==========
class Config:
    """Main configuration object"""

    def __init__(self):
        self.solver = SolverConfig()
        self.grid = GridConfig()
        self.mso = MSOConfig()
        self.drawing = DrawingConfig()
        self.paths = PathConfig()

    def validate(self) -> bool:
        """Validate configuration"""
        if self.solver.workers < 1:
            raise ValueError("CROSSNUM_WORKERS must be at least 1.")
        if self.solver.naive_max_candidates <= 0:
            raise ValueError("CROSSNUM_NAIVE_BUDGET must be positive.")
        if self.grid.max_nodes <= 0:
            raise ValueError("CROSSNUM_GRID_BUDGET must be positive.")
        if self.mso.max_universe <= 0 or self.mso.max_steps <= 0:
            raise ValueError("MSO budgets must be positive.")
        return True


# Create global config instance
config = Config()
