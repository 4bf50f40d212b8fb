"""HALRECT: derivative-free global optimization by halving rectangles."""

from .model import (
    Aggregation,
    HyperRect,
    PartitionState,
    PointStore,
    Problem,
    RunResult,
    Selection,
    SolverConfig,
    evaluate,
    measure,
    to_original,
)
from .problems import lookup, perturb
from .solver import init, iterate, percent_error, run, should_stop

__version__ = "0.1.0"

__all__ = [
    "Aggregation",
    "HyperRect",
    "PartitionState",
    "PointStore",
    "Problem",
    "RunResult",
    "Selection",
    "SolverConfig",
    "evaluate",
    "init",
    "iterate",
    "lookup",
    "measure",
    "percent_error",
    "perturb",
    "run",
    "should_stop",
    "to_original",
]
