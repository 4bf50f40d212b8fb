"""The optimization driver: initialize, select, subdivide, repeat."""

from __future__ import annotations

import math
from typing import Callable, Optional

from .errors import InternalError
from .model import (
    PartitionState,
    Problem,
    RunResult,
    SolverConfig,
    evaluate,
    make_rect,
    to_original,
)
from .partition import apply_subdivision
from .selection import SelectionOutcome, select

IterationHook = Callable[[PartitionState, SelectionOutcome], None]


def percent_error(f: float, f_star: float) -> float:
    if f_star != 0:
        return 100.0 * (f - f_star) / abs(f_star)
    return 100.0 * f


def init(problem: Problem, config: SolverConfig) -> PartitionState:
    """Partition holding only the unit cube, with its midpoint evaluated."""
    state = PartitionState(problem.n, config.aggregation)
    mid_id, _ = evaluate(state, problem, [0.5] * problem.n)
    state.add(make_rect(state.store, (0,) * problem.n, mid_id, (mid_id,)))
    state.k = 1
    return state


def should_stop(state: PartitionState, config: SolverConfig, problem: Problem) -> bool:
    if percent_error(state.f_min, problem.f_star) <= config.eps_pe:
        return True
    if state.m >= config.m_max:
        return True
    return config.k_max is not None and state.k >= config.k_max


def iterate(state: PartitionState, problem: Problem, config: SolverConfig) -> SelectionOutcome:
    """One pass of the main loop; returns the selection that was subdivided.

    The incumbent used for branching decisions is read once, before any of
    this iteration's subdivisions.
    """
    c_min = tuple(state.c_min.tolist())
    outcome = select(state, config, c_min=c_min)
    if not outcome.ids:
        raise InternalError("selection returned no rectangles")
    if config.check_invariants:
        check_max_group_selected(state, outcome)
    for rid in outcome.ids:
        apply_subdivision(state, rid, problem, c_min)
    state.k += 1
    return outcome


def check_max_group_selected(state: PartitionState, outcome: SelectionOutcome) -> None:
    top = state.max_key()
    if not any(state.rects[r].key == top for r in outcome.ids):
        raise InternalError(f"iteration {state.k}: no rect of the largest measure group selected")


def run(
    problem: Problem,
    config: Optional[SolverConfig] = None,
    on_iteration: Optional[IterationHook] = None,
) -> RunResult:
    config = SolverConfig() if config is None else config
    state = init(problem, config)
    while not should_stop(state, config, problem):
        outcome = iterate(state, problem, config)
        if on_iteration is not None:
            on_iteration(state, outcome)
    return result_of(state, problem)


def result_of(state: PartitionState, problem: Problem) -> RunResult:
    x_min = to_original(state.c_min, problem)
    pe = percent_error(state.f_min, problem.f_star) if math.isfinite(state.f_min) else math.inf
    return RunResult(
        f_min=state.f_min,
        x_min=tuple(x_min.tolist()),
        pe=pe,
        k=state.k,
        m=state.m,
        history=list(state.history),
        n_nonfinite=state.n_nonfinite,
    )
