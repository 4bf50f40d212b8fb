"""Bisection of a selected rectangle and placement of the two new samples."""

from __future__ import annotations

import math
from typing import Sequence

from .errors import InternalError
from .model import HyperRect, PartitionState, PointStore, Problem, evaluate, make_rect


def select_branching_coordinate(rect: HyperRect, c_min: Sequence[float]) -> int:
    """Index (0-based) of the coordinate to bisect.

    Among the longest sides, pick the coordinate where the rect midpoint is
    farthest from the incumbent; remaining ties go to the smallest index.
    """
    shallowest = min(rect.depth)
    best_j, best_gap = -1, -1.0
    for j, d in enumerate(rect.depth):
        if d != shallowest:
            continue
        gap = abs(rect.center[j] - c_min[j])
        if gap > best_gap:
            best_j, best_gap = j, gap
    return best_j


def _check_branch(rect: HyperRect, br: int) -> None:
    if not 0 <= br < len(rect.depth):
        raise ValueError(f"branching coordinate {br} out of range for n={len(rect.depth)}")
    if rect.depth[br] != min(rect.depth):
        raise ValueError(f"coordinate {br} is not a longest side")


def bisect(rect: HyperRect, br: int):
    """Split bounds along ``br``; returns ((lo, hi, depth), (lo, hi, depth)) for left, right."""
    _check_branch(rect, br)
    lo, hi = list(rect.lo), list(rect.hi)
    depth = list(rect.depth)
    depth[br] += 1
    mid = rect.center[br]
    left_hi = hi.copy()
    left_hi[br] = mid
    right_lo = lo.copy()
    right_lo[br] = mid
    return (tuple(lo), tuple(left_hi), tuple(depth)), (tuple(right_lo), tuple(hi), tuple(depth))


def child_midpoints(rect: HyperRect, br: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    _check_branch(rect, br)
    quarter = math.ldexp(1.0, -rect.depth[br] - 2)
    left, right = list(rect.center), list(rect.center)
    left[br] -= quarter
    right[br] += quarter
    return tuple(left), tuple(right)


def inherit_rep_sets(
    parent: HyperRect, br: int, store: PointStore, left_mid_id: int, right_mid_id: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split the parent's sample set between the children by the cutting plane.

    Points on the plane (the parent midpoint at least) go to both children.
    Coordinates are dyadic, so the comparisons are exact.
    """
    plane = parent.center[br]
    left, right = [], []
    for h in parent.rep_set:
        v = store.coord(h)[br]
        if v <= plane:
            left.append(h)
        if v >= plane:
            right.append(h)
    left.append(left_mid_id)
    right.append(right_mid_id)
    return tuple(left), tuple(right)


def apply_subdivision(
    state: PartitionState, rect_id: int, problem: Problem, c_min=None
) -> tuple[int, int]:
    """Replace a live rect by its two halves, evaluating both new midpoints.

    ``c_min`` is the incumbent used for the branching tie-break; by default
    the current one.
    """
    parent = state.rects.get(rect_id)
    if parent is None:
        raise InternalError(f"rect {rect_id} selected for subdivision is not live")
    if c_min is None:
        c_min = state.c_min
    br = select_branching_coordinate(parent, c_min)
    c_left, c_right = child_midpoints(parent, br)
    left_id, _ = evaluate(state, problem, c_left)
    right_id, _ = evaluate(state, problem, c_right)
    h_left, h_right = inherit_rep_sets(parent, br, state.store, left_id, right_id)
    depth = list(parent.depth)
    depth[br] += 1
    state.remove(rect_id)
    state.add(make_rect(state.store, depth, left_id, h_left))
    state.add(make_rect(state.store, depth, right_id, h_right))
    return left_id, right_id
