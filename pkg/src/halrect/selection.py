"""Identification of potentially optimal rectangles.

Three schemes are provided, all of which reduce every measure group to a
single representative before selecting:

* ``poh_lipschitz``: lower-right convex hull of (measure, score) points with
  the sufficient-decrease test against the incumbent.
* ``poh_aggressive``: the best rect of every group above a size floor.
* ``poh_pareto_gl``: union of the (measure, score) and (measure, distance to
  incumbent) Pareto staircases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import InvalidStateError
from .model import Aggregation, PartitionState, PointStore, Selection, HyperRect, key_measure


@dataclass(frozen=True)
class GroupRep:
    key: tuple
    delta: float
    best_rect_id: int
    best_F: float


@dataclass
class SelectionOutcome:
    ids: list[int]
    scheme: Selection
    groups: list[tuple[float, float]] = field(default_factory=list)


def aggregate(rect: HyperRect, store: PointStore, variant) -> float:
    """Score of a rect from the values sampled on it."""
    variant = Aggregation(variant)
    fv = [store.fval(h) for h in rect.rep_set]
    mid = store.fval(rect.mid_id)
    if variant is Aggregation.MIDPOINT:
        return mid
    lo = min(fv)
    if variant is Aggregation.MINIMUM:
        return lo
    if variant is Aggregation.MEAN:
        return math.fsum(fv) / len(fv)
    return (lo + mid) / 2


def tie_key(rect: HyperRect) -> tuple:
    return (rect.rank, rect.rid)


def break_ties(candidates: Iterable[int], store: PointStore, rects=None) -> int:
    """Pick the most promising of equally scored rects.

    Sample values of each candidate are sorted ascending and compared
    lexicographically; a shorter list that is a prefix of a longer one wins,
    and an exact tie goes to the smaller id. ``rects`` maps id to HyperRect;
    when omitted, ``candidates`` must be HyperRect objects.
    """
    best = None
    best_key = None
    for c in candidates:
        rect = rects[c] if rects is not None else c
        k = (tuple(sorted(store.fval(h) for h in rect.rep_set)), rect.rid)
        if best_key is None or k < best_key:
            best, best_key = rect.rid, k
    if best is None:
        raise ValueError("no candidates to choose from")
    return best


# ---------------------------------------------------------------------------
# group-level rules (pure functions over GroupRep lists)


def _slope(a: GroupRep, b: GroupRep) -> float:
    return (b.best_F - a.best_F) / (b.delta - a.delta)


def lipschitz_hull(reps: Sequence[GroupRep], f_min: float, eps: float) -> list[GroupRep]:
    """Group representatives satisfying both potential-optimality conditions.

    ``reps`` must have distinct deltas. Returned in ascending delta order.
    """
    if not reps:
        raise InvalidStateError("empty partition")
    reps = sorted(reps, key=lambda r: r.delta)
    largest = reps[-1]
    finite = [r for r in reps if math.isfinite(r.best_F)]
    if not finite:
        return [largest]
    low = min(r.best_F for r in finite)
    start = max(i for i, r in enumerate(finite) if r.best_F == low)
    hull: list[GroupRep] = []
    for r in finite[start:]:
        while len(hull) >= 2 and _slope(hull[-2], hull[-1]) > _slope(hull[-1], r):
            hull.pop()
        hull.append(r)
    threshold = f_min - eps * abs(f_min)
    chosen = [
        a for a, b in zip(hull, hull[1:]) if a.best_F - _slope(a, b) * a.delta <= threshold
    ]
    # the largest finite group has no finite right neighbour: always optimal
    chosen.append(hull[-1])
    if hull[-1] is not largest:
        chosen.append(largest)
    return chosen


def pareto_staircase(points: Sequence[tuple[float, float, object]]) -> list:
    """Payloads of points non-dominated on (delta high, value low).

    ``points`` are (delta, value, payload) with distinct deltas. A point is
    kept iff its value is strictly below every value at a larger delta.
    """
    out = []
    running = math.inf
    for delta, value, payload in sorted(points, key=lambda p: -p[0]):
        if value < running:
            out.append(payload)
            running = value
    return out


# ---------------------------------------------------------------------------
# state-level schemes


def group_reps(state: PartitionState, aggregation: Optional[Aggregation] = None) -> list[GroupRep]:
    """One representative per measure group, in ascending delta order."""
    aggregation = state.aggregation if aggregation is None else Aggregation(aggregation)
    reps = []
    for key, members in state.groups.items():
        if aggregation is state.aggregation:
            best = state.group_best(key)
        else:
            idx = aggregation.index
            best = min(
                (state.rects[r] for r in members),
                key=lambda r: (r.agg[idx], r.rank, r.rid),
            )
        reps.append(GroupRep(key, key_measure(key), best.rid, best.agg[aggregation.index]))
    reps.sort(key=lambda r: r.delta)
    return reps


def _outcome(state, chosen_ids, scheme, reps) -> SelectionOutcome:
    rects = state.rects
    seen = set()
    ids = []
    for rid in chosen_ids:
        if rid not in seen:
            seen.add(rid)
            ids.append(rid)
    ids.sort(key=lambda r: -key_measure(rects[r].key))  # stable
    return SelectionOutcome(ids, scheme, [(r.delta, r.best_F) for r in reps])


def poh_lipschitz(state: PartitionState, eps: float, aggregation=None) -> SelectionOutcome:
    if not state.rects:
        raise InvalidStateError("empty partition")
    reps = group_reps(state, aggregation)
    chosen = lipschitz_hull(reps, state.f_min, eps)
    chosen.sort(key=lambda r: -r.delta)
    return _outcome(state, [r.best_rect_id for r in chosen], Selection.LIPSCHITZ, reps)


def delta_limit(n: int, multiplier: int = 50) -> float:
    """Measure of a rect bisected ``multiplier * n`` times with balanced depths."""
    if n < 1:
        raise ValueError("n must be positive")
    return key_measure((multiplier,) * n)


def poh_aggressive(state: PartitionState, limit: float, aggregation=None) -> SelectionOutcome:
    if not state.rects:
        raise InvalidStateError("empty partition")
    reps = group_reps(state, aggregation)
    chosen = [r for r in reversed(reps) if r.delta >= limit]
    if not chosen or chosen[0] is not reps[-1]:
        chosen.insert(0, reps[-1])
    return _outcome(state, [r.best_rect_id for r in chosen], Selection.IMPROVED_AGGRESSIVE, reps)


def distance_reps(state: PartitionState, c_min=None) -> list[tuple[float, float, int]]:
    """(delta, distance, rect id) for the rect nearest the incumbent in each group.

    Equal distances within a group are settled by ``break_ties``.
    """
    if c_min is None:
        c_min = state.c_min
    rids, mids, gids = state.live_midpoints()
    dist = np.sqrt(np.sum((mids - np.asarray(c_min)) ** 2, axis=1))
    low = np.full(len(state.key_of), np.inf)
    np.minimum.at(low, gids, dist)
    hits = np.flatnonzero(dist == low[gids])
    by_group: dict[int, list[int]] = {}
    for slot in hits.tolist():
        by_group.setdefault(int(gids[slot]), []).append(int(rids[slot]))
    out = []
    for gid, members in by_group.items():
        rid = members[0] if len(members) == 1 else break_ties(members, state.store, state.rects)
        key = state.key_of[gid]
        out.append((key_measure(key), float(low[gid]), rid))
    return out


def poh_pareto_gl(state: PartitionState, aggregation=None, c_min=None) -> SelectionOutcome:
    if not state.rects:
        raise InvalidStateError("empty partition")
    reps = group_reps(state, aggregation)
    by_value = pareto_staircase([(r.delta, r.best_F, r) for r in reps])
    if not by_value or by_value[0] is not reps[-1]:
        by_value.insert(0, reps[-1])
    by_distance = pareto_staircase(distance_reps(state, c_min))
    ids = [r.best_rect_id for r in by_value] + list(by_distance)
    return _outcome(state, ids, Selection.PARETO_GL, reps)


def select(state: PartitionState, config, c_min=None) -> SelectionOutcome:
    if config.selection is Selection.LIPSCHITZ:
        return poh_lipschitz(state, config.eps)
    if config.selection is Selection.IMPROVED_AGGRESSIVE:
        return poh_aggressive(state, delta_limit(state.n, config.delta_limit_multiplier))
    return poh_pareto_gl(state, c_min=c_min)
