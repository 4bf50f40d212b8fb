"""Shared fixtures-free helpers: synthetic problems, random partitions and
brute-force reference implementations of the selection rules."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from halrect import Aggregation, Problem, SolverConfig, init
from halrect.partition import apply_subdivision


def synthetic_problem(rng: np.random.Generator, n: int, levels: int = 8) -> Problem:
    """Deterministic, bumpy objective on the unit box whose values are
    quantized so that equal scores (and hence tie-breaks) are common."""
    w = rng.normal(size=(3, n)) * 4
    b = rng.uniform(0, 2 * math.pi, size=3)

    def f(x):
        raw = float(np.sum(np.sin(w @ x + b)))
        return round(raw * levels) / levels

    return Problem("synthetic", n, (0.0,) * n, (1.0,) * n, f_star=-3.0, objective=f)


def random_partition(rng, n=None, steps=None, aggregation="13a", max_groups=50, drill=0.0):
    """Partition grown by subdividing uniformly chosen live rects.

    With probability ``drill`` a step instead splits the newest rect, which
    produces deep, many-group partitions.
    """
    n = int(rng.integers(1, 5)) if n is None else n
    steps = int(rng.integers(0, 60)) if steps is None else steps
    problem = synthetic_problem(rng, n)
    state = init(problem, SolverConfig(aggregation=aggregation))
    for _ in range(steps):
        if rng.random() < drill:
            rid = max(state.rects)
        else:
            rid = sorted(state.rects)[int(rng.integers(len(state.rects)))]
        apply_subdivision(state, rid, problem)
        if len(state.groups) >= max_groups:
            break
    return state, problem


def diagonal(rect) -> float:
    return math.sqrt(sum((h - l) ** 2 for l, h in zip(rect.lo, rect.hi)))


def score(state, rect, aggregation) -> float:
    vals = [state.store.fval(h) for h in rect.rep_set]
    mid = state.store.fval(rect.mid_id)
    agg = Aggregation(aggregation)
    if agg is Aggregation.MIDPOINT:
        return mid
    if agg is Aggregation.MINIMUM:
        return min(vals)
    if agg is Aggregation.MEAN:
        return math.fsum(vals) / len(vals)
    return (min(vals) + mid) / 2


def order_key(state, rect) -> tuple:
    return (tuple(sorted(state.store.fval(h) for h in rect.rep_set)), rect.rid)


def oracle_groups(state, aggregation):
    """{delta: (F, rid)} for the best rect of every measure group, by brute force."""
    best = {}
    for rect in state.rects.values():
        d = diagonal(rect)
        cand = (score(state, rect, aggregation), order_key(state, rect))
        if d not in best or cand < best[d]:
            best[d] = cand
    return {d: (F, key[1]) for d, (F, key) in best.items()}


def oracle_lipschitz(points, f_min, eps):
    """Ids of (delta, F, id) points that are potentially optimal.

    A point qualifies iff some rate constant L > 0 makes its lower bound
    F - L*delta minimal among all points and at most f_min - eps*|f_min|.
    Exact rational arithmetic throughout.
    """
    pts = [(Fraction(d), Fraction(F), pid) for d, F, pid in points]
    f_min = Fraction(f_min)
    threshold = f_min - Fraction(eps) * abs(f_min)
    largest = max(pts, key=lambda p: p[0])
    out = set()
    for dj, Fj, pid in pts:
        lo, hi = Fraction(0), None
        for di, Fi, _ in pts:
            if di < dj:
                lo = max(lo, (Fj - Fi) / (dj - di))
            elif di > dj:
                s = (Fi - Fj) / (di - dj)
                hi = s if hi is None else min(hi, s)
        if hi is None:
            out.add(pid)
            continue
        if hi <= 0 or lo > hi:
            continue
        if Fj - hi * dj <= threshold:
            out.add(pid)
    out.add(largest[2])
    return out


def oracle_dominance(points):
    """Ids of (delta, value, id) points with no rival at larger delta and
    equal or smaller value."""
    return {
        pid
        for d, v, pid in points
        if not any(d2 > d and v2 <= v for d2, v2, _ in points)
    }


def oracle_gl(state, aggregation):
    groups = oracle_groups(state, aggregation)
    value_pts = [(d, F, rid) for d, (F, rid) in groups.items()]
    chosen = oracle_dominance(value_pts)
    chosen.add(groups[max(groups)][1])
    c_min = state.store.coord(state.min_id)
    nearest = {}
    for rect in state.rects.values():
        d = diagonal(rect)
        dist = math.sqrt(sum((a - b) ** 2 for a, b in zip(rect.center, c_min)))
        cand = (dist, order_key(state, rect))
        if d not in nearest or cand < nearest[d]:
            nearest[d] = cand
    dist_pts = [(d, dist, key[1]) for d, (dist, key) in nearest.items()]
    return chosen | oracle_dominance(dist_pts)


# criterion number -> (passed, detail); printed by conftest at session end
ACCEPTANCE_LOG: dict[int, tuple[bool, str]] = {}


def report(criterion: int, passed: bool, detail: str) -> None:
    ACCEPTANCE_LOG[criterion] = (passed, detail)
