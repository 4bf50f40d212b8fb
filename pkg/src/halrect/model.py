"""Data model shared by the partitioning, selection and driver code.

All geometry lives in the unit cube. Side lengths are exact powers of two,
so a rectangle is fully described by its midpoint and an integer bisection
depth per coordinate.
"""

from __future__ import annotations

import enum
import heapq
import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import EvaluationError, InternalError

MAX_DEPTH = 1000


class Selection(str, enum.Enum):
    LIPSCHITZ = "lipschitz"
    IMPROVED_AGGRESSIVE = "ia"
    PARETO_GL = "gl"


class Aggregation(str, enum.Enum):
    """How a rectangle's sampled values are folded into one score.

    The string values are the identifiers used on the command line and in
    result files.
    """

    MIDPOINT = "13a"
    MINIMUM = "13b"
    MEAN = "13c"
    MID_MIN = "13d"

    @property
    def index(self) -> int:
        return _AGG_INDEX[self]


_AGG_INDEX = {
    Aggregation.MIDPOINT: 0,
    Aggregation.MINIMUM: 1,
    Aggregation.MEAN: 2,
    Aggregation.MID_MIN: 3,
}


@dataclass(frozen=True)
class Problem:
    name: str
    n: int
    lower: tuple[float, ...]
    upper: tuple[float, ...]
    f_star: float
    objective: Callable[[np.ndarray], float] = field(repr=False, compare=False)
    x_star: Optional[tuple[float, ...]] = None
    convex: bool = False
    multimodal: bool = True
    rho: float = 0.0

    def __post_init__(self):
        if len(self.lower) != self.n or len(self.upper) != self.n:
            raise ValueError(f"{self.name}: bounds must have length n={self.n}")
        for j, (a, b) in enumerate(zip(self.lower, self.upper)):
            if not a < b:
                raise ValueError(f"{self.name}: lower[{j}]={a} is not below upper[{j}]={b}")
        if self.x_star is not None:
            if len(self.x_star) != self.n:
                raise ValueError(f"{self.name}: x_star must have length n={self.n}")
            for j, (a, b, x) in enumerate(zip(self.lower, self.upper, self.x_star)):
                if not a <= x <= b:
                    raise ValueError(f"{self.name}: x_star[{j}]={x} lies outside [{a}, {b}]")

    @property
    def tags(self) -> tuple[str, str]:
        return (
            "convex" if self.convex else "non-convex",
            "multi-modal" if self.multimodal else "uni-modal",
        )

    def with_bounds(self, lower, upper, **changes) -> "Problem":
        return replace(self, lower=tuple(lower), upper=tuple(upper), **changes)

    def __call__(self, x) -> float:
        return self.objective(np.asarray(x, dtype=float))


@dataclass(frozen=True)
class SolverConfig:
    selection: Selection = Selection.LIPSCHITZ
    aggregation: Aggregation = Aggregation.MIDPOINT
    eps: float = 1e-4
    eps_pe: float = 1e-2
    m_max: int = 1_000_000
    k_max: Optional[int] = None
    delta_limit_multiplier: int = 50
    check_invariants: bool = False

    def __post_init__(self):
        object.__setattr__(self, "selection", Selection(self.selection))
        object.__setattr__(self, "aggregation", Aggregation(self.aggregation))
        if not self.eps > 0:
            raise ValueError("eps must be positive")
        if not self.eps_pe >= 0:
            raise ValueError("eps_pe must be non-negative")
        if self.m_max < 1:
            raise ValueError("m_max must be at least 1")
        if self.k_max is not None and self.k_max < 1:
            raise ValueError("k_max must be at least 1")

    @property
    def variant(self) -> str:
        return f"{self.selection.value}/{self.aggregation.value}"


@dataclass
class RunResult:
    f_min: float
    x_min: tuple[float, ...]
    pe: float
    k: int
    m: int
    history: list[tuple[int, float]]
    n_nonfinite: int = 0


def to_original(c, problem: Problem) -> np.ndarray:
    """Map a unit-cube point onto the problem's box."""
    c = np.asarray(c, dtype=float)
    if c.shape != (problem.n,):
        raise ValueError(f"expected a point of dimension {problem.n}, got shape {c.shape}")
    lower = np.asarray(problem.lower)
    return (np.asarray(problem.upper) - lower) * c + lower


class PointStore:
    """Append-only registry of sampled unit-space points; ids start at 1."""

    def __init__(self, n: int, capacity: int = 256):
        self.n = n
        self._coords = np.empty((capacity, n))
        self.fvals: list[float] = []

    def __len__(self) -> int:
        return len(self.fvals)

    def append(self, c, f: float) -> int:
        i = len(self.fvals)
        if i == len(self._coords):
            grown = np.empty((2 * len(self._coords), self.n))
            grown[:i] = self._coords[:i]
            self._coords = grown
        self._coords[i] = c
        self.fvals.append(f)
        return i + 1

    @property
    def coords(self) -> np.ndarray:
        view = self._coords[: len(self.fvals)]
        view.flags.writeable = False
        return view

    def coord(self, pid: int) -> np.ndarray:
        return self._coords[pid - 1]

    def fval(self, pid: int) -> float:
        return self.fvals[pid - 1]


@lru_cache(maxsize=None)
def key_measure(key: tuple[int, ...]) -> float:
    """Diagonal length of a box whose sorted depth vector is ``key``."""
    return math.sqrt(math.fsum(math.ldexp(1.0, -2 * d) for d in key))


def aggregates(mid_f: float, rep_f: Sequence[float]) -> tuple[float, float, float, float]:
    lo = min(rep_f)
    return (mid_f, lo, math.fsum(rep_f) / len(rep_f), (lo + mid_f) / 2)


@dataclass(slots=True)
class HyperRect:
    rid: int
    depth: tuple[int, ...]
    center: tuple[float, ...]
    mid_id: int
    rep_set: tuple[int, ...]
    agg: tuple[float, float, float, float]
    # rep_set values in ascending order; orders equally scored rivals
    rank: tuple[float, ...]
    key: tuple[int, ...]

    @property
    def lo(self) -> tuple[float, ...]:
        return tuple(c - math.ldexp(1.0, -d - 1) for c, d in zip(self.center, self.depth))

    @property
    def hi(self) -> tuple[float, ...]:
        return tuple(c + math.ldexp(1.0, -d - 1) for c, d in zip(self.center, self.depth))

    @property
    def sides(self) -> tuple[float, ...]:
        return tuple(math.ldexp(1.0, -d) for d in self.depth)

    @property
    def volume(self) -> float:
        return math.ldexp(1.0, -sum(self.depth))


def measure(rect: HyperRect) -> float:
    """Euclidean diagonal ||hi - lo|| of the rectangle."""
    return key_measure(rect.key)


def make_rect(store: PointStore, depth, mid_id: int, rep_set) -> HyperRect:
    if max(depth) > MAX_DEPTH:
        raise InternalError(f"bisection depth exceeded {MAX_DEPTH}")
    fv = store.fvals
    rep_f = [fv[h - 1] for h in rep_set]
    return HyperRect(
        rid=mid_id,
        depth=tuple(depth),
        center=tuple(store.coord(mid_id).tolist()),
        mid_id=mid_id,
        rep_set=tuple(rep_set),
        agg=aggregates(fv[mid_id - 1], rep_f),
        rank=tuple(sorted(rep_f)),
        key=tuple(sorted(depth)),
    )


class PartitionState:
    """The live partition of the unit cube plus incumbent and counters.

    Rect ids coincide with the id of the rect's midpoint. Besides the
    id-addressed ``rects`` and the ``groups`` of equal measure, the state keeps
    one lazily pruned heap per group (ordered by the run's aggregation, then
    ``rank``, then id) and a dense array of live midpoints for distance scans.
    """

    def __init__(self, n: int, aggregation: Aggregation = Aggregation.MIDPOINT):
        self.n = n
        self.aggregation = Aggregation(aggregation)
        self.store = PointStore(n)
        self.rects: dict[int, HyperRect] = {}
        self.groups: dict[tuple[int, ...], set[int]] = {}
        self.f_min = math.inf
        self.min_id = 0
        self.k = 0
        self.n_nonfinite = 0
        self.history: list[tuple[int, float]] = []
        self._heaps: dict[tuple[int, ...], list] = {}
        self._slot_of: dict[int, int] = {}
        self._slot_rid = np.zeros(256, dtype=np.int64)
        self._slot_mid = np.zeros((256, n))
        self._slot_gid = np.zeros(256, dtype=np.int64)
        self._count = 0
        self.gid_of: dict[tuple[int, ...], int] = {}
        self.key_of: list[tuple[int, ...]] = []

    @property
    def m(self) -> int:
        return len(self.store)

    @property
    def c_min(self) -> np.ndarray:
        return self.store.coord(self.min_id)

    def record(self, c, f: float) -> int:
        """Append an evaluated point and update the incumbent (ties move it)."""
        if not math.isfinite(f):
            f = math.inf
            self.n_nonfinite += 1
        pid = self.store.append(c, f)
        if f <= self.f_min:
            if f < self.f_min:
                self.history.append((pid, f))
            self.f_min = f
            self.min_id = pid
        return pid

    def add(self, rect: HyperRect) -> None:
        self.rects[rect.rid] = rect
        self.groups.setdefault(rect.key, set()).add(rect.rid)
        heapq.heappush(
            self._heaps.setdefault(rect.key, []),
            (rect.agg[self.aggregation.index], rect.rank, rect.rid),
        )
        gid = self.gid_of.get(rect.key)
        if gid is None:
            gid = self.gid_of[rect.key] = len(self.key_of)
            self.key_of.append(rect.key)
        slot = self._count
        if slot == len(self._slot_rid):
            self._slot_rid = np.concatenate([self._slot_rid, np.zeros_like(self._slot_rid)])
            self._slot_mid = np.concatenate([self._slot_mid, np.zeros_like(self._slot_mid)])
            self._slot_gid = np.concatenate([self._slot_gid, np.zeros_like(self._slot_gid)])
        self._slot_rid[slot] = rect.rid
        self._slot_mid[slot] = rect.center
        self._slot_gid[slot] = gid
        self._slot_of[rect.rid] = slot
        self._count += 1

    def remove(self, rid: int) -> HyperRect:
        rect = self.rects.pop(rid, None)
        if rect is None:
            raise InternalError(f"rect {rid} is not live")
        members = self.groups[rect.key]
        members.discard(rid)
        if not members:
            del self.groups[rect.key]
            del self._heaps[rect.key]
        # swap-remove keeps live slots contiguous
        slot = self._slot_of.pop(rid)
        last = self._count - 1
        if slot != last:
            moved = int(self._slot_rid[last])
            self._slot_rid[slot] = moved
            self._slot_mid[slot] = self._slot_mid[last]
            self._slot_gid[slot] = self._slot_gid[last]
            self._slot_of[moved] = slot
        self._count = last
        return rect

    def group_best(self, key: tuple[int, ...]) -> HyperRect:
        """Best live rect of a measure group under the run's aggregation."""
        heap = self._heaps[key]
        rects = self.rects
        while heap[0][2] not in rects:
            heapq.heappop(heap)
        return rects[heap[0][2]]

    def live_midpoints(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(rect ids, midpoints, group ids) of all live rects, slot-aligned.

        Group ids index ``key_of``.
        """
        c = self._count
        return self._slot_rid[:c], self._slot_mid[:c], self._slot_gid[:c]

    def max_key(self) -> tuple[int, ...]:
        return min(self.groups, key=lambda k: (-key_measure(k), k))

    def total_volume(self) -> float:
        return math.fsum(r.volume for r in self.rects.values())


def evaluate(state: PartitionState, problem: Problem, c) -> tuple[int, float]:
    """Evaluate the objective at unit point ``c`` and register the sample."""
    c = np.asarray(c, dtype=float)
    x = to_original(c, problem)
    try:
        f = float(problem.objective(x))
    except Exception as exc:  # noqa: BLE001 - user objectives may raise anything
        raise EvaluationError(f"{problem.name}: objective failed at x={x.tolist()}: {exc}") from exc
    pid = state.record(c, f)
    return pid, state.store.fval(pid)
