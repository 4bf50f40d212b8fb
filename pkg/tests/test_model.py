import math

import numpy as np
import pytest

from halrect import Aggregation, PartitionState, PointStore, Problem, Selection, SolverConfig, lookup, to_original
from halrect.errors import EvaluationError, InternalError
from halrect.model import aggregates, evaluate, key_measure, make_rect


def test_to_original_maps_corners_and_center():
    p = lookup("Bukin6", 2)
    assert to_original([0, 0], p).tolist() == [-15, -3]
    assert to_original([1, 1], p).tolist() == [5, 3]
    assert to_original([0.5, 0.5], p).tolist() == [-5, 0]


def test_to_original_rejects_wrong_dimension():
    with pytest.raises(ValueError):
        to_original([0.5], lookup("Bukin6", 2))


def test_point_store_ids_start_at_one_and_grow():
    store = PointStore(2, capacity=1)
    ids = [store.append([i / 10, 0.0], float(i)) for i in range(5)]
    assert ids == [1, 2, 3, 4, 5]
    assert store.fval(4) == 3.0
    assert store.coord(5).tolist() == [0.4, 0.0]
    assert len(store) == 5
    with pytest.raises(ValueError):
        store.coords[0, 0] = 1.0


@pytest.mark.parametrize(
    "key, expected",
    [((0,), 1.0), ((0, 0), math.sqrt(2)), ((0, 1), math.sqrt(1.25)), ((1, 1), math.sqrt(0.5))],
)
def test_key_measure_is_the_box_diagonal(key, expected):
    assert key_measure(key) == pytest.approx(expected, rel=1e-15)


def test_aggregates_order():
    assert aggregates(3.0, [3.0, 1.0, 2.0]) == (3.0, 1.0, 2.0, 2.0)


def test_make_rect_geometry():
    store = PointStore(2)
    store.append([0.5, 0.5], 1.0)
    mid = store.append([0.25, 0.75], 4.0)
    rect = make_rect(store, (1, 1), mid, (1, mid))
    assert rect.lo == (0.0, 0.5) and rect.hi == (0.5, 1.0)
    assert rect.sides == (0.5, 0.5)
    assert rect.volume == 0.25
    assert rect.rank == (1.0, 4.0)
    assert rect.agg == (4.0, 1.0, 2.5, 2.5)


def test_make_rect_depth_guard():
    store = PointStore(1)
    store.append([0.5], 0.0)
    with pytest.raises(InternalError):
        make_rect(store, (1001,), 1, (1,))


def test_record_tracks_incumbent_and_nonfinite():
    st = PartitionState(1)
    st.record([0.5], 3.0)
    st.record([0.25], float("nan"))
    st.record([0.75], 1.0)
    st.record([0.125], 1.0)  # tie moves the incumbent but is no improvement
    assert st.f_min == 1.0 and st.min_id == 4
    assert st.n_nonfinite == 1
    assert st.store.fval(2) == math.inf
    assert st.history == [(1, 3.0), (3, 1.0)]


def test_evaluate_wraps_objective_failures():
    def boom(x):
        raise RuntimeError("nope")

    p = Problem("boom", 1, (0.0,), (1.0,), 0.0, boom)
    with pytest.raises(EvaluationError, match="boom"):
        evaluate(PartitionState(1), p, [0.5])


def test_problem_validation():
    with pytest.raises(ValueError):
        Problem("bad", 1, (1.0,), (0.0,), 0.0, sum)
    with pytest.raises(ValueError):
        Problem("bad", 1, (0.0,), (1.0,), 0.0, sum, x_star=(2.0,))
    with pytest.raises(ValueError):
        Problem("bad", 2, (0.0,), (1.0,), 0.0, sum)


def test_problem_tags():
    assert lookup("Sphere", 2).tags == ("convex", "uni-modal")
    assert lookup("Rastrigin", 2).tags == ("non-convex", "multi-modal")


def test_solver_config_coerces_and_validates():
    cfg = SolverConfig("gl", "13d")
    assert cfg.selection is Selection.PARETO_GL and cfg.aggregation is Aggregation.MID_MIN
    assert cfg.variant == "gl/13d"
    for bad in ({"eps": 0}, {"eps_pe": -1}, {"m_max": 0}, {"k_max": 0}, {"selection": "x"}):
        with pytest.raises(ValueError):
            SolverConfig(**bad)


def test_aggregation_index():
    assert [a.index for a in Aggregation] == [0, 1, 2, 3]


def test_remove_unknown_rect_is_internal_error():
    with pytest.raises(InternalError):
        PartitionState(2).remove(7)


def test_live_midpoints_stay_aligned_after_removals():
    from _support import random_partition

    state, _ = random_partition(np.random.default_rng(3), n=3, steps=40)
    rids, mids, gids = state.live_midpoints()
    assert sorted(rids.tolist()) == sorted(state.rects)
    for rid, mid, gid in zip(rids.tolist(), mids, gids.tolist()):
        assert tuple(mid.tolist()) == state.rects[rid].center
        assert state.key_of[gid] == state.rects[rid].key
