"""Backtracking search: correctness against the oracle, budgets, splitting."""

from __future__ import annotations

import pytest

from gskit.core import Kind, check_partition, is_canonical
from gskit.search import (
    PartialResultError,
    SearchConfig,
    SearchMode,
    SearchReport,
    default_split_depth,
    enumerate_maximal,
    exists_partition,
    max_order,
    parallel_split,
    report_json,
    run_search,
    run_task,
)

from oracle import naive_enumerate


def _cfg(kind, r, n, mode=SearchMode.FIRST_WITNESS, **kw):
    return SearchConfig(kind=kind, r=r, n=n, mode=mode, **kw)


def test_config_validation():
    with pytest.raises(ValueError):
        _cfg(Kind.STRONG, 0, 4)
    with pytest.raises(ValueError):
        _cfg(Kind.STRONG, 2, 0)
    with pytest.raises(ValueError):
        _cfg(Kind.STRONG, 2, 4, node_budget=0)
    with pytest.raises(ValueError):
        _cfg(Kind.STRONG, 2, 4, wall_budget=0.0)


def test_first_witness_examples():
    rep = exists_partition(_cfg(Kind.STRONG, 2, 4))
    assert [str(w) for w in rep.witnesses] == ["1221"]
    assert not rep.exhausted  # stopped at the witness

    rep = exists_partition(_cfg(Kind.STRONG, 2, 5))
    assert rep.witnesses == ()
    assert rep.exhausted


def test_witnesses_are_canonical_verified_and_sorted():
    for kind, r, n in [
        (Kind.STRONG, 3, 9),
        (Kind.WEAK, 3, 17),
        (Kind.STRONG, 3, 7),
        (Kind.WEAK, 2, 6),
    ]:
        rep = run_search(_cfg(kind, r, n, SearchMode.ENUMERATE_ALL))
        assert rep.exhausted
        seen = [w.colors for w in rep.witnesses]
        assert seen == sorted(seen)
        assert len(set(seen)) == len(seen)
        for w in rep.witnesses:
            assert is_canonical(w)
            assert check_partition(w, kind).ok
            assert w.r == r and w.n == n


def test_enumeration_matches_naive_oracle():
    for kind in (Kind.STRONG, Kind.WEAK):
        for r in (1, 2, 3):
            for n in range(1, 10):
                rep = run_search(_cfg(kind, r, n, SearchMode.ENUMERATE_ALL))
                got = [w.colors for w in rep.witnesses]
                want = naive_enumerate(kind.value, r, n)
                assert got == want, (kind, r, n)


def test_max_order_examples():
    assert max_order(Kind.STRONG, 3, 20) == (9, True)
    assert max_order(Kind.STRONG, 2, 20) == (4, True)
    assert max_order(Kind.WEAK, 2, 20) == (8, True)
    assert max_order(Kind.STRONG, 1, 10) == (1, True)
    # The weak one-color maximum comes from {1, 2}; 1 + 2 = 3 kills n = 3.
    assert max_order(Kind.WEAK, 1, 10) == (2, True)


def test_max_order_respects_limit():
    # Confirmation reads the window above m_max only up to the limit, so
    # an empty window (limit == m_max) confirms vacuously.
    m, confirmed = max_order(Kind.STRONG, 2, 4)
    assert m == 4
    assert confirmed  # window above 4 is empty up to the limit
    m, confirmed = max_order(Kind.STRONG, 2, 7, streak=5)
    assert (m, confirmed) == (4, True)


def test_max_order_budget_leaves_unconfirmed():
    m, confirmed = max_order(Kind.STRONG, 3, 20, node_budget=4)
    assert not confirmed


def test_node_budget_truncates():
    rep = run_search(_cfg(Kind.WEAK, 4, 44, SearchMode.ENUMERATE_ALL, node_budget=10))
    assert not rep.exhausted
    assert rep.nodes_explored <= 10


def test_wall_budget_truncates():
    rep = run_search(
        _cfg(Kind.WEAK, 4, 44, SearchMode.ENUMERATE_ALL, wall_budget=1e-9)
    )
    assert not rep.exhausted


def test_enumerate_maximal_counts():
    assert [str(w) for w in enumerate_maximal(Kind.STRONG, 2)] == ["1221"]
    assert [str(w) for w in enumerate_maximal(Kind.STRONG, 3)] == [
        "121313121",
        "122131221",
    ]
    assert [str(w) for w in enumerate_maximal(Kind.WEAK, 2)] == ["11212221"]
    assert [str(w) for w in enumerate_maximal(Kind.WEAK, 3)] == [
        "12121312131313121",
    ]


def test_enumerate_maximal_budget_error_carries_partials():
    with pytest.raises(PartialResultError) as exc:
        enumerate_maximal(Kind.WEAK, 3, node_budget=5)
    assert isinstance(exc.value.witnesses, tuple)


def test_parallel_split_examples():
    tasks = parallel_split(_cfg(Kind.STRONG, 2, 4, SearchMode.ENUMERATE_ALL), 0)
    assert [t.prefix for t in tasks] == [()]
    tasks = parallel_split(_cfg(Kind.STRONG, 2, 4, SearchMode.ENUMERATE_ALL), 1)
    assert [t.prefix for t in tasks] == [(1,)]
    with pytest.raises(ValueError):
        parallel_split(_cfg(Kind.STRONG, 2, 4), 5)


def test_parallel_split_partitions_the_tree():
    cfg = _cfg(Kind.STRONG, 3, 9, SearchMode.ENUMERATE_ALL)
    sequential = run_search(cfg, workers=1, split_depth=0)
    for depth in (1, 2, 3, 5, 9):
        tasks = parallel_split(cfg, depth)
        merged = []
        nodes_below = 0
        for task in tasks:
            rep = run_task(task)
            merged.extend(rep.witnesses)
            nodes_below += rep.nodes_explored
        assert tuple(merged) == sequential.witnesses, depth
        # Shallow nodes are exactly the split prefixes' proper ancestors
        # plus the prefixes themselves; totals must match the sequential
        # count once the coordinator's share is added back.
        shallow = sequential.nodes_explored - nodes_below
        assert shallow >= 0
        full = run_search(cfg, workers=2, split_depth=depth)
        assert full == sequential


def test_run_search_identical_across_workers_and_depths():
    cfg = _cfg(Kind.WEAK, 3, 17, SearchMode.ENUMERATE_ALL)
    baseline = run_search(cfg, workers=1, split_depth=0)
    for workers in (1, 2, 4):
        for depth in (None, 0, 2, 4):
            rep = run_search(cfg, workers=workers, split_depth=depth)
            assert rep == baseline
            assert report_json(cfg, rep) == report_json(cfg, baseline)


def test_first_witness_ignores_worker_count():
    cfg = _cfg(Kind.STRONG, 3, 9)
    assert run_search(cfg, workers=8) == exists_partition(cfg)


def test_run_task_rejects_bad_prefix():
    cfg = _cfg(Kind.STRONG, 2, 4, SearchMode.ENUMERATE_ALL)
    from gskit.search import SubtreeTask

    with pytest.raises(ValueError):
        run_task(SubtreeTask(config=cfg, prefix=(2,)))  # violates symmetry order
    with pytest.raises(ValueError):
        run_task(SubtreeTask(config=cfg, prefix=(1, 1)))  # monochromatic 1+1=2


def test_default_split_depth_is_config_pure():
    cfg = _cfg(Kind.STRONG, 4, 24, SearchMode.ENUMERATE_ALL)
    assert default_split_depth(cfg) == default_split_depth(cfg)
    assert default_split_depth(_cfg(Kind.STRONG, 2, 4)) == 0


def test_report_json_schema():
    cfg = _cfg(Kind.STRONG, 2, 4)
    rep = exists_partition(cfg)
    assert report_json(cfg, rep) == (
        '{"kind": "strong", "r": 2, "n": 4, "witnesses": ["1221"],'
        ' "nodes": 5, "exhausted": false}'
    )


def test_stretch_orders_for_five_colors():
    # Not part of the acceptance gate, but cheap enough to pin down: the
    # five-color maxima land exactly one below the closed forms.
    assert max_order(Kind.STRONG, 5, 54) == (49, True)
    assert max_order(Kind.WEAK, 5, 94) == (89, True)


def test_five_color_enumeration():
    strong = enumerate_maximal(Kind.STRONG, 5)
    assert len(strong) == 3
    weak = enumerate_maximal(Kind.WEAK, 5)
    assert len(weak) == 2
    for w in strong:
        assert check_partition(w, Kind.STRONG).ok
    for w in weak:
        assert check_partition(w, Kind.WEAK).ok
