"""Exhaustive backtracking search for Gallai-Schur partitions.

Positions are colored in increasing order.  Every sum triple a + b = c has
maximum element c, so the only constraints completed by coloring position
c are those whose pairs sum to c; rejecting at assignment time is
therefore equivalent to fully verifying the prefix.  Symmetry is broken by
allowing at most one previously unused color at each step (the color of c
may exceed the colors used so far by at most one), which makes every
accepted leaf canonical and the enumeration duplicate-free up to
relabeling.  A leaf is accepted when all r colors occur.

Color classes are kept as bitmasks over [1, n].  Each class i carries a
mask of its members and a mask of pair sums within the class (a + a
included only in the strong case); each unordered pair of classes carries
the mask of cross sums.  Testing a candidate color at position c is then a
probe of the class's sum mask (monochromatic check) plus probes of the
cross-sum masks of pairs avoiding the candidate (rainbow check).

The sequential depth-first order is the reference semantics.  A run can be
split into independent subtree tasks below a fixed prefix depth; merging
task results in prefix order reproduces the sequential report exactly, so
worker count and scheduling never change the output.  Node and wall-clock
budgets are enforced per execution unit (the whole run when sequential,
each subtree task when split); first-witness runs are always sequential.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum

from .core import Coloring, Kind
from .construct import gs_number


class SearchMode(Enum):
    FIRST_WITNESS = "first-witness"
    ENUMERATE_ALL = "enumerate-all"


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of one search: what to look for and how hard to try.

    `streak` is the number of consecutive exhausted-infeasible orders that
    `max_order` demands before calling a maximum confirmed.  Budgets are
    optional; exceeding one marks the report unexhausted instead of
    raising.
    """

    kind: Kind
    r: int
    n: int
    mode: SearchMode = SearchMode.FIRST_WITNESS
    streak: int = 5
    node_budget: int | None = None
    wall_budget: float | None = None

    def __post_init__(self):
        if self.r < 1 or self.n < 1:
            raise ValueError("r and n must be positive")
        if self.streak < 1:
            raise ValueError("streak must be positive")
        if self.node_budget is not None and self.node_budget < 1:
            raise ValueError("node budget must be positive")
        if self.wall_budget is not None and self.wall_budget <= 0:
            raise ValueError("wall budget must be positive")


@dataclass(frozen=True)
class SearchReport:
    """Witnesses found, nodes entered, and whether the tree was finished.

    `exhausted` is True only when the whole (sub)tree was searched within
    budget; a first-witness run that stops at its witness reports False.
    """

    witnesses: tuple[Coloring, ...]
    nodes_explored: int
    exhausted: bool


@dataclass(frozen=True)
class SubtreeTask:
    """One independently searchable subtree: a config plus a valid prefix."""

    config: SearchConfig
    prefix: tuple[int, ...]


class PartialResultError(RuntimeError):
    """Enumeration could not be completed within budget; carries what was found."""

    def __init__(self, message: str, witnesses: tuple[Coloring, ...]):
        super().__init__(message)
        self.witnesses = witnesses


_WALL_CHECK_INTERVAL = 64


def _explore(cfg: SearchConfig, prefix: tuple[int, ...], stop_depth: int | None):
    """Depth-first engine behind every search entry point.

    Replays `prefix` (validating it), then explores below it.  With
    `stop_depth` set, descent stops there and the valid assignments of
    that length are collected as the frontier instead of being expanded.
    Returns (witnesses, nodes, exhausted, frontier); nodes counts accepted
    assignments strictly below the prefix.
    """
    n, r = cfg.n, cfg.r
    strong = cfg.kind is Kind.STRONG
    first_witness = cfg.mode is SearchMode.FIRST_WITNESS
    node_budget = cfg.node_budget
    wall_budget = cfg.wall_budget
    deadline = None if wall_budget is None else time.monotonic() + wall_budget

    class_bits = [0] * (r + 2)
    mono = [0] * (r + 2)
    pair = [[0] * (r + 2) for _ in range(r + 2)]
    chi = [0] * (n + 1)

    witnesses: list[tuple[int, ...]] = []
    frontier: list[tuple[int, ...]] = []
    nodes = 0
    aborted = False
    stopped_at_witness = False

    def admissible(pos: int, color: int, maxused: int) -> bool:
        if color > maxused + 1 or color > r or mono[color] >> pos & 1:
            return False
        for j in range(1, maxused + 1):
            pj = pair[j]
            for k in range(j + 1, maxused + 1):
                if pj[k] >> pos & 1 and j != color and k != color:
                    return False
        return True

    def place(pos: int, color: int, maxused: int):
        bit = 1 << pos
        old_class = class_bits[color]
        old_mono = mono[color]
        mono[color] = old_mono | (old_class << pos)
        if strong:
            mono[color] |= 1 << (2 * pos)
        class_bits[color] = old_class | bit
        saved = []
        for j in range(1, maxused + 1):
            if j != color:
                lo, hi = (j, color) if j < color else (color, j)
                saved.append((lo, hi, pair[lo][hi]))
                pair[lo][hi] |= class_bits[j] << pos
        chi[pos] = color
        return old_class, old_mono, saved

    def unplace(color: int, undo):
        old_class, old_mono, saved = undo
        class_bits[color] = old_class
        mono[color] = old_mono
        for lo, hi, v in saved:
            pair[lo][hi] = v

    maxused = 0
    for pos, color in enumerate(prefix, start=1):
        if not admissible(pos, color, maxused):
            raise ValueError(f"prefix is not a reachable search state at position {pos}")
        place(pos, color, maxused)
        maxused = max(maxused, color)

    def dfs(pos: int, maxused: int) -> bool:
        nonlocal nodes, aborted, stopped_at_witness
        if stop_depth is not None and pos > stop_depth:
            frontier.append(tuple(chi[1:pos]))
            return False
        if pos > n:
            if maxused == r:
                witnesses.append(tuple(chi[1:]))
                if first_witness:
                    stopped_at_witness = True
                    return True
            return False
        if r - maxused > n - pos + 1:
            return False
        top = maxused + 1 if maxused < r else r
        for color in range(1, top + 1):
            if not admissible(pos, color, maxused):
                continue
            if node_budget is not None and nodes >= node_budget:
                aborted = True
                return True
            nodes += 1
            if deadline is not None and nodes % _WALL_CHECK_INTERVAL == 0:
                if time.monotonic() > deadline:
                    aborted = True
                    return True
            undo = place(pos, color, maxused)
            stop = dfs(pos + 1, max(maxused, color))
            unplace(color, undo)
            if stop:
                return True
        return False

    dfs(len(prefix) + 1, maxused)
    exhausted = not aborted and not stopped_at_witness
    return witnesses, nodes, exhausted, frontier


def _as_colorings(cfg: SearchConfig, raw: list[tuple[int, ...]]) -> tuple[Coloring, ...]:
    return tuple(Coloring(n=cfg.n, r=cfg.r, colors=w) for w in raw)


def exists_partition(cfg: SearchConfig) -> SearchReport:
    """Search [1, n] for r-color partitions of the configured kind.

    First-witness mode stops at the first accepted leaf (the
    lexicographically least canonical witness); enumerate-all collects
    every canonical witness in lexicographic order.  A fired budget yields
    an unexhausted report, never an error.
    """
    raw, nodes, exhausted, _ = _explore(cfg, (), None)
    return SearchReport(
        witnesses=_as_colorings(cfg, raw), nodes_explored=nodes, exhausted=exhausted
    )


def parallel_split(cfg: SearchConfig, depth: int) -> list[SubtreeTask]:
    """Split the search tree into the subtrees below every valid prefix of
    the given length.

    The prefixes are exactly the depth-`depth` states the sequential
    search enters (symmetry-admissible and violation-free), in search
    order; depth 0 yields the whole tree as a single task.  Budgets do not
    apply to the split itself.
    """
    if depth < 0 or depth > cfg.n:
        raise ValueError(f"split depth must be in [0, {cfg.n}], got {depth}")
    _, _, _, frontier = _explore(_unbudgeted(cfg), (), depth)
    return [SubtreeTask(config=cfg, prefix=p) for p in frontier]


def run_task(task: SubtreeTask) -> SearchReport:
    """Search one subtree; nodes are counted strictly below the prefix."""
    raw, nodes, exhausted, _ = _explore(task.config, task.prefix, None)
    return SearchReport(
        witnesses=_as_colorings(task.config, raw),
        nodes_explored=nodes,
        exhausted=exhausted,
    )


def _unbudgeted(cfg: SearchConfig) -> SearchConfig:
    if cfg.node_budget is None and cfg.wall_budget is None:
        return cfg
    return SearchConfig(
        kind=cfg.kind, r=cfg.r, n=cfg.n, mode=cfg.mode, streak=cfg.streak
    )


def default_split_depth(cfg: SearchConfig) -> int:
    """Split depth used when the caller does not pick one; a pure function
    of the config so that worker count never influences the report."""
    if cfg.n < 12:
        return 0
    return min(8, cfg.n // 3)


def run_search(
    cfg: SearchConfig, workers: int = 1, split_depth: int | None = None
) -> SearchReport:
    """Run a search, optionally on several worker processes.

    The report is byte-for-byte identical for every worker count: the task
    decomposition depends only on the config and split depth, tasks are
    merged in prefix order, and first-witness runs always take the
    sequential path.  Node totals equal the sequential count (the split
    enumeration contributes the shallow nodes, each task the nodes below
    its prefix).

    Budgeted runs also go sequential, so a node budget caps the total
    explored rather than each subtree separately.
    """
    if workers < 1:
        raise ValueError("worker count must be positive")
    if cfg.mode is SearchMode.FIRST_WITNESS:
        return exists_partition(cfg)
    if cfg.node_budget is not None or cfg.wall_budget is not None:
        return exists_partition(cfg)
    depth = default_split_depth(cfg) if split_depth is None else split_depth
    depth = min(depth, cfg.n)
    if depth == 0:
        return exists_partition(cfg)

    _, shallow_nodes, _, frontier = _explore(_unbudgeted(cfg), (), depth)
    tasks = [SubtreeTask(config=cfg, prefix=p) for p in frontier]
    if workers == 1 or len(tasks) <= 1:
        results = [run_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
            results = list(pool.map(run_task, tasks))

    witnesses: list[Coloring] = []
    nodes = shallow_nodes
    exhausted = True
    for rep in results:
        witnesses.extend(rep.witnesses)
        nodes += rep.nodes_explored
        exhausted = exhausted and rep.exhausted
    return SearchReport(
        witnesses=tuple(witnesses), nodes_explored=nodes, exhausted=exhausted
    )


def max_order(
    kind: Kind,
    r: int,
    limit: int,
    streak: int = 5,
    node_budget: int | None = None,
    wall_budget: float | None = None,
) -> tuple[int, bool]:
    """Largest feasible order up to `limit`, with a confirmation flag.

    Scans n upward running first-witness searches.  Feasibility in n is
    not assumed monotone, so the maximum found counts as confirmed only
    after `streak` consecutive orders above it were exhaustively searched
    and found infeasible (or the scan reached `limit` with all orders
    above the maximum exhausted-infeasible).  Budget-truncated searches
    leave the flag False.  Returns (0, flag) when no order is feasible.
    """
    if limit < 1:
        raise ValueError("limit must be positive")
    m_max = 0
    outcomes: dict[int, tuple[bool, bool]] = {}
    for n in range(1, limit + 1):
        cfg = SearchConfig(
            kind=kind,
            r=r,
            n=n,
            mode=SearchMode.FIRST_WITNESS,
            streak=streak,
            node_budget=node_budget,
            wall_budget=wall_budget,
        )
        rep = exists_partition(cfg)
        found = bool(rep.witnesses)
        outcomes[n] = (found, rep.exhausted)
        if found:
            m_max = n
        elif m_max >= 1 and n >= m_max + streak:
            if all(outcomes[k] == (False, True) for k in range(m_max + 1, n + 1)):
                return m_max, True
    window = range(m_max + 1, min(m_max + streak, limit) + 1)
    confirmed = all(outcomes.get(k) == (False, True) for k in window)
    return m_max, confirmed


def enumerate_maximal(
    kind: Kind,
    r: int,
    limit: int | None = None,
    streak: int = 5,
    node_budget: int | None = None,
    wall_budget: float | None = None,
    workers: int = 1,
    split_depth: int | None = None,
) -> list[Coloring]:
    """Every maximal r-color partition of the given kind, up to relabeling.

    Finds the maximal order by upward scan (by default up to the
    closed-form value plus the streak), then enumerates all canonical
    witnesses at that order, in lexicographic order.  Raises
    PartialResultError, carrying whatever was found, when a budget stops
    either phase from being conclusive.
    """
    if limit is None:
        limit = gs_number(r, kind).value - 1 + streak
    m_max, confirmed = max_order(
        kind, r, limit, streak=streak, node_budget=node_budget, wall_budget=wall_budget
    )
    if m_max == 0:
        if not confirmed:
            raise PartialResultError(
                f"no feasible order found below {limit} within budget", witnesses=()
            )
        return []
    cfg = SearchConfig(
        kind=kind,
        r=r,
        n=m_max,
        mode=SearchMode.ENUMERATE_ALL,
        streak=streak,
        node_budget=node_budget,
        wall_budget=wall_budget,
    )
    report = run_search(cfg, workers=workers, split_depth=split_depth)
    if not confirmed or not report.exhausted:
        raise PartialResultError(
            f"enumeration at order {m_max} is not conclusive within budget",
            witnesses=report.witnesses,
        )
    return list(report.witnesses)


def report_json(cfg: SearchConfig, report: SearchReport) -> str:
    """Stable JSON form of a search report (field order fixed)."""
    doc = {
        "kind": cfg.kind.value,
        "r": cfg.r,
        "n": cfg.n,
        "witnesses": [str(w) for w in report.witnesses],
        "nodes": report.nodes_explored,
        "exhausted": report.exhausted,
    }
    return json.dumps(doc)
