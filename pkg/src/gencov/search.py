"""Exact minimum block counts by branch and bound, plus the greedy cover.

The searcher enumerates candidate blocks in lexicographic order and
branches on the first uncovered tuple, with each child banning the
candidates tried before it so every block subset is visited at most
once.  Only lambda = 1 is supported: a repeated block never helps a
minimum cover, so plain subsets suffice.

Determinism: top-level branches are explored independently, each seeded
with the greedy incumbent, and merged in branch order; the optimum, the
certificate, and the node count are therefore identical for any worker
count.  The wall-clock timeout is a safety valve and the one source of
nondeterminism when it fires.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from . import bounds
from .core import Block, Design, PartStructure, admissible_patterns, admissible_tuples
from .errors import CandidateSpaceTooLarge, StrengthTooLarge
from .verify import default_jobs

CANDIDATE_CAP = 10 ** 6
_TIME_CHECK_MASK = 0x3FF


@dataclass(frozen=True)
class SearchResult:
    optimum: int
    design: Design | None
    nodes: int
    status: str  # "proven" or "budget-exhausted"


class _Tables:
    """Candidate blocks, the tuple universe, and coverage bitmasks."""

    def __init__(self, s: PartStructure, t: int):
        if s.block_count_possible() > CANDIDATE_CAP:
            raise CandidateSpaceTooLarge(
                f"{s.block_count_possible()} candidate blocks exceed cap {CANDIDATE_CAP}"
            )
        self.s = s
        self.t = t
        pools = [list(combinations(range(1, vi + 1), ki)) for vi, ki in zip(s.v, s.k)]
        self.cands: list[Block] = list(product(*pools))

        # Tuple universe in global order: patterns descending, tuples
        # ascending within each pattern.  spans holds (start, end, cap)
        # with cap the most tuples of that pattern one block can cover.
        self.tuples: list[tuple[tuple[int, ...], ...]] = []
        self.spans: list[tuple[int, int, int]] = []
        for p in admissible_patterns(s, t):
            start = len(self.tuples)
            self.tuples.extend(admissible_tuples(s, p))
            cap = 1
            for ki, tti in zip(s.k, p):
                cap *= comb(ki, tti)
            self.spans.append((start, len(self.tuples), cap))
        self.n_tuples = len(self.tuples)

        self.covers: list[int] = []
        for cand in self.cands:
            csets = [set(part) for part in cand]
            mask = 0
            for idx, tup in enumerate(self.tuples):
                if all(set(ti) <= csets[i] for i, ti in enumerate(tup)):
                    mask |= 1 << idx
            self.covers.append(mask)
        self.maxcov = max((m.bit_count() for m in self.covers), default=0)

        self.coverers: list[list[int]] = [[] for _ in range(self.n_tuples)]
        for ci, mask in enumerate(self.covers):
            while mask:
                low = mask & -mask
                self.coverers[low.bit_length() - 1].append(ci)
                mask ^= low

        # Point degrees sharpen the bound on single-part instances.
        self.use_degree = s.m == 1 and t >= 2
        if self.use_degree:
            self.tuple_pts = [tup[0] for tup in self.tuples]
            self.deg_cap = comb(s.k[0] - 1, t - 1)

    def design_from(self, chosen: list[int]) -> Design:
        return Design(self.s, self.t, tuple(self.cands[c] for c in chosen))

    def remaining_lb(self, uncovered: int, count: int) -> int:
        lb = -(count // -self.maxcov)
        for start, end, cap in self.spans:
            up = ((uncovered >> start) & ((1 << (end - start)) - 1)).bit_count()
            if up:
                lb = max(lb, -(up // -cap))
        if self.use_degree:
            deg: dict[int, int] = {}
            mask = uncovered
            while mask:
                low = mask & -mask
                for x in self.tuple_pts[low.bit_length() - 1]:
                    deg[x] = deg.get(x, 0) + 1
                mask ^= low
            total = sum(-(dx // -self.deg_cap) for dx in deg.values())
            lb = max(lb, -(total // -self.s.k[0]))
        return lb


def greedy_cover(s: PartStructure, t: int) -> Design:
    """Repeatedly add the candidate covering the most uncovered tuples,
    breaking ties toward the lexicographically least block."""
    if t == 0:
        return Design(s, 0)
    tb = _Tables(s, t)
    uncovered = (1 << tb.n_tuples) - 1
    chosen: list[int] = []
    while uncovered:
        best_ci = -1
        best_gain = 0
        for ci, mask in enumerate(tb.covers):
            gain = (mask & uncovered).bit_count()
            if gain > best_gain:
                best_ci, best_gain = ci, gain
        chosen.append(best_ci)
        uncovered &= ~tb.covers[best_ci]
    return tb.design_from(chosen)


@dataclass
class _BranchOutcome:
    best_n: int
    best_blocks: tuple[Block, ...] | None
    nodes: int
    exhausted: bool


def _run_branch(tb: _Tables, branch_pos: int, lower: int, ub: int,
                node_budget: int, deadline: float) -> _BranchOutcome:
    """Depth-first search of one top-level branch.

    The branch takes coverer branch_pos of the first tuple and bans all
    earlier coverers throughout its subtree.
    """
    first = tb.coverers[0]
    root = first[branch_pos]
    banned = set(first[:branch_pos])
    state = _BranchOutcome(ub, None, 0, True)

    def dfs(chosen: list[int], uncovered: int) -> None:
        state.nodes += 1
        if state.nodes > node_budget:
            state.exhausted = False
            return
        if state.nodes & _TIME_CHECK_MASK == 0 and time.monotonic() > deadline:
            state.exhausted = False
            return
        if not uncovered:
            if len(chosen) < state.best_n:
                state.best_n = len(chosen)
                state.best_blocks = tuple(tb.cands[c] for c in chosen)
            return
        if state.best_n == lower:
            return
        count = uncovered.bit_count()
        if len(chosen) + tb.remaining_lb(uncovered, count) >= state.best_n:
            return
        tau = (uncovered & -uncovered).bit_length() - 1
        opts = [c for c in tb.coverers[tau] if c not in banned]
        for pos, c in enumerate(opts):
            chosen.append(c)
            banned.update(opts[:pos])
            dfs(chosen, uncovered & ~tb.covers[c])
            banned.difference_update(opts[:pos])
            chosen.pop()
            if state.best_n == lower or not state.exhausted:
                return

    dfs([root], ((1 << tb.n_tuples) - 1) & ~tb.covers[root])
    return state


def _spawn_branch(args) -> tuple[int, tuple[Block, ...] | None, int, bool]:
    v, k, t, branch_pos, lower, ub, node_budget, time_left = args
    tb = _Tables(PartStructure(v, k), t)
    out = _run_branch(tb, branch_pos, lower, ub, node_budget,
                      time.monotonic() + time_left)
    return out.best_n, out.best_blocks, out.nodes, out.exhausted


def exact_min(s: PartStructure, t: int, *, max_nodes: int = 10_000_000,
              timeout: float = 60.0, jobs: int | None = None) -> SearchResult:
    """Minimum block count of a GC(s, t), with certificate when one
    exists.  Strength above the profile sum is infeasible and reported
    as optimum 0; status is proven unless a budget cut the search off."""
    if t < 0:
        raise StrengthTooLarge(f"strength must be nonnegative, got {t}")
    if t > s.k_sum:
        return SearchResult(0, None, 0, "proven")
    if t == 0:
        return SearchResult(0, Design(s, 0), 0, "proven")

    tb = _Tables(s, t)
    lower = bounds.lower_best(s, t).best_lower
    greedy = greedy_cover(s, t)
    if len(greedy.blocks) == lower:
        return SearchResult(lower, greedy, 0, "proven")

    deadline = time.monotonic() + timeout
    ub = len(greedy.blocks)
    n_branches = len(tb.coverers[0])
    node_budget = max(1, max_nodes // n_branches)
    if jobs is None:
        jobs = default_jobs() or 1

    outcomes: list[_BranchOutcome] = []
    if jobs > 1:
        args = [(s.v, s.k, t, pos, lower, ub, node_budget,
                 max(0.0, deadline - time.monotonic()))
                for pos in range(n_branches)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for best_n, blocks, nodes, exhausted in pool.map(_spawn_branch, args):
                outcomes.append(_BranchOutcome(best_n, blocks, nodes, exhausted))
    else:
        for pos in range(n_branches):
            outcomes.append(_run_branch(tb, pos, lower, ub, node_budget, deadline))
            if outcomes[-1].best_n == lower:
                break

    best_n = ub
    best_blocks: tuple[Block, ...] | None = None
    nodes = 0
    counted = 0
    for out in outcomes:
        counted += 1
        nodes += out.nodes
        if out.best_n < best_n:
            best_n = out.best_n
            best_blocks = out.best_blocks
        if out.best_n == lower:
            break
    all_exhausted = counted == n_branches and all(o.exhausted for o in outcomes[:counted])

    design = Design(s, t, best_blocks) if best_blocks is not None else greedy
    status = "proven" if best_n == lower or all_exhausted else "budget-exhausted"
    return SearchResult(best_n, design, nodes, status)


def certify_classical(v: int, k: int, t: int, *, max_nodes: int = 10_000_000,
                      timeout: float = 60.0, jobs: int | None = None) -> SearchResult:
    """exact_min on the single-part structure ((v,), (k,))."""
    return exact_min(PartStructure((v,), (k,)), t,
                     max_nodes=max_nodes, timeout=timeout, jobs=jobs)
