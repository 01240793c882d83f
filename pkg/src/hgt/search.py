"""Search bookkeeping shared by the backtracking modules."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Sequence


@dataclass
class SearchResult:
    """Outcome of a backtracking search.

    ``witness`` is None when nothing was found. A None witness is a proof of
    absence only when ``complete`` is true.
    """

    witness: Any
    complete: bool
    nodes: int

    @property
    def found(self) -> bool:
        return self.witness is not None


class BudgetHit(Exception):
    pass


class NodeCounter:
    def __init__(self, budget: int | None):
        self.budget = budget
        self.nodes = 0

    def tick(self):
        if self.budget is not None and self.nodes >= self.budget:
            raise BudgetHit
        self.nodes += 1


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("HGT_THREADS", "1")))
    except ValueError:
        return 1


def first_by_rank(run_branch: Callable[[Any, int | None], SearchResult], branches: Sequence[Any],
                  budget: int | None = None, threads: int | None = None) -> SearchResult:
    """Run top-level branches, returning the lowest-ranked witness.

    ``run_branch(branch, budget)`` explores one branch. Sequentially the budget
    is shared; in parallel each branch gets the whole budget. The witness is
    the same for any thread count as long as no branch is truncated.
    """
    threads = default_threads() if threads is None else max(1, threads)
    nodes = 0
    complete = True
    if threads == 1 or len(branches) < 2:
        for b in branches:
            left = None if budget is None else budget - nodes
            r = run_branch(b, left)
            nodes += r.nodes
            complete &= r.complete
            if r.witness is not None:
                return SearchResult(r.witness, True, nodes)
            if not r.complete:
                return SearchResult(None, False, nodes)
        return SearchResult(None, complete, nodes)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(run_branch, branches, [budget] * len(branches)))
    for r in results:
        nodes += r.nodes
        if r.witness is not None:
            return SearchResult(r.witness, True, nodes)
        if not r.complete:
            return SearchResult(None, False, nodes)
    return SearchResult(None, True, nodes)
