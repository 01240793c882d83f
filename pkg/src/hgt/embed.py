"""Injective embeddings of a 3-graph pattern into a host 3-graph."""

from __future__ import annotations

import functools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import ThreeGraph
from .errors import BadParams
from .search import BudgetHit, NodeCounter, SearchResult, default_threads, first_by_rank

DEFAULT_BUDGET = 10**8
MODES = ("decide", "find", "count")


@dataclass
class EmbeddingProblem:
    pattern: ThreeGraph
    host: ThreeGraph
    budget: int | None = DEFAULT_BUDGET
    mode: str = "find"

    def __post_init__(self):
        if self.budget is not None and self.budget < 1:
            raise BadParams("budget must be at least 1")
        if self.mode not in MODES:
            raise BadParams(f"mode must be one of {', '.join(MODES)}")


@dataclass
class EmbeddingResult:
    """``mapping`` is pattern vertex -> host vertex.

    In count mode ``count`` is the number of injective edge-preserving maps
    (ordered) and ``copies`` the number of distinct subgraphs, i.e. ``count``
    divided by the number of automorphisms of the pattern.
    """

    mapping: dict[int, int] | None
    complete: bool
    nodes: int
    count: int | None = None
    copies: int | None = None

    @property
    def found(self) -> bool:
        if self.count is not None:
            return self.count > 0
        return self.mapping is not None


def pattern_order(P: ThreeGraph) -> list[int]:
    """Connectivity first, then degree: each vertex shares as many edges with earlier ones as possible."""
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < P.n:
        best = None
        for v in range(P.n):
            if v in placed:
                continue
            tied = sum(1 for e in P.incident[v] if any(x in placed for x in e if x != v))
            key = (-tied, -P.degrees[v], v)
            if best is None or key < best:
                best = key
        v = best[2]
        order.append(v)
        placed.add(v)
    return order


class _Matcher:
    def __init__(self, P: ThreeGraph, H: ThreeGraph, counter: NodeCounter, count: bool):
        self.P, self.H = P, H
        self.counter = counter
        self.counting = count
        self.order = pattern_order(P)
        self.img: dict[int, int] = {}
        self.used: set[int] = set()
        self.total = 0
        # per position: edges whose other two vertices come earlier, and earlier co-pairs
        pos = {v: i for i, v in enumerate(self.order)}
        self.closing = []
        self.partners = []
        for i, v in enumerate(self.order):
            cl = []
            for e in P.incident[v]:
                a, b = (x for x in e if x != v)
                if pos[a] < i and pos[b] < i:
                    cl.append((a, b))
            self.closing.append(cl)
            self.partners.append([(u, P.codegree(v, u)) for u in self.order[:i] if P.codegree(v, u)])

    def candidates(self, i: int):
        v = self.order[i]
        H, img = self.H, self.img
        cl = self.closing[i]
        if cl:
            a, b = cl[0]
            pool = H.coneighbor_set(img[a], img[b])
            for a, b in cl[1:]:
                pool = pool & H.coneighbor_set(img[a], img[b])
            pool = sorted(pool)
        elif self.partners[i]:
            u = self.partners[i][0][0]
            iu = img[u]
            pool = sorted({x for e in H.incident[iu] for x in e if x != iu})
        else:
            pool = range(H.n)
        need = self.P.degrees[v]
        for w in pool:
            if w in self.used or H.degrees[w] < need:
                continue
            if all(H.codegree(w, img[u]) >= c for u, c in self.partners[i]):
                yield w

    def run(self, i: int = 0, first: int | None = None) -> bool:
        if i == len(self.order):
            if self.counting:
                self.total += 1
                return False
            return True
        v = self.order[i]
        cands = self.candidates(i) if first is None else ([first] if first in set(self.candidates(i)) else [])
        for w in cands:
            self.counter.tick()
            self.img[v] = w
            self.used.add(w)
            if self.run(i + 1):
                return True
            del self.img[v]
            self.used.discard(w)
        return False


def verify_embedding(P: ThreeGraph, H: ThreeGraph, mapping: dict[int, int]) -> bool:
    if sorted(mapping) != list(range(P.n)) or len(set(mapping.values())) != P.n:
        return False
    return all(H.has_edge(mapping[a], mapping[b], mapping[c]) for a, b, c in P.edges)


def _branch(P: ThreeGraph, H: ThreeGraph, count: bool, first: int, budget: int | None) -> SearchResult:
    counter = NodeCounter(budget)
    m = _Matcher(P, H, counter, count)
    try:
        hit = m.run(0, first)
    except BudgetHit:
        return SearchResult(None, False, counter.nodes)
    if count:
        return SearchResult(m.total, True, counter.nodes)
    return SearchResult(dict(m.img) if hit else None, True, counter.nodes)


def _count(P, H, budget, threads) -> tuple[int, bool, int]:
    run = functools.partial(_branch, P, H, True)
    branches = list(range(H.n))
    threads = default_threads() if threads is None else max(1, threads)
    total = nodes = 0
    if threads == 1:
        for b in branches:
            r = run(b, None if budget is None else budget - nodes)
            nodes += r.nodes
            if not r.complete:
                return total, False, nodes
            total += r.witness
        return total, True, nodes
    with ProcessPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(run, branches, [budget] * len(branches)))
    complete = all(r.complete for r in results)
    return sum(r.witness or 0 for r in results), complete, sum(r.nodes for r in results)


def automorphism_count(P: ThreeGraph) -> int:
    total, complete, _ = _count(P, P, None, 1)
    assert complete
    return total


def find_embedding(problem: EmbeddingProblem, threads: int | None = None) -> EmbeddingResult:
    """Backtracking search; an absent answer proves non-containment only when complete."""
    P, H = problem.pattern, problem.host
    if P.n > H.n:
        return EmbeddingResult(None, True, 0, 0 if problem.mode == "count" else None,
                               0 if problem.mode == "count" else None)
    if P.n == 0:
        if problem.mode == "count":
            return EmbeddingResult({}, True, 0, 1, 1)
        return EmbeddingResult({}, True, 0)
    if problem.mode == "count":
        total, complete, nodes = _count(P, H, problem.budget, threads)
        copies = total // automorphism_count(P) if complete else None
        return EmbeddingResult(None, complete, nodes, total if complete else None, copies)
    run = functools.partial(_branch, P, H, False)
    res = first_by_rank(run, list(range(H.n)), problem.budget, threads)
    if res.witness is not None and not verify_embedding(P, H, res.witness):
        raise AssertionError("embedding search returned a map that is not an embedding")
    return EmbeddingResult(res.witness, res.complete, res.nodes)


def contains(P: ThreeGraph, H: ThreeGraph, budget: int | None = DEFAULT_BUDGET) -> EmbeddingResult:
    return find_embedding(EmbeddingProblem(P, H, budget, "decide"))
