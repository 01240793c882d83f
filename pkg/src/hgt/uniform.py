"""Certify vanishing uniform Turán density.

Two equivalent finite criteria are searched:

* coloring: a labeling sigma and a red/blue/green coloring of the shadow such
  that every edge u<v<w (in sigma) has uv red, uw blue, vw green;
* links: a labeling sigma under which no link graph has a monotone P3.

Both searches place vertices one position at a time. With the placed vertices
forming a prefix of sigma, the color a pair {a, b} receives from a coneighbor c
only depends on whether c comes before a, between a and b, or after b (all
unplaced vertices come after), so every conflict is detected at the moment the
later endpoint of the pair is placed.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import ThreeGraph, link_graph, shadow
from .errors import NotTwoOneType, SearchBudgetExceeded, ShapeMismatch
from .orderings import Labeling, combine_labelings, has_monotone_p3
from .search import BudgetHit, NodeCounter, SearchResult, first_by_rank

RED, BLUE, GREEN = "red", "blue", "green"
COLORS = (RED, BLUE, GREEN)
DEFAULT_MAX_N = 12


@dataclass(frozen=True)
class UniformZeroCertificate:
    sigma: Labeling
    coloring: Mapping[tuple[int, int], str]


def forced_color(pos_a: int, pos_b: int, pos_c: int) -> str:
    """Color a pair {a, b} must get from an edge abc, given positions."""
    if pos_a > pos_b:
        pos_a, pos_b = pos_b, pos_a
    if pos_c > pos_b:
        return RED
    if pos_c < pos_a:
        return GREEN
    return BLUE


def forced_coloring(F: ThreeGraph, sigma: Labeling) -> dict[tuple[int, int], str] | None:
    """The shadow coloring sigma forces, or None if some pair gets two colors."""
    coloring: dict[tuple[int, int], str] = {}
    for (a, b), cs in F.coneighbors.items():
        colors = {forced_color(sigma(a), sigma(b), sigma(c)) for c in cs}
        if len(colors) > 1:
            return None
        coloring[(a, b)] = colors.pop()
    return coloring


def verify_uniform_certificate(F: ThreeGraph, cert: UniformZeroCertificate) -> bool:
    if cert.sigma.domain != frozenset(range(F.n)):
        raise ShapeMismatch("labeling does not cover the vertex set")
    pairs = {tuple(sorted(p)) for p in cert.coloring}
    if pairs != set(shadow(F).edges):
        raise ShapeMismatch("coloring domain is not the shadow")
    col = {tuple(sorted(p)): c for p, c in cert.coloring.items()}

    def key(x, y):
        return (x, y) if x < y else (y, x)

    for e in F.edges:
        u, v, w = sorted(e, key=cert.sigma)
        if (col[key(u, v)], col[key(u, w)], col[key(v, w)]) != (RED, BLUE, GREEN):
            return False
    return True


def search_order(F: ThreeGraph, vertices: Iterable[int] | None = None) -> list[int]:
    """Candidate order: descending degree, ties by index."""
    vs = range(F.n) if vertices is None else vertices
    return sorted(vs, key=lambda v: (-F.degrees[v], v))


class _PrefixSearch:
    """Backtracking over labelings of ``vertices``, built by appending."""

    def __init__(self, F: ThreeGraph, vertices: list[int], counter: NodeCounter, centers=None):
        self.F = F
        self.vertices = vertices
        self.counter = counter
        self.centers = centers
        self.pos: dict[int, int] = {}
        self.order: list[int] = []

    def ok_coloring(self, x: int) -> bool:
        F, pos = self.F, self.pos
        seen_pairs = set()
        for e in F.incident[x]:
            for y in e:
                if y == x or y not in pos or y in seen_pairs:
                    continue
                seen_pairs.add(y)
                py = pos[y]
                cat = None
                for c in F.coneighbor_set(x, y):
                    pc = pos.get(c)
                    if pc is None:
                        cc = RED
                    elif pc < py:
                        cc = GREEN
                    else:
                        cc = BLUE
                    if cat is None:
                        cat = cc
                    elif cat != cc:
                        return False
        return True

    def ok_links(self, x: int) -> bool:
        F, pos = self.F, self.pos
        for e in F.incident[x]:
            a, b = (y for y in e if y != x)
            for v, mid in ((a, b), (b, a)):
                if self.centers is not None and v not in self.centers:
                    continue
                pm = pos.get(mid)
                if pm is None:
                    continue
                for c in F.coneighbor_set(v, mid):
                    if c != x and pos.get(c, pm) < pm:
                        return False
        return True

    def run(self, check, first: int | None = None) -> list[int] | None:
        remaining = [v for v in self.vertices]
        if first is not None:
            return self._place(first, check, remaining)
        return self._extend(check, remaining)

    def _place(self, x, check, remaining):
        self.counter.tick()
        if not check(x):
            return None
        self.pos[x] = len(self.order)
        self.order.append(x)
        rest = [v for v in remaining if v != x]
        out = self._extend(check, rest)
        if out is None:
            del self.pos[x]
            self.order.pop()
        return out

    def _extend(self, check, remaining):
        if not remaining:
            return list(self.order)
        for x in remaining:
            out = self._place(x, check, remaining)
            if out is not None:
                return out
        return None


def _branch(F: ThreeGraph, vertices: list[int], method: str, centers, first: int,
            budget: int | None) -> SearchResult:
    counter = NodeCounter(budget)
    s = _PrefixSearch(F, vertices, counter, centers)
    check = s.ok_coloring if method == "b2" else s.ok_links
    try:
        order = s.run(check, first)
    except BudgetHit:
        return SearchResult(None, False, counter.nodes)
    return SearchResult(order, True, counter.nodes)


def _guard(F: ThreeGraph, size: int, max_n: int | None):
    if max_n is not None and size > max_n:
        raise SearchBudgetExceeded(
            f"exhaustive labeling search is bounded to {max_n} vertices (got {size}); raise max_n to override")


def _search(F, vertices, method, centers, max_n, budget, threads) -> SearchResult:
    _guard(F, len(vertices), max_n)
    if not vertices:
        return SearchResult([], True, 0)
    run = functools.partial(_branch, F, vertices, method, centers)
    return first_by_rank(run, vertices, budget, threads)


def certify_uniform_zero_b2(F: ThreeGraph, max_n: int | None = DEFAULT_MAX_N, budget: int | None = None,
                            threads: int | None = None) -> SearchResult:
    """Search for a labeling plus shadow coloring; witness is a verified certificate."""
    res = _search(F, search_order(F), "b2", None, max_n, budget, threads)
    if res.witness is not None:
        sigma = Labeling(tuple(res.witness))
        coloring = forced_coloring(F, sigma)
        cert = UniformZeroCertificate(sigma, coloring)
        if coloring is None or not verify_uniform_certificate(F, cert):
            raise AssertionError("search returned a labeling that does not certify")
        res.witness = cert
    return res


def certify_uniform_zero_links(F: ThreeGraph, max_n: int | None = DEFAULT_MAX_N, budget: int | None = None,
                               threads: int | None = None) -> SearchResult:
    """Search for a labeling with every link graph free of monotone P3."""
    res = _search(F, search_order(F), "links", None, max_n, budget, threads)
    if res.witness is not None:
        sigma = Labeling(tuple(res.witness))
        if not links_ok(F, sigma):
            raise AssertionError("search returned a labeling with a monotone link path")
        res.witness = sigma
    return res


def links_ok(F: ThreeGraph, sigma: Labeling, centers: Iterable[int] | None = None) -> bool:
    vs = range(F.n) if centers is None else centers
    return all(has_monotone_p3(link_graph(F, v), sigma) is None for v in vs)


def check_two_one(F: ThreeGraph, A: Iterable[int], B: Iterable[int]) -> tuple[frozenset, frozenset]:
    A, B = frozenset(A), frozenset(B)
    if A & B or (A | B) != frozenset(range(F.n)):
        raise NotTwoOneType("A and B do not partition the vertex set")
    for e in F.edges:
        if sum(x in A for x in e) != 2:
            raise NotTwoOneType(f"edge {e} does not have exactly two vertices in A")
    return A, B


def two_one_partitions(F: ThreeGraph) -> Iterable[tuple[frozenset, frozenset]]:
    """All (A, B) with every edge meeting B exactly once; isolated vertices go to A."""
    verts = F.non_isolated()
    inB: dict[int, bool] = {}

    def consistent(v):
        for e in F.incident[v]:
            known = [inB[x] for x in e if x in inB]
            if sum(known) > 1 or (len(known) == 3 and sum(known) != 1):
                return False
        return True

    def rec(i):
        if i == len(verts):
            B = frozenset(v for v, b in inB.items() if b)
            yield frozenset(range(F.n)) - B, B
            return
        v = verts[i]
        for choice in (False, True):
            inB[v] = choice
            if consistent(v):
                yield from rec(i + 1)
            del inB[v]

    yield from rec(0)


def find_two_one_partition(F: ThreeGraph) -> tuple[frozenset, frozenset] | None:
    return next(iter(two_one_partitions(F)), None)


def certify_21_type(F: ThreeGraph, A: Iterable[int], B: Iterable[int], max_n: int | None = DEFAULT_MAX_N,
                    budget: int | None = None, threads: int | None = None) -> SearchResult:
    """Search labelings of A alone so that every link of a B-vertex is half-bipartite."""
    A, B = check_two_one(F, A, B)
    res = _search(F, search_order(F, A), "links", B, max_n, budget, threads)
    if res.witness is not None:
        sigma = Labeling(tuple(res.witness))
        if not links_ok(F, sigma, B):
            raise AssertionError("search returned a labeling of A with a monotone link path")
        res.witness = sigma
    return res


def extend_two_one_labeling(F: ThreeGraph, sigma_a: Labeling, B: Iterable[int]) -> Labeling:
    """Full labeling: A in the given order, then B by index.

    Links of A-vertices run between A and B, so placing B last keeps them
    free of monotone P3.
    """
    return combine_labelings([sigma_a, Labeling(tuple(sorted(B)))])


def certificate_from_labeling(F: ThreeGraph, sigma: Labeling) -> UniformZeroCertificate:
    coloring = forced_coloring(F, sigma)
    if coloring is None:
        raise ShapeMismatch("labeling forces conflicting colors")
    cert = UniformZeroCertificate(sigma, coloring)
    if not verify_uniform_certificate(F, cert):
        raise AssertionError("forced coloring does not verify")
    return cert


def certify_uniform_zero(F: ThreeGraph, method: str = "b2", max_n: int | None = DEFAULT_MAX_N,
                         budget: int | None = None, threads: int | None = None) -> SearchResult:
    """Dispatch by method; a found witness is always a full UniformZeroCertificate."""
    if method == "b2":
        return certify_uniform_zero_b2(F, max_n, budget, threads)
    if method == "links":
        res = certify_uniform_zero_links(F, max_n, budget, threads)
    elif method == "21type":
        part = find_two_one_partition(F)
        if part is None:
            raise NotTwoOneType("graph has no (2,1) vertex partition")
        A, B = part
        res = certify_21_type(F, A, B, max_n, budget, threads)
        if res.witness is not None:
            res.witness = extend_two_one_labeling(F, res.witness, B)
    else:
        raise ValueError(f"unknown method {method!r}")
    if res.witness is not None:
        res.witness = certificate_from_labeling(F, res.witness)
    return res
