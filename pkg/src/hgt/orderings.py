"""Labelings, monotone paths and half-bipartite graphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .core import Graph
from .errors import BadParams, NotHalfBipartite, NotInjective, Overlap


@dataclass(frozen=True)
class Labeling:
    """Bijection from a vertex set onto {1..|S|}.

    Stored as ``order``: the vertices listed by increasing label, so
    ``sigma(order[i]) == i + 1``. A labeling of the whole vertex set of an
    n-vertex graph has ``order`` a permutation of ``range(n)``.
    """

    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        if len(set(self.order)) != len(self.order):
            raise NotInjective("labeling lists a vertex twice")

    @classmethod
    def from_perm(cls, perm: Sequence[int]) -> Labeling:
        """From values: perm[v] = sigma(v) in 1..n."""
        n = len(perm)
        if sorted(perm) != list(range(1, n + 1)):
            raise BadParams("perm is not a bijection onto 1..n")
        order = [0] * n
        for v, s in enumerate(perm):
            order[s - 1] = v
        return cls(tuple(order))

    @classmethod
    def identity(cls, n: int) -> Labeling:
        return cls(tuple(range(n)))

    @cached_property
    def _pos(self) -> dict[int, int]:
        return {v: i + 1 for i, v in enumerate(self.order)}

    def __call__(self, v: int) -> int:
        return self._pos[v]

    def __len__(self):
        return len(self.order)

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(self.order)

    @property
    def perm(self) -> tuple[int, ...]:
        """Values sigma(v) for v = 0..n-1; only for labelings of range(n)."""
        n = len(self.order)
        if self.domain != frozenset(range(n)):
            raise BadParams("labeling is not on range(n)")
        return tuple(self._pos[v] for v in range(n))


def has_monotone_p3(G: Graph, sigma: Labeling) -> tuple[int, int, int] | None:
    """Lexicographically least (by labels) path u-v-w with sigma(u) < sigma(v) < sigma(w)."""
    best = None
    for v in range(G.n):
        nbrs = G.adjacency[v]
        if len(nbrs) < 2:
            continue
        sv = sigma(v)
        lo = hi = None
        for x in nbrs:
            sx = sigma(x)
            if sx < sv:
                if lo is None or sx < lo[0]:
                    lo = (sx, x)
            elif hi is None or sx < hi[0]:
                hi = (sx, x)
        if lo is not None and hi is not None:
            cand = (lo[0], sv, hi[0], (lo[1], v, hi[1]))
            if best is None or cand < best:
                best = cand
    return None if best is None else best[3]


def is_half_bipartite(G: Graph, sigma: Labeling) -> bool:
    ok = has_monotone_p3(G, sigma) is None
    assert not ok or G.is_bipartite(), "half-bipartite graph that is not bipartite"
    return ok


def complete_half_bipartite(k: int) -> tuple[Graph, Labeling]:
    """B_k on u1, v1, ..., uk, vk (indices 2i-2, 2i-1) with edges u_i v_j, i <= j."""
    if k < 1:
        raise BadParams("k must be at least 1")
    names = [s for i in range(1, k + 1) for s in (f"u{i}", f"v{i}")]
    edges = [(2 * i, 2 * j + 1) for i in range(k) for j in range(i, k)]
    return Graph(2 * k, edges, names), Labeling.identity(2 * k)


def embed_into_complete_half_bipartite(G: Graph, sigma: Labeling, k: int | None = None) -> dict[int, int]:
    """Order-preserving map of a half-bipartite (G, sigma) into B_k.

    The i-th vertex in sigma-order goes to u_i when it has a neighbour later
    in the order and to v_i otherwise. Vertices outside sigma's domain must be
    isolated and are left out.
    """
    w = sigma.order
    if k is None:
        k = len(w)
    if k < len(w):
        raise BadParams(f"B_{k} is too small for {len(w)} vertices")
    for v in range(G.n):
        if v not in sigma.domain and G.adjacency[v]:
            raise BadParams(f"vertex {v} has edges but no label")
    if has_monotone_p3(G, sigma) is not None:
        raise NotHalfBipartite("graph contains a monotone P3 under the labeling")
    image = {}
    for i, x in enumerate(w):
        forward = any(sigma(y) > i + 1 for y in G.adjacency[x])
        image[x] = 2 * i if forward else 2 * i + 1
    B, _ = complete_half_bipartite(k)
    for a, b in G.edges:
        if not B.has_edge(image[a], image[b]):
            raise AssertionError(f"edge {a}{b} not mapped onto an edge of B_{k}")
    for x, y in zip(w, w[1:]):
        if not image[x] < image[y]:
            raise AssertionError("map does not preserve the order")
    return image


def combine_labelings(parts: Iterable[Labeling]) -> Labeling:
    """Sum of labelings on disjoint sets: later parts are shifted past earlier ones."""
    order: list[int] = []
    seen: set[int] = set()
    for lab in parts:
        if seen & lab.domain:
            raise Overlap(f"labelings overlap on {sorted(seen & lab.domain)}")
        seen |= lab.domain
        order.extend(lab.order)
    return Labeling(tuple(order))


def induce_labeling(values: Mapping[int, int]) -> Labeling:
    """The unique labeling of values' keys ordered like the (injective) values."""
    if len(set(values.values())) != len(values):
        raise NotInjective("values are not injective")
    return Labeling(tuple(sorted(values, key=values.__getitem__)))
