"""3-graph and graph value types, derived structures and named generators.

Vertices are dense indices ``0..n-1``. Names are carried for presentation only:
equality and hashing look at ``n`` and the edge set.
"""

from __future__ import annotations

import itertools
import math
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    BadParams,
    DuplicateEdge,
    OutOfRange,
    RepeatedVertexInEdge,
    TooLarge,
    UnknownName,
)

Triple = tuple[int, int, int]
Pair = tuple[int, int]

VERTEX_CAP = 10**6
EDGE_CAP = 10**6
ISO_BOUND = 10


def _check_names(names: Sequence[str] | None, n: int) -> tuple[str, ...] | None:
    if names is None:
        return None
    names = tuple(str(x) for x in names)
    if len(names) != n:
        raise BadParams(f"expected {n} names, got {len(names)}")
    if len(set(names)) != n:
        raise BadParams("vertex names must be pairwise distinct")
    for x in names:
        if not x or any(c.isspace() for c in x):
            raise BadParams(f"vertex name {x!r} is empty or contains whitespace")
    return names


class ThreeGraph:
    """Finite 3-uniform hypergraph with sorted, duplicate-free edges."""

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), names: Sequence[str] | None = None):
        if n < 0:
            raise BadParams("vertex count must be non-negative")
        seen: set[Triple] = set()
        for e in edges:
            e = tuple(e)
            if len(e) != 3:
                raise BadParams(f"edge {e} does not have three vertices")
            for x in e:
                if not 0 <= x < n:
                    raise OutOfRange(f"vertex {x} of edge {e} is outside [0, {n})")
            if len(set(e)) != 3:
                raise RepeatedVertexInEdge(f"edge {e} repeats a vertex")
            t = tuple(sorted(e))
            if t in seen:
                raise DuplicateEdge(f"edge {t} appears twice")
            seen.add(t)
        self.n = n
        self.edges: tuple[Triple, ...] = tuple(sorted(seen))
        self.names = _check_names(names, n)

    def __eq__(self, other):
        if not isinstance(other, ThreeGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"ThreeGraph(n={self.n}, edges={list(self.edges)})"

    def __getstate__(self):
        return {"n": self.n, "edges": self.edges, "names": self.names}

    def __setstate__(self, state):
        self.__dict__.update(state)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Triple]:
        return frozenset(self.edges)

    def has_edge(self, a: int, b: int, c: int) -> bool:
        return tuple(sorted((a, b, c))) in self.edge_set

    @cached_property
    def coneighbors(self) -> dict[Pair, frozenset[int]]:
        """Pair -> coneighbor set, only for pairs of positive codegree."""
        acc: dict[Pair, set[int]] = {}
        for a, b, c in self.edges:
            acc.setdefault((a, b), set()).add(c)
            acc.setdefault((a, c), set()).add(b)
            acc.setdefault((b, c), set()).add(a)
        return {p: frozenset(s) for p, s in acc.items()}

    def coneighbor_set(self, u: int, v: int) -> frozenset[int]:
        if u > v:
            u, v = v, u
        return self.coneighbors.get((u, v), frozenset())

    def codegree(self, u: int, v: int) -> int:
        return len(self.coneighbor_set(u, v))

    @cached_property
    def incident(self) -> tuple[tuple[Triple, ...], ...]:
        inc: list[list[Triple]] = [[] for _ in range(self.n)]
        for e in self.edges:
            for x in e:
                inc[x].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.incident)

    def name(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)

    def vertex_names(self) -> tuple[str, ...]:
        return self.names if self.names is not None else tuple(str(v) for v in range(self.n))

    def index(self, name: str) -> int:
        try:
            return self.vertex_names().index(name)
        except ValueError:
            raise OutOfRange(f"no vertex named {name!r}") from None

    def non_isolated(self) -> list[int]:
        return [v for v in range(self.n) if self.degrees[v]]

    def with_names(self, names: Sequence[str] | None) -> ThreeGraph:
        return ThreeGraph(self.n, self.edges, names)


class Graph:
    """Simple graph on ``0..n-1``."""

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), names: Sequence[str] | None = None):
        seen: set[Pair] = set()
        for e in edges:
            a, b = e
            for x in (a, b):
                if not 0 <= x < n:
                    raise OutOfRange(f"vertex {x} of pair {e} is outside [0, {n})")
            if a == b:
                raise RepeatedVertexInEdge(f"loop at {a}")
            p = (a, b) if a < b else (b, a)
            if p in seen:
                raise DuplicateEdge(f"pair {p} appears twice")
            seen.add(p)
        self.n = n
        self.edges: tuple[Pair, ...] = tuple(sorted(seen))
        self.names = _check_names(names, n)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    def __getstate__(self):
        return {"n": self.n, "edges": self.edges, "names": self.names}

    def __setstate__(self, state):
        self.__dict__.update(state)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return tuple(frozenset(x) for x in adj)

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adjacency[a]

    def is_matching(self) -> bool:
        return all(len(x) <= 1 for x in self.adjacency)

    def is_bipartite(self) -> bool:
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adjacency[x]:
                    if side[y] < 0:
                        side[y] = 1 - side[x]
                        stack.append(y)
                    elif side[y] == side[x]:
                        return False
        return True


class PartPattern:
    """Family of part-multisets of size three over parts ``0..p-1``."""

    def __init__(self, p: int, triples: Iterable[Sequence[int]], names: Sequence[str] | None = None):
        seen: set[Triple] = set()
        for t in triples:
            t = tuple(sorted(t))
            if len(t) != 3 or not all(0 <= x < p for x in t):
                raise BadParams(f"bad part triple {t}")
            if t in seen:
                raise DuplicateEdge(f"part triple {t} appears twice")
            seen.add(t)
        self.p = p
        self.triples: tuple[Triple, ...] = tuple(sorted(seen))
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(p))

    @cached_property
    def triple_set(self) -> frozenset[Triple]:
        return frozenset(self.triples)

    @cached_property
    def completions(self) -> dict[Pair, frozenset[int]]:
        """Sorted part pair -> parts completing it to a triple of the pattern."""
        acc: dict[Pair, set[int]] = {}
        for t in self.triples:
            for i in range(3):
                rest = t[:i] + t[i + 1:]
                acc.setdefault(rest, set()).add(t[i])
        return {k: frozenset(v) for k, v in acc.items()}

    def pair_coverage(self) -> dict[Pair, int]:
        """Number of triples containing each part pair (X = Y included, as a sub-multiset)."""
        cov = {}
        for x in range(self.p):
            for y in range(x, self.p):
                cov[(x, y)] = sum(1 for t in self.triples if _contains_pair(t, x, y))
        return cov


def _contains_pair(t: Triple, x: int, y: int) -> bool:
    rest = list(t)
    for z in (x, y):
        if z not in rest:
            return False
        rest.remove(z)
    return True


def build_three_graph(n: int, edges: Iterable[Sequence[int]], names: Sequence[str] | None = None) -> ThreeGraph:
    return ThreeGraph(n, edges, names)


def shadow(F: ThreeGraph) -> Graph:
    pairs = {(a, b) for a, b, c in F.edges} | {(a, c) for a, b, c in F.edges} | {(b, c) for a, b, c in F.edges}
    return Graph(F.n, pairs, F.names)


def link_graph(F: ThreeGraph, u: int) -> Graph:
    """Link of u, kept on the full index set with u isolated."""
    if not 0 <= u < F.n:
        raise OutOfRange(f"vertex {u} is outside [0, {F.n})")
    pairs = [tuple(x for x in e if x != u) for e in F.incident[u]]
    return Graph(F.n, pairs, F.names)


def codegree_stats(F: ThreeGraph) -> tuple[int, dict[Pair, frozenset[int]]]:
    """Minimum codegree and the full pair -> coneighbor-set map."""
    if F.n < 2:
        raise BadParams("codegree needs at least two vertices")
    full = {(a, b): F.coneighbor_set(a, b) for a, b in itertools.combinations(range(F.n), 2)}
    return min(len(s) for s in full.values()), full


def min_codegree(F: ThreeGraph) -> int:
    if F.n < 2:
        raise BadParams("codegree needs at least two vertices")
    npairs = F.n * (F.n - 1) // 2
    if len(F.coneighbors) < npairs:
        return 0
    return min(len(s) for s in F.coneighbors.values())


def blowup(F: ThreeGraph, sizes: Sequence[int] | int, force: bool = False) -> ThreeGraph:
    """Replace each vertex v by sizes[v] independent copies."""
    if isinstance(sizes, int):
        sizes = [sizes] * F.n
    sizes = list(sizes)
    if len(sizes) != F.n:
        raise BadParams(f"need {F.n} sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise BadParams("blow-up sizes must be at least 1")
    m = sum(sizes[a] * sizes[b] * sizes[c] for a, b, c in F.edges)
    if m > EDGE_CAP and not force:
        raise TooLarge(f"blow-up would have {m} edges (cap {EDGE_CAP})", m)
    offset = list(itertools.accumulate([0] + sizes))
    copies = [range(offset[v], offset[v + 1]) for v in range(F.n)]
    edges = [t for a, b, c in F.edges for t in itertools.product(copies[a], copies[b], copies[c])]
    base = F.vertex_names()
    names = [base[v] if sizes[v] == 1 else f"{base[v]}.{j}" for v in range(F.n) for j in range(sizes[v])]
    if len(set(names)) != len(names):
        names = None
    return ThreeGraph(offset[-1], edges, names)


def tensor_product(Fs: Sequence[ThreeGraph], force: bool = False) -> ThreeGraph:
    """Coordinatewise product: a triple is an edge iff every projection is an edge."""
    Fs = list(Fs)
    if not Fs:
        raise BadParams("tensor product of an empty sequence")
    nv = math.prod(F.n for F in Fs)
    if nv > VERTEX_CAP and not force:
        raise TooLarge(f"tensor product would have {nv} vertices (cap {VERTEX_CAP})", nv)
    ne = Fs[0].num_edges * math.prod(6 * F.num_edges for F in Fs[1:])
    if ne > EDGE_CAP and not force:
        raise TooLarge(f"tensor product would have {ne} edges (cap {EDGE_CAP})", ne)
    radix = [1] * len(Fs)
    for i in range(len(Fs) - 2, -1, -1):
        radix[i] = radix[i + 1] * Fs[i + 1].n
    # first coordinate fixes which product vertex plays which role, so each
    # unordered product edge is produced exactly once
    choices = [[e for e in Fs[0].edges]]
    for F in Fs[1:]:
        choices.append([p for e in F.edges for p in itertools.permutations(e)])
    edges = []
    for combo in itertools.product(*choices):
        x = y = z = 0
        for r, (a, b, c) in zip(radix, combo):
            x += r * a
            y += r * b
            z += r * c
        edges.append((x, y, z))
    names = [",".join(p) for p in itertools.product(*(F.vertex_names() for F in Fs))]
    return ThreeGraph(nv, edges, names)


def project(product_vertex: int, Fs: Sequence[ThreeGraph]) -> tuple[int, ...]:
    """Coordinates of a tensor-product vertex index."""
    coords = []
    for F in reversed(Fs):
        product_vertex, r = divmod(product_vertex, F.n)
        coords.append(r)
    return tuple(reversed(coords))


def induced_sub(F: ThreeGraph, U: Iterable[int]) -> ThreeGraph:
    U = sorted(set(U))
    for x in U:
        if not 0 <= x < F.n:
            raise OutOfRange(f"vertex {x} is outside [0, {F.n})")
    pos = {v: i for i, v in enumerate(U)}
    edges = [(pos[a], pos[b], pos[c]) for a, b, c in F.edges if a in pos and b in pos and c in pos]
    base = F.vertex_names()
    return ThreeGraph(len(U), edges, [base[v] for v in U])


def delete_vertices(F: ThreeGraph, W: Iterable[int]) -> ThreeGraph:
    W = set(W)
    for x in W:
        if not 0 <= x < F.n:
            raise OutOfRange(f"vertex {x} is outside [0, {F.n})")
    return induced_sub(F, [v for v in range(F.n) if v not in W])


def is_linear(F: ThreeGraph) -> bool:
    """Every pair has codegree at most one; cross-checked against the link-matching view."""
    by_codegree = all(len(s) <= 1 for s in F.coneighbors.values())
    by_links = all(link_graph(F, v).is_matching() for v in range(F.n))
    if by_codegree != by_links:
        raise AssertionError("linearity checks disagree")
    return by_codegree


def is_tripartite(F: ThreeGraph) -> bool:
    """Brute force over 3-colorings with every edge rainbow; n small."""
    verts = F.non_isolated()
    if not verts:
        return True
    for colors in itertools.product(range(3), repeat=len(verts) - 1):
        c = dict(zip(verts, (0,) + colors))
        if all(len({c[a], c[b], c[x]}) == 3 for a, b, x in F.edges):
            return True
    return False


# -- isomorphism ----------------------------------------------------------


def _vertex_profile(F: ThreeGraph, v: int) -> tuple:
    return (F.degrees[v], tuple(sorted(F.codegree(v, u) for u in range(F.n) if u != v)))


def find_isomorphism(F1: ThreeGraph, F2: ThreeGraph, force: bool = False) -> list[int] | None:
    """Vertex bijection p with p(E(F1)) = E(F2), or None.

    Candidates are pruned by degree and by the multiset of codegrees to the
    other vertices; every partial map keeps pairwise codegrees equal.
    """
    if max(F1.n, F2.n) > ISO_BOUND and not force:
        raise TooLarge(f"isomorphism test is bounded to n <= {ISO_BOUND}", max(F1.n, F2.n))
    if F1.n != F2.n or F1.num_edges != F2.num_edges:
        return None
    if sorted(F1.degrees) != sorted(F2.degrees):
        return None
    if sorted(len(s) for s in F1.coneighbors.values()) != sorted(len(s) for s in F2.coneighbors.values()):
        return None
    n = F1.n
    prof1 = [_vertex_profile(F1, v) for v in range(n)]
    prof2 = [_vertex_profile(F2, v) for v in range(n)]
    if sorted(prof1) != sorted(prof2):
        return None
    order = sorted(range(n), key=lambda v: (-F1.degrees[v], v))
    img = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or prof2[w] != prof1[v]:
                continue
            ok = True
            for u in order[:i]:
                if F1.codegree(v, u) != F2.codegree(w, img[u]):
                    ok = False
                    break
            if ok:
                for e in F1.incident[v]:
                    if all(img[x] >= 0 or x == v for x in e):
                        a, b, c = (w if x == v else img[x] for x in e)
                        if not F2.has_edge(a, b, c):
                            ok = False
                            break
            if not ok:
                continue
            img[v] = w
            used[w] = True
            if extend(i + 1):
                return True
            img[v] = -1
            used[w] = False
        return False

    return list(img) if extend(0) else None


def is_isomorphic(F1: ThreeGraph, F2: ThreeGraph, force: bool = False) -> bool:
    return find_isomorphism(F1, F2, force) is not None


def relabel(F: ThreeGraph, perm: Sequence[int]) -> ThreeGraph:
    """Image of F under v -> perm[v]."""
    edges = [(perm[a], perm[b], perm[c]) for a, b, c in F.edges]
    names = None
    if F.names is not None:
        names = [None] * F.n
        for v, p in enumerate(perm):
            names[p] = F.names[v]
    return ThreeGraph(F.n, edges, names)


def canonical_form(F: ThreeGraph) -> tuple[Triple, ...]:
    """Lexicographically least relabeled edge list over all n! permutations."""
    best = None
    for perm in itertools.permutations(range(F.n)):
        key = tuple(sorted(tuple(sorted((perm[a], perm[b], perm[c]))) for a, b, c in F.edges))
        if best is None or key < best:
            best = key
    return best


def all_three_graphs(n: int) -> Iterator[ThreeGraph]:
    triples = list(itertools.combinations(range(n), 3))
    for mask in range(1 << len(triples)):
        yield ThreeGraph(n, [t for i, t in enumerate(triples) if mask >> i & 1])


def isomorphism_classes(n: int) -> list[ThreeGraph]:
    """One representative per isomorphism class of 3-graphs on n vertices (n <= 6)."""
    if n > 6:
        raise TooLarge("isomorphism-class enumeration is bounded to n <= 6", n)
    reps: dict[tuple, ThreeGraph] = {}
    for F in all_three_graphs(n):
        key = canonical_form(F)
        if key not in reps:
            reps[key] = ThreeGraph(n, key)
    return list(reps.values())


# -- named graphs ---------------------------------------------------------


def _cycle(l: int) -> list[Triple]:
    return [(i, (i + 1) % l, (i + 2) % l) for i in range(l)]


def _zycle(l: int) -> tuple[list[str], list[Triple]]:
    names = [s for i in range(1, l + 1) for s in (f"u{i}", f"v{i}")]
    u = lambda i: 2 * ((i - 1) % l)
    v = lambda i: 2 * ((i - 1) % l) + 1
    edges = []
    for i in range(1, l + 1):
        edges.append((u(i), v(i), u(i + 1)))
        edges.append((u(i), v(i), v(i + 1)))
    return names, edges


def _lettered(names: str, edges: str) -> ThreeGraph:
    names = names.split()
    idx = {x: i for i, x in enumerate(names)}
    return ThreeGraph(len(names), [tuple(idx[c] for c in e) for e in edges.split()], names)


FANO_NAMES = ["x_v", "y_v", "z_v", "v_uw", "x_uw", "y_uw", "z_uw"]
# the six edges of the linearization gadget; the Fano plane adds (0, 1, 2)
FANO_MINUS_EDGES = [(0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]

NAMED = ("edge", "K4-3", "K4-3-minus", "C", "C-minus", "Z", "Z-minus", "fano", "fano-minus",
         "F32", "F1", "F2", "F", "Ktt", "B")


def _param(params: dict, key: str, lo: int) -> int:
    if key not in params:
        raise BadParams(f"missing parameter {key}")
    try:
        val = int(params[key])
    except (TypeError, ValueError):
        raise BadParams(f"parameter {key} must be an integer") from None
    if val < lo:
        raise BadParams(f"parameter {key} must be at least {lo}")
    return val


def generate_named(name: str, **params):
    """Named 3-graph; for ``B`` a (Graph, Labeling) pair."""
    if name == "edge":
        return ThreeGraph(3, [(0, 1, 2)], ["1", "2", "3"])
    if name == "K4-3":
        return ThreeGraph(4, itertools.combinations(range(4), 3), ["1", "2", "3", "4"])
    if name == "K4-3-minus":
        return ThreeGraph(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)], ["1", "2", "3", "4"])
    if name in ("C", "C-minus"):
        l = _param(params, "l", 4 if name == "C" else 5)
        edges = _cycle(l)
        if name == "C-minus":
            edges.remove((l - 2, l - 1, 0))
        return ThreeGraph(l, edges, [str(i) for i in range(1, l + 1)])
    if name in ("Z", "Z-minus"):
        r = _param(params, "r", 2 if name == "Z" else 3)
        names, edges = _zycle(r)
        if name == "Z-minus":
            edges.remove((2 * (r - 1), 2 * (r - 1) + 1, 1))
        return ThreeGraph(2 * r, edges, names)
    if name == "fano":
        return ThreeGraph(7, FANO_MINUS_EDGES + [(0, 1, 2)], FANO_NAMES)
    if name == "fano-minus":
        return ThreeGraph(7, FANO_MINUS_EDGES, FANO_NAMES)
    if name == "F32":
        return _lettered("1 2 3 4 5", "123 124 125 345")
    if name == "F1":
        return _lettered("a b c d e", "abc abd cde")
    if name == "F2":
        return _lettered("e f g h i j k l", "fgh fgi hij hik jkl ehl")
    if name == "F":
        return _lettered("a b c d e f g h i j k l", "abc abd cde fgh fgi hij hik jkl ehl")
    if name == "Ktt":
        t = _param(params, "t", 1)
        names = [f"{p}{i}" for p in "xyz" for i in range(1, t + 1)]
        return ThreeGraph(3 * t, itertools.product(range(t), range(t, 2 * t), range(2 * t, 3 * t)), names)
    if name == "B":
        from .orderings import complete_half_bipartite

        return complete_half_bipartite(_param(params, "k", 1))
    raise UnknownName(f"unknown graph name {name!r}; known: {', '.join(NAMED)}")
