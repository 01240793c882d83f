"""Layered functions, their search, reduced graphs, S-unions and linearization.

A function f on the vertices is *layered* when

* A1: every edge has a unique vertex of largest label;
* A2: edges with the same largest label carry the same label multiset;
* A3: two edges whose label multisets share two entries carry the same multiset.

A1 and A2 alone make f *semi-layered*. Only the relative order of labels
matters, so functions are kept in canonical form: range compressed to 1..k.
"""

from __future__ import annotations

import itertools
import warnings
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .core import VERTEX_CAP, ThreeGraph, induced_sub, link_graph
from .errors import (
    BadParams,
    IsolatedVertex,
    NotLayered,
    NotSemiLayered,
    OutOfRange,
    ReducedGraphMismatch,
    SearchBudgetExceeded,
    SharedLayerConflict,
    TooLarge,
)
from .search import BudgetHit, NodeCounter, SearchResult



def canonical_values(values: Sequence[int]) -> tuple[int, ...]:
    rank = {x: i + 1 for i, x in enumerate(sorted(set(values)))}
    return tuple(rank[x] for x in values)


@dataclass(frozen=True)
class LayerFunction:
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(x) for x in self.values)
        if any(x < 1 for x in vals):
            raise BadParams("layer labels must be positive")
        object.__setattr__(self, "values", canonical_values(vals))

    def __call__(self, v: int) -> int:
        return self.values[v]

    def __len__(self):
        return len(self.values)

    @property
    def cardinality(self) -> int:
        return len(set(self.values))

    def edge_labels(self, e: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(self.values[x] for x in e))


@dataclass
class LayerReport:
    """Violations of A1-A3; pairs list one witness edge pair per offending pair of label multisets."""

    a1_violations: list = field(default_factory=list)
    a2_violations: list = field(default_factory=list)
    a3_violations: list = field(default_factory=list)

    @property
    def layered(self) -> bool:
        return not (self.a1_violations or self.a2_violations or self.a3_violations)

    @property
    def semi_layered(self) -> bool:
        return not (self.a1_violations or self.a2_violations)


def _shared(t1: tuple, t2: tuple) -> int:
    return sum((Counter(t1) & Counter(t2)).values())


def validate_layer_function(F: ThreeGraph, f: LayerFunction | Sequence[int]) -> LayerReport:
    vals = f.values if isinstance(f, LayerFunction) else tuple(f)
    if len(vals) != F.n:
        raise BadParams(f"function has {len(vals)} values for {F.n} vertices")
    rep = LayerReport()
    first_edge: dict[tuple, tuple] = {}
    for e in F.edges:
        t = tuple(sorted(vals[x] for x in e))
        if t[1] == t[2]:
            rep.a1_violations.append(e)
        first_edge.setdefault(t, e)
    types = sorted(first_edge)
    for t1, t2 in itertools.combinations(types, 2):
        pair = (first_edge[t1], first_edge[t2])
        if t1[2] == t2[2]:
            rep.a2_violations.append(pair)
        if _shared(t1, t2) == 2:
            rep.a3_violations.append(pair)
    return rep


def is_layered_function(F: ThreeGraph, f) -> bool:
    return validate_layer_function(F, f).layered


def is_semi_layered_function(F: ThreeGraph, f) -> bool:
    return validate_layer_function(F, f).semi_layered


# -- search ---------------------------------------------------------------


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


class _TopAssignment:
    """Pick a top class for every type so tops are distinct and the order is acyclic.

    A type is a sorted triple of class ids. Its top must occur once in it and
    sits strictly above the other two classes; two types may not share a top.
    Any topological order of the resulting relation is a layered function.
    """

    def __init__(self, types: list[tuple[int, int, int]]):
        self.types = types

    @staticmethod
    def candidates(t: tuple[int, int, int]) -> list[int]:
        c = Counter(t)
        return sorted(x for x, m in c.items() if m == 1)

    def solve(self, hint: dict | None = None) -> dict | None:
        cands = {t: self.candidates(t) for t in self.types}
        if any(not c for c in cands.values()):
            return None
        if hint is not None:
            greedy = self._greedy(cands, hint)
            if greedy is not None:
                return greedy
        top_of: dict[tuple, int] = {}
        owner: dict[int, tuple] = {}
        above: dict[int, set[int]] = {}  # class -> classes it sits directly above

        def reaches(src, dst):
            stack, seen = [src], {src}
            while stack:
                x = stack.pop()
                if x == dst:
                    return True
                for y in above.get(x, ()):
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            return False

        def place(t, c):
            below = [x for x in t if x != c]
            # arcs top -> below; a cycle appears iff some lower class reaches c
            if any(reaches(b, c) for b in below):
                return None
            added = [b for b in below if b not in above.setdefault(c, set())]
            above[c].update(added)
            return added

        def rec(todo):
            if not todo:
                return True
            t = min(todo, key=lambda u: (sum(1 for c in cands[u] if c not in owner), u))
            rest = [u for u in todo if u != t]
            for c in cands[t]:
                if c in owner:
                    continue
                added = place(t, c)
                if added is None:
                    continue
                owner[c] = t
                top_of[t] = c
                if rec(rest):
                    return True
                del owner[c]
                del top_of[t]
                above[c].difference_update(added)
            return False

        return dict(top_of) if rec(list(self.types)) else None

    def _greedy(self, cands, hint):
        top_of = {}
        owner = {}
        for t in self.types:
            c = hint.get(t)
            if c is None or c not in cands[t] or c in owner:
                return None
            top_of[t] = c
            owner[c] = t
        return top_of if _topological(top_of) is not None else None


def _topological(top_of: dict) -> list[int] | None:
    """Classes bottom to top (Kahn, smallest id first), or None on a cycle."""
    import heapq

    nodes = set()
    succ: dict[int, set[int]] = {}
    indeg: Counter = Counter()
    for t, c in top_of.items():
        nodes.update(t)
        for b in t:
            if b != c and c not in succ.setdefault(b, set()):
                succ[b].add(c)
                indeg[c] += 1
    heap = [x for x in nodes if not indeg[x]]
    heapq.heapify(heap)
    out = []
    while heap:
        x = heapq.heappop(heap)
        out.append(x)
        for y in succ.get(x, ()):
            indeg[y] -= 1
            if not indeg[y]:
                heapq.heappush(heap, y)
    return out if len(out) == len(nodes) else None


class _LayerSearch:
    """Backtracking over partitions of the merged vertex classes into layers.

    Layer order is not branched on: A3 only looks at which labels are equal,
    and A1/A2 are decided by the existence of a top assignment over the label
    multisets of completed edges.
    """

    def __init__(self, items: list[int], edges: list[tuple[int, int, int]], counter: NodeCounter):
        self.items = items
        self.counter = counter
        self.inc: dict[int, list[tuple[int, int, int]]] = {x: [] for x in items}
        for e in edges:
            for x in set(e):
                self.inc[x].append(e)
        self.layer_of: dict[int, int] = {}
        self.nlayers = 0
        self.types: Counter = Counter()
        self.tops: dict | None = {}

    def _type(self, e) -> tuple[int, int, int]:
        return tuple(sorted(self.layer_of[y] for y in e))

    def _new_types(self, x: int) -> list[tuple] | None:
        """Types of edges completed by x that are not yet present, or None on an A1/A3 conflict."""
        new: list[tuple] = []
        for e in self.inc[x]:
            if any(y not in self.layer_of for y in e):
                continue
            t = self._type(e)
            if t[0] == t[2]:
                return None
            if t in self.types or t in new:
                continue
            for u in itertools.chain(self.types, new):
                if _shared(u, t) == 2:
                    return None
            new.append(t)
        return new

    def _forced(self, x: int):
        """Layer forced on x by A3, None if free, False if two edges force different layers."""
        forced = None
        for e in self.inc[x]:
            others = [y for y in e if y != x]
            if len(others) != 2 or any(y not in self.layer_of for y in others):
                continue
            pair = Counter(self.layer_of[y] for y in others)
            for t in self.types:
                rest = Counter(t) - pair
                if sum(rest.values()) == 1:
                    (lid,) = rest
                    if forced is None:
                        forced = lid
                    elif forced != lid:
                        return False
        return forced

    def _options(self, x: int) -> list[int]:
        forced = self._forced(x)
        if forced is False:
            return []
        cands = [forced] if forced is not None else list(range(self.nlayers + 1))
        out = []
        for lid in cands:
            self.layer_of[x] = lid
            ok = self._new_types(x) is not None
            del self.layer_of[x]
            if ok:
                out.append(lid)
        return out

    def _pick(self) -> tuple[int, list[int]]:
        """Fewest feasible layers among vertices closing an edge, else most constrained by degree."""
        best = None
        fallback = None
        for x in self.items:
            if x in self.layer_of:
                continue
            two = one = 0
            for e in self.inc[x]:
                k = sum(1 for y in e if y != x and y in self.layer_of)
                if k == 2:
                    two += 1
                elif k == 1:
                    one += 1
            if two:
                opts = self._options(x)
                key = (len(opts), -two, -one, x)
                if best is None or key < best[0]:
                    best = (key, x, opts)
                    if not opts:
                        break
            else:
                key = (-one, -len(self.inc[x]), x)
                if fallback is None or key < fallback[0]:
                    fallback = (key, x)
        if best is not None:
            return best[1], best[2]
        x = fallback[1]
        return x, list(range(self.nlayers + 1))

    def run(self) -> dict[int, int] | None:
        if len(self.layer_of) == len(self.items):
            order = _topological(self.tops)
            rank = {lid: i for i, lid in enumerate(order)}
            for lid in range(self.nlayers):
                rank.setdefault(lid, -1 - lid)
            # layers that head no edge relation go to the bottom
            vals = canonical_values([rank[self.layer_of[x]] for x in self.items])
            return dict(zip(self.items, vals))
        x, options = self._pick()
        for lid in options:
            self.counter.tick()
            fresh = lid == self.nlayers
            if fresh:
                self.nlayers += 1
            self.layer_of[x] = lid
            new = self._new_types(x)
            if new is not None:
                saved = self.tops
                if new:
                    for t in new:
                        self.types[t] += 1
                    tops = _TopAssignment(list(self.types)).solve(saved)
                else:
                    tops = saved
                if tops is not None:
                    self.tops = tops
                    out = self.run()
                    if out is not None:
                        return out
                self.tops = saved
                for t in new:
                    del self.types[t]
            del self.layer_of[x]
            if fresh:
                self.nlayers -= 1
        return None


AUTO_SWITCH = 50_000
ENGINES = ("auto", "search", "sat")


def _sat_layers(items: list[int], edges: list[tuple[int, int, int]]) -> dict[int, int] | None:
    """Decide layeredness with a SAT solver; returns values 1..k per item or None.

    Order encoding: o[x][k] means f(x) > k for k = 1..K-1 with K = len(items).
    lt(x, y) and eq(x, y) are defined only in the polarity the constraints use.
    """
    from pysat.formula import IDPool
    from pysat.solvers import Solver

    K = len(items)
    pool = IDPool()
    clauses: list[list[int]] = []

    def o(x, k):
        return pool.id(("o", x, k))

    for x in items:
        for k in range(1, K - 1):
            clauses.append([-o(x, k + 1), o(x, k)])

    lts: dict = {}

    def lt(x, y):
        key = ("lt", x, y)
        if key not in lts:
            v = lts[key] = pool.id(key)
            clauses.append([-v, o(y, 1)] if K > 1 else [-v])
            for k in range(1, K):
                clauses.append([-v, -o(x, k)] + ([o(y, k + 1)] if k + 1 < K else []))
        return lts[key]

    eqs: dict = {}

    def eq(x, y):
        """Literal for f(x) = f(y); None when trivially true."""
        if x == y:
            return None
        key = ("eq", min(x, y), max(x, y))
        if key not in eqs:
            v = eqs[key] = pool.id(key)
            for k in range(1, K):
                clauses.append([-v, -o(x, k), o(y, k)])
                clauses.append([-v, o(x, k), -o(y, k)])
            clauses.append([v, lt(x, y), lt(y, x)])
        return eqs[key]

    tops = {}
    for e in edges:
        row = []
        # after merging an edge may repeat a class, which then cannot be its top
        for x in (x for x in set(e) if e.count(x) == 1):
            t = pool.id(("top", e, x))
            tops[(e, x)] = t
            row.append(t)
            for y in e:
                if y != x:
                    clauses.append([-t, lt(y, x)])
        clauses.append(row)

    def rotations(e):
        a, b, c = e
        return ((a, b, c), (b, c, a), (c, a, b))

    for e1, e2 in itertools.combinations(edges, 2):
        # A3: matching two coordinates forces the third
        for c1, a1, b1 in rotations(e1):
            for c2, a2, b2 in rotations(e2):
                if c1 == c2:
                    continue
                for p, q in (((a1, a2), (b1, b2)), ((a1, b2), (b1, a2))):
                    lits = [eq(*q_) for q_ in (p, q)]
                    body = [-l for l in lits if l is not None]
                    clauses.append(body + [eq(c1, c2)])
        # A2: equal tops force a matched second coordinate, A3 supplies the third
        for x1, y1, z1 in rotations(e1):
            for x2, y2, z2 in rotations(e2):
                if y1 in (y2, z2) or (e1, x1) not in tops or (e2, x2) not in tops:
                    continue
                body = [-tops[(e1, x1)], -tops[(e2, x2)]]
                ex = eq(x1, x2)
                if ex is not None:
                    body.append(-ex)
                clauses.append(body + [eq(y1, y2), eq(y1, z2)])

    with Solver(name="cadical153", bootstrap_with=clauses) as solver:
        if not solver.solve():
            return None
        model = set(l for l in solver.get_model() if l > 0)
    raw = {x: 1 + sum(1 for k in range(1, K) if o(x, k) in model) for x in items}
    vals = canonical_values([raw[x] for x in items])
    return dict(zip(items, vals))


def find_layered_function(F: ThreeGraph, max_n: int | None = None,
                          budget: int | None = None, engine: str = "auto") -> SearchResult:
    """Complete search for a layered function; witness is a LayerFunction.

    Coneighbors of a common pair must share a layer (A3), so they are merged
    first. Isolated vertices go to the bottom layer. ``engine`` picks the
    backtracking search, a SAT encoding, or (auto) backtracking that hands over
    to SAT after ``AUTO_SWITCH`` nodes. ``max_n`` and ``budget`` bound the
    backtracking only.
    """
    if engine not in ENGINES:
        raise BadParams(f"unknown engine {engine!r}")
    if engine != "sat" and max_n is not None and F.n > max_n:
        raise SearchBudgetExceeded(
            f"layered search is bounded to {max_n} vertices (got {F.n}); raise max_n to override")
    uf = _UnionFind(F.n)
    for cs in F.coneighbors.values():
        cs = sorted(cs)
        for c in cs[1:]:
            uf.union(cs[0], c)
    items = sorted({uf.find(v) for v in F.non_isolated()})
    edges = sorted({tuple(sorted(uf.find(x) for x in e)) for e in F.edges})
    if any(e[0] == e[2] for e in edges):
        return SearchResult(None, True, 0)
    nodes = 0
    out = None
    if engine == "sat":
        out = _sat_layers(items, edges)
    else:
        cap = budget
        if engine == "auto":
            cap = AUTO_SWITCH if budget is None else min(budget, AUTO_SWITCH)
        counter = NodeCounter(cap)
        try:
            out = _LayerSearch(items, edges, counter).run()
            nodes = counter.nodes
        except BudgetHit:
            nodes = counter.nodes
            if engine == "search" or (budget is not None and budget <= AUTO_SWITCH):
                return SearchResult(None, False, nodes)
            out = _sat_layers(items, edges)
    if out is None:
        return SearchResult(None, True, nodes)
    vals = [out[uf.find(v)] if F.degrees[v] else 1 for v in range(F.n)]
    f = LayerFunction(tuple(vals))
    if not is_layered_function(F, f):
        raise AssertionError("search produced an invalid layered function")
    return SearchResult(f, True, nodes)


def weak_orderings(n: int) -> Iterator[tuple[int, ...]]:
    """Every canonical function on n points (ordered set partitions)."""
    if n == 0:
        yield ()
        return
    for k in range(1, n + 1):
        for vals in itertools.product(range(1, k + 1), repeat=n):
            if len(set(vals)) == k:
                yield vals


def iter_semi_layered_functions(F: ThreeGraph) -> Iterator[LayerFunction]:
    """Brute force over all canonical functions; small n only."""
    if F.n > 7:
        raise TooLarge("semi-layered enumeration is bounded to n <= 7", F.n)
    for vals in weak_orderings(F.n):
        if is_semi_layered_function(F, vals):
            yield LayerFunction(vals)


# -- reduction ------------------------------------------------------------


def _multiset_minus(a: tuple, b: tuple) -> list:
    return list((Counter(a) - Counter(b)).elements())


def iter_reduction(F: ThreeGraph, f: LayerFunction | Sequence[int]) -> Iterator[LayerFunction]:
    """Yield f and each relabeled function until no A3 violation remains.

    Each step takes the violating pair of edges with the lexicographically
    least (p, t, q): p the larger edge maximum, t the other maximum and q the
    label of the second edge missing from the first; every p becomes q.
    """
    f = f if isinstance(f, LayerFunction) else LayerFunction(tuple(f))
    if not is_semi_layered_function(F, f):
        raise NotSemiLayered("function violates A1 or A2")
    yield f
    while True:
        types = sorted({f.edge_labels(e) for e in F.edges})
        best = None
        for t1, t2 in itertools.combinations(types, 2):
            if _shared(t1, t2) != 2:
                continue
            hi, lo = (t1, t2) if t1[2] > t2[2] else (t2, t1)
            (q,) = _multiset_minus(lo, hi)
            cand = (hi[2], lo[2], q)
            if best is None or cand < best:
                best = cand
        if best is None:
            return
        p, _, q = best
        g = LayerFunction(tuple(q if x == p else x for x in f.values))
        if g.cardinality >= f.cardinality or not is_semi_layered_function(F, g):
            raise AssertionError("reduction step did not give a smaller semi-layered function")
        f = g
        yield f


def reduce_semi_layered(F: ThreeGraph, f: LayerFunction | Sequence[int]) -> LayerFunction:
    for g in iter_reduction(F, f):
        pass
    return g


# -- layers, reduced graph, S-union ---------------------------------------


@dataclass(frozen=True)
class ReducedGraph:
    k: int
    triple_edges: frozenset
    directed_pairs: frozenset


@dataclass
class LayerDecomposition:
    F: ThreeGraph
    f: LayerFunction
    layers: list[list[int]]
    linked_pairs: set[tuple[int, int]]
    reduced: ReducedGraph

    def sub(self, i: int, j: int) -> ThreeGraph:
        """Induced subgraph on layers i and j (1-based)."""
        return induced_sub(self.F, self.layers[i - 1] + self.layers[j - 1])

    def sub_vertices(self, i: int, j: int) -> list[int]:
        return sorted(self.layers[i - 1] + self.layers[j - 1])


def reduced_graph(F: ThreeGraph, f: LayerFunction) -> ReducedGraph:
    triples, directed = set(), set()
    for e in F.edges:
        a, b, c = f.edge_labels(e)
        if a < b:
            triples.add((a, b, c))
        else:
            directed.add((a, c))
    return ReducedGraph(f.cardinality, frozenset(triples), frozenset(directed))


def layer_decomposition(F: ThreeGraph, f: LayerFunction | Sequence[int]) -> LayerDecomposition:
    f = f if isinstance(f, LayerFunction) else LayerFunction(tuple(f))
    if not is_layered_function(F, f):
        raise NotLayered("function is not layered for this graph")
    k = f.cardinality
    layers = [[v for v in range(F.n) if f(v) == i] for i in range(1, k + 1)]
    red = reduced_graph(F, f)
    linked = set(red.directed_pairs)
    return LayerDecomposition(F, f, layers, linked, red)


def s_union(Fs: Sequence[ThreeGraph], f: LayerFunction | Sequence[int], S: Iterable[int]) -> ThreeGraph:
    """Glue copies of Fs: layers in S are shared, all other layers are copied apart.

    Vertices of shared layers keep their index order first, then the copies
    follow graph by graph.
    """
    Fs = list(Fs)
    if not Fs:
        raise BadParams("s_union of nothing")
    f = f if isinstance(f, LayerFunction) else LayerFunction(tuple(f))
    n = Fs[0].n
    if any(F.n != n for F in Fs) or len(f) != n:
        raise SharedLayerConflict("graphs and function must share one vertex set")
    S = set(S)
    k = f.cardinality
    if not S <= set(range(1, k + 1)):
        raise SharedLayerConflict(f"S names layers outside 1..{k}")
    decs = [layer_decomposition(F, f) for F in Fs]
    if any(d.reduced != decs[0].reduced for d in decs):
        raise ReducedGraphMismatch("summands have different reduced graphs")
    if any(i in S and j in S for i, j in decs[0].linked_pairs):
        warnings.warn("S contains a linked pair; the union need not keep vanishing uniform density",
                      stacklevel=2)
    base = Fs[0].vertex_names()
    shared = [v for v in range(n) if f(v) in S]
    private = [v for v in range(n) if f(v) not in S]
    index = {v: i for i, v in enumerate(shared)}
    names = [base[v] for v in shared]
    maps = []
    for c in range(len(Fs)):
        m = dict(index)
        for v in private:
            m[v] = len(names)
            names.append(f"{base[v]}.{c}" if len(Fs) > 1 else base[v])
        maps.append(m)
    edges = {tuple(sorted(m[x] for x in e)) for F, m in zip(Fs, maps) for e in F.edges}
    if len(set(names)) != len(names):
        names = None
    return ThreeGraph(len(index) + len(private) * len(Fs), edges, names)


def s_union_layers(f: LayerFunction, S: Iterable[int], copies: int) -> LayerFunction:
    """The layered function the S-union inherits, in s_union's vertex order."""
    S = set(S)
    n = len(f)
    vals = [f(v) for v in range(n) if f(v) in S]
    for _ in range(copies):
        vals += [f(v) for v in range(n) if f(v) not in S]
    return LayerFunction(tuple(vals))


# -- linearization --------------------------------------------------------


@dataclass
class Linearization:
    graph: ThreeGraph
    old_to_new: dict[int, int]
    new_vertices: list[int]
    apex: dict[tuple[int, int], int]


def _fresh(name: str, taken: set[str]) -> str:
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def linearize_vertex_detail(F: ThreeGraph, v: int, force: bool = False) -> Linearization:
    if not 0 <= v < F.n:
        raise OutOfRange(f"vertex {v} is outside [0, {F.n})")
    pairs = sorted(link_graph(F, v).edges)
    d = len(pairs)
    if d == 0:
        raise IsolatedVertex(f"vertex {F.name(v)} lies in no edge")
    size = F.n - 1 + 3 + 4 * d
    if size > VERTEX_CAP and not force:
        raise TooLarge(f"linearization would have {size} vertices", size)
    base = F.vertex_names()
    taken = set(base) - {base[v]}
    keep = [u for u in range(F.n) if u != v]
    old_to_new = {u: i for i, u in enumerate(keep)}
    names = [base[u] for u in keep]
    vn = base[v]
    X, Y, Z = len(names), len(names) + 1, len(names) + 2
    names += [_fresh(f"{s}[{vn}]", taken) for s in "xyz"]
    edges = [e for e in F.edges if v not in e]
    edges = [tuple(old_to_new[x] for x in e) for e in edges]
    apex = {}
    for a, b in pairs:
        tag = f"{base[a]}-{base[b]}"
        P = len(names)
        names += [_fresh(f"{vn}[{tag}]", taken)] + [_fresh(f"{s}[{vn}][{tag}]", taken) for s in "xyz"]
        xa, ya, za = P + 1, P + 2, P + 3
        apex[(a, b)] = P
        edges.append((old_to_new[a], old_to_new[b], P))
        edges += [(X, P, xa), (X, ya, za), (Y, P, ya), (Y, xa, za), (Z, P, za), (Z, xa, ya)]
    G = ThreeGraph(len(names), edges, names)
    assert G.n == F.n - 1 + 3 + 4 * d and G.num_edges == F.num_edges + 6 * d
    return Linearization(G, old_to_new, list(range(X, G.n)), apex)


def linearize_vertex(F: ThreeGraph, v: int, force: bool = False) -> ThreeGraph:
    """Replace v by one apex per link pair, tied together by Fano-minus-edge gadgets."""
    return linearize_vertex_detail(F, v, force).graph


def linearize_all(F: ThreeGraph, force: bool = False) -> ThreeGraph:
    """Linearize the lowest-index vertex with a non-matching link until none is left."""
    G = F
    while True:
        bad = next((v for v in range(G.n) if not link_graph(G, v).is_matching()), None)
        if bad is None:
            return G
        G = linearize_vertex(G, bad, force)
