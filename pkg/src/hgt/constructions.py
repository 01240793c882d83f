"""Extremal constructions, the minimum-codegree family and density estimates."""

from __future__ import annotations

import bisect
import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from .core import (
    EDGE_CAP,
    PartPattern,
    ThreeGraph,
    all_three_graphs,
    codegree_stats,
    is_isomorphic,
    tensor_product,
)
from .errors import BadParams, TooLarge
from .rng import SplitMix64, substream

PARTS = "ABCDEFGHIJKL"
TWELVE_TRIPLES = (
    "AAB ACI ADG AEE AFF AHJ AKL BBC BDJ BEH BFK BGG BIL CCD CEF "
    "CGK CHH CJL DDE DFL DHK DII EGI EJJ EKK ELL FGJ FHI GHL IJK"
)


@dataclass(frozen=True)
class UniformEstimate:
    d_hat: float
    samples: int
    min_subset_fraction: float
    seed: int


@dataclass(frozen=True)
class DensityReport:
    edge_density: float
    min_codegree: int
    uniform_estimate: UniformEstimate | None

    def as_text(self) -> str:
        lines = [f"edge_density={self.edge_density:.6f}", f"min_codegree={self.min_codegree}"]
        u = self.uniform_estimate
        if u is not None:
            lines += [f"uniform_d_hat={u.d_hat:.6f}", f"uniform_samples={u.samples}",
                      f"uniform_min_frac={u.min_subset_fraction}", f"uniform_seed={u.seed}"]
        return "\n".join(lines) + "\n"


def rb_construction(n: int, seed: int) -> ThreeGraph:
    """Random red/blue pair coloring; r<s<t is an edge iff rs, rt are red and st is blue.

    Pairs are colored in lexicographic order, red with probability 2/3.
    """
    if n < 3:
        raise BadParams("n must be at least 3")
    rng = SplitMix64(seed)
    red = {}
    for p in itertools.combinations(range(n), 2):
        red[p] = rng.bernoulli(2, 3)
    edges = [(r, s, t) for r, s, t in itertools.combinations(range(n), 3)
             if red[(r, s)] and red[(r, t)] and not red[(s, t)]]
    return ThreeGraph(n, edges)


def twelve_part_pattern() -> PartPattern:
    idx = {c: i for i, c in enumerate(PARTS)}
    return PartPattern(12, [[idx[c] for c in t] for t in TWELVE_TRIPLES.split()], list(PARTS))


def twelve_part_construction(m: int, force: bool = False) -> tuple[PartPattern, ThreeGraph]:
    """Blow-up of the pattern: parts of size m, vertex part*m + j named like ``A0``."""
    if m < 1:
        raise BadParams("part size must be at least 1")
    P = twelve_part_pattern()
    total = sum(_triple_count(t, m) for t in P.triples)
    if total > EDGE_CAP and not force:
        raise TooLarge(f"twelve-part construction with m={m} would have {total} edges (cap {EDGE_CAP})", total)
    edges = []
    for t in P.triples:
        groups = [[x * m + j for j in range(m)] for x in t]
        if t[0] == t[1] == t[2]:
            edges.extend(itertools.combinations(groups[0], 3))
        elif t[0] == t[1]:
            edges.extend((a, b, c) for a, b in itertools.combinations(groups[0], 2) for c in groups[2])
        elif t[1] == t[2]:
            edges.extend((a, b, c) for a in groups[0] for b, c in itertools.combinations(groups[1], 2))
        else:
            edges.extend(itertools.product(*groups))
    names = [f"{PARTS[x]}{j}" for x in range(12) for j in range(m)]
    return P, ThreeGraph(12 * m, edges, names)


def _triple_count(t, m):
    c = 1
    for x, k in ((x, t.count(x)) for x in set(t)):
        c *= math.comb(m, k)
    return c


def _homomorphisms(F: ThreeGraph, P: PartPattern) -> Iterator[dict[int, int]]:
    order = sorted(range(F.n), key=lambda v: (-F.degrees[v], v))
    img: dict[int, int] = {}

    def ok(v):
        for e in F.incident[v]:
            if all(x in img for x in e):
                if tuple(sorted(img[x] for x in e)) not in P.triple_set:
                    return False
            else:
                known = [img[x] for x in e if x in img]
                if len(known) == 2 and tuple(sorted(known)) not in P.completions:
                    return False
        return True

    def rec(i):
        if i == len(order):
            yield dict(img)
            return
        v = order[i]
        for part in range(P.p):
            img[v] = part
            if ok(v):
                yield from rec(i + 1)
            del img[v]

    yield from rec(0)


def pattern_homomorphism(F: ThreeGraph, P: PartPattern) -> dict[int, int] | None:
    """A map V(F) -> parts sending every edge onto a triple of P, or None (search is complete).

    A map exists iff F embeds in the blow-up with all parts of size at least |V(F)|.
    """
    return next(_homomorphisms(F, P), None)


def all_pattern_homomorphisms(F: ThreeGraph, P: PartPattern) -> list[dict[int, int]]:
    return list(_homomorphisms(F, P))


def enumerate_min_codegree_family(k: int) -> list[ThreeGraph]:
    """All k-vertex 3-graphs with minimum codegree at least 2, one per isomorphism class."""
    if k > 5:
        raise TooLarge(f"family enumeration is bounded to k <= 5 (2^{math.comb(k, 3)} edge sets)", k)
    if k < 3:
        return []
    reps: list[ThreeGraph] = []
    for F in all_three_graphs(k):
        if codegree_stats(F)[0] < 2:
            continue
        if not any(is_isomorphic(F, G) for G in reps):
            reps.append(F)
    return reps


def build_tensor_counterexample(k: int, force: bool = False) -> ThreeGraph:
    family = enumerate_min_codegree_family(k)
    if not family:
        raise BadParams(f"no {k}-vertex 3-graph has minimum codegree at least 2")
    return tensor_product(family, force=force)


def _uniform_sample(H: ThreeGraph, size: int, rng: SplitMix64) -> float:
    U = rng.sample(H.n, size)
    inside = set(U)
    seen = 0
    for e in H.edges:
        if e[0] in inside and e[1] in inside and e[2] in inside:
            seen += 1
    return seen / math.comb(size, 3)


def density_estimates(H: ThreeGraph, samples: int | None = None, min_subset_fraction: float = 0.25,
                      seed: int = 0) -> DensityReport:
    """Edge density, minimum codegree and (with samples) a sampled uniform-density estimate.

    Sample i draws U uniformly among all subsets with |U| >= max(3, ceil(c n)),
    from its own stream (size k with weight C(n, k), then a uniform k-subset);
    d_hat is the minimum over samples.
    """
    n = H.n
    dens = H.num_edges / math.comb(n, 3) if n >= 3 else 0.0
    mc = codegree_stats(H)[0] if n >= 2 else 0
    est = None
    if samples is not None:
        if samples < 1:
            raise BadParams("samples must be at least 1")
        if not 0 < min_subset_fraction <= 1:
            raise BadParams("min_subset_fraction must lie in (0, 1]")
        lo = max(3, math.ceil(min_subset_fraction * n))
        if lo > n:
            raise BadParams("graph is too small for the requested subset size")
        weights = [math.comb(n, k) for k in range(lo, n + 1)]
        cum = list(itertools.accumulate(weights))
        d_hat = 1.0
        for i in range(samples):
            rng = substream(seed, i)
            size = lo + bisect.bisect_right(cum, rng.below(cum[-1]))
            d_hat = min(d_hat, _uniform_sample(H, size, rng))
        est = UniformEstimate(d_hat, samples, min_subset_fraction, seed)
    return DensityReport(dens, mc, est)
