"""Acceptance suite: each item returns (passed, detail)."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable

from .constructions import (
    all_pattern_homomorphisms,
    build_tensor_counterexample,
    density_estimates,
    enumerate_min_codegree_family,
    rb_construction,
    twelve_part_construction,
    twelve_part_pattern,
)
from .core import (
    Graph,
    ThreeGraph,
    blowup,
    codegree_stats,
    generate_named,
    is_isomorphic,
    is_tripartite,
    isomorphism_classes,
)
from .corpus import corpus_files, load_corpus
from .embed import EmbeddingProblem, find_embedding
from .errors import TooLarge
from .io import parse_certificate, parse_graph, serialize_certificate, serialize_graph, verify_certificate
from .layered import (
    find_layered_function,
    iter_reduction,
    iter_semi_layered_functions,
    is_layered_function,
    layer_decomposition,
    linearize_vertex,
)
from .orderings import Labeling, embed_into_complete_half_bipartite, has_monotone_p3
from .rng import SplitMix64, substream
from .uniform import certify_uniform_zero

RB_TARGET = 4 / 27


@dataclass
class ItemResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.number:2d} {self.name}: {self.detail} [{self.seconds:.1f}s]"


def _timed(fn, *args):
    t = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t


def random_graph(rng: SplitMix64, n: int) -> ThreeGraph:
    return ThreeGraph(n, [e for e in itertools.combinations(range(n), 3) if rng.bernoulli(1, 2)])


def certificate_roundtrip(F: ThreeGraph, cert) -> bool:
    """Serialize, parse back against F and verify; the check an external verifier would run."""
    back = parse_certificate(serialize_certificate(F, cert), F)
    return verify_certificate(F, back)


# -- items ----------------------------------------------------------------


def item_positive():
    corpus = load_corpus()
    targets = ["edge", "c5minus", "z3minus", "z4minus", "fanominus"]
    targets += sorted(k for k, F in corpus.items() if F.n <= 6 and F.num_edges and is_tripartite(F)
                      and k not in targets)
    bad, slowest = [], 0.0
    for k in targets:
        res, dt = _timed(certify_uniform_zero, corpus[k])
        slowest = max(slowest, dt)
        if not res.found or not certificate_roundtrip(corpus[k], res.witness) or dt >= 5:
            bad.append(k)
    return not bad, f"{len(targets) - len(bad)}/{len(targets)} certified, slowest {slowest:.3f}s" + (
        f", failed {bad}" if bad else "")


def item_negative():
    out = []
    ok = True
    for name in ("K4-3-minus", "K4-3"):
        res, dt = _timed(certify_uniform_zero, generate_named(name))
        good = not res.found and res.complete and dt < 5
        ok &= good
        out.append(f"{name} {'complete NO' if good else 'unexpected'} ({dt:.3f}s)")
    return ok, "; ".join(out)


def item_equivalence():
    t = time.perf_counter()
    graphs = [F for n in range(0, 6) for F in isomorphism_classes(n)]
    for i in range(200):
        rng = substream(3, i)
        graphs.append(random_graph(rng, 6 + rng.below(2)))
    bad = 0
    for F in graphs:
        a = certify_uniform_zero(F, "b2", max_n=None)
        b = certify_uniform_zero(F, "links", max_n=None)
        if not (a.complete and b.complete) or a.found != b.found:
            bad += 1
    dt = time.perf_counter() - t
    return bad == 0 and dt < 600, f"{len(graphs)} graphs, {bad} disagreements, {dt:.1f}s"


def item_layered():
    t = time.perf_counter()
    corpus = load_corpus()
    out = []
    ok = True
    for k in ("f1", "f2", "z3minus", "z4minus", "c5minus"):
        r = find_layered_function(corpus[k])
        good = r.found and is_layered_function(corpus[k], r.witness) and certificate_roundtrip(corpus[k], r.witness)
        ok &= good
        out.append(f"{k} {'witness' if good else 'MISSING'}")
    r = find_layered_function(corpus["f"])
    good = not r.found and r.complete
    ok &= good
    out.append(f"f {'complete NO' if good else 'unexpected'}")
    dt = time.perf_counter() - t
    return ok and dt < 60, ", ".join(out) + f" ({dt:.2f}s)"


def item_linear():
    bad = checked = 0
    for i in range(50):
        rng = substream(5, i)
        F = random_graph(rng, 3 + rng.below(4))
        base = find_layered_function(F)
        for v in F.non_isolated():
            r = find_layered_function(linearize_vertex(F, v), max_n=None)
            checked += 1
            if not (base.complete and r.complete) or base.found != r.found:
                bad += 1
    return bad == 0, f"{checked} (F, v) pairs, {bad} discrepancies"


def item_func():
    fails = runs = 0
    for k, F in load_corpus().items():
        if F.n > 5:
            continue
        for f in iter_semi_layered_functions(F):
            runs += 1
            chain = list(iter_reduction(F, f))
            cards = [g.cardinality for g in chain]
            if any(a <= b for a, b in zip(cards, cards[1:])) or not is_layered_function(F, chain[-1]):
                fails += 1
    return fails == 0, f"{runs} semi-layered functions reduced, {fails} failures"


def item_linked():
    bad, checked = [], 0
    for k, F in load_corpus().items():
        if not F.num_edges:
            continue
        r = find_layered_function(F)
        if not r.found:
            continue
        dec = layer_decomposition(F, r.witness)
        whole = certify_uniform_zero(F, "links", max_n=None)
        parts = [certify_uniform_zero(dec.sub(i, j), "links", max_n=None) for i, j in sorted(dec.linked_pairs)]
        checked += 1
        complete = whole.complete and all(p.complete for p in parts)
        if not complete or whole.found != all(p.found for p in parts):
            bad.append(k)
    return not bad, f"{checked} layered graphs, {len(bad)} discrepancies" + (f" {bad}" if bad else "")


def item_twelve():
    t = time.perf_counter()
    P = twelve_part_pattern()
    notes = []
    cov = P.pair_coverage()
    cov_ok = len(cov) == 78 and set(cov.values()) == {1}
    notes.append(f"coverage {'exact' if cov_ok else 'WRONG'} on {len(cov)} pairs")
    F1, F2, F = generate_named("F1"), generate_named("F2"), generate_named("F")
    h1 = all_pattern_homomorphisms(F1, P)
    h2 = all_pattern_homomorphisms(F2, P)
    e1, e2 = F1.index("e"), F2.index("e")
    first5 = set(range(5))
    hom_ok = (bool(h1) and all(h[e1] in first5 for h in h1) and bool(h2)
              and all(h[e2] not in first5 for h in h2) and not all_pattern_homomorphisms(F, P))
    notes.append(f"homomorphisms {'as claimed' if hom_ok else 'WRONG'} ({len(h1)} for F1, {len(h2)} for F2)")
    measured = {m: codegree_stats(twelve_part_construction(m)[1])[0] for m in range(3, 9)}
    cod_ok = all(v == m - 2 for m, v in measured.items())
    notes.append("min codegree " + ("= m-2" if cod_ok else "!= m-2: " + ", ".join(
        f"m={m}:{v}" for m, v in measured.items())))
    dt = time.perf_counter() - t
    return cov_ok and hom_ok and cod_ok and dt < 60, "; ".join(notes) + f" ({dt:.1f}s)"


def item_rb():
    t = time.perf_counter()
    K4 = generate_named("K4-3")
    free = dense_ok = 0
    dens = []
    for seed in range(20):
        H = rb_construction(60, seed)
        r = find_embedding(EmbeddingProblem(K4, H))
        free += (not r.found) and r.complete
        rep = density_estimates(H, 200, 0.25, seed)
        dens.append(rep.edge_density)
        dense_ok += rep.uniform_estimate.d_hat >= RB_TARGET - 0.05
    mean = sum(dens) / len(dens)
    dt = time.perf_counter() - t
    ok = free == 20 and abs(mean - RB_TARGET) <= 0.02 and dense_ok >= 18 and dt < 300
    return ok, f"K4-free {free}/20, mean density {mean:.4f}, d_hat ok on {dense_ok}/20 ({dt:.1f}s)"


def item_family():
    fam4 = enumerate_min_codegree_family(4)
    k4 = generate_named("K4-3")
    fam_ok = len(fam4) == 1 and is_isomorphic(fam4[0], k4)
    tens_ok = is_isomorphic(build_tensor_counterexample(4), k4)
    try:
        G = build_tensor_counterexample(5)
        guard = f"no TooLarge: product built with {G.n} vertices and {G.num_edges} edges " \
                f"({len(enumerate_min_codegree_family(5))} family members)"
        guard_ok = False
    except TooLarge as ex:
        guard = f"TooLarge size {ex.size}"
        guard_ok = ex.size is not None
    notes = [f"family(4) {'= {K4}' if fam_ok else 'WRONG'}", f"tensor(4) {'~ K4' if tens_ok else 'WRONG'}", guard]
    return fam_ok and tens_ok and guard_ok, "; ".join(notes)


def item_halfbip():
    t = time.perf_counter()
    hb = exceptions = 0
    for n in range(1, 7):
        pairs = list(itertools.combinations(range(n), 2))
        sigma = Labeling.identity(n)
        for mask in range(1 << len(pairs)):
            G = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            if has_monotone_p3(G, sigma) is not None:
                continue
            hb += 1
            try:
                embed_into_complete_half_bipartite(G, sigma, 6)
            except Exception:
                exceptions += 1
                continue
            if not G.is_bipartite():
                exceptions += 1
    dt = time.perf_counter() - t
    return exceptions == 0 and dt < 60, f"{hb} half-bipartite labeled graphs, {exceptions} exceptions ({dt:.1f}s)"


def item_blowup():
    t = time.perf_counter()
    base = generate_named("C-minus", l=5)
    least = {}
    ok = True
    for l in range(5, 9):
        P = generate_named("C-minus", l=l)
        least[l] = None
        for s in (1, 2):
            r = find_embedding(EmbeddingProblem(P, blowup(base, s)))
            if not r.complete:
                ok = False
            if r.found:
                least[l] = s
                break
        ok &= least[l] is not None
    dt = time.perf_counter() - t
    return ok and dt < 60, ", ".join(f"l={l}: t={t_}" for l, t_ in least.items()) + f" ({dt:.1f}s)"


ITEMS: list[tuple[int, str, Callable]] = [
    (1, "positive", item_positive),
    (2, "negative", item_negative),
    (3, "equivalence", item_equivalence),
    (4, "layered", item_layered),
    (5, "linearization", item_linear),
    (6, "reduction", item_func),
    (7, "linked", item_linked),
    (8, "twelve-part", item_twelve),
    (9, "red-blue", item_rb),
    (10, "family", item_family),
    (11, "half-bipartite", item_halfbip),
    (12, "blowup", item_blowup),
]

_cache: dict[int, ItemResult] = {}


def run_item(number: int) -> ItemResult:
    if number not in _cache:
        _, name, fn = next(x for x in ITEMS if x[0] == number)
        t = time.perf_counter()
        passed, detail = fn()
        _cache[number] = ItemResult(number, name, bool(passed), detail, time.perf_counter() - t)
    return _cache[number]


def select(filter_: str | None) -> list[int]:
    if not filter_:
        return [n for n, _, _ in ITEMS]
    return [n for n, name, _ in ITEMS if filter_ == str(n) or filter_ in name]


def io_roundtrip() -> tuple[bool, str]:
    """Corpus round trip plus certificate re-verification (first half of item 13)."""
    bad = []
    certs = 0
    for p in corpus_files():
        text = p.read_text(encoding="utf-8")
        F = parse_graph(text)
        if serialize_graph(F) != text:
            bad.append(p.name)
            continue
        r = certify_uniform_zero(F, "b2", max_n=None)
        if r.found:
            certs += 1
            if not certificate_roundtrip(F, r.witness):
                bad.append(p.name + ":uniform")
        r = find_layered_function(F, max_n=None)
        if r.found:
            certs += 1
            if not certificate_roundtrip(F, r.witness):
                bad.append(p.name + ":layered")
    return not bad, f"{len(corpus_files())} files round-trip, {certs} certificates re-verified" + (
        f", failed {bad}" if bad else "")
