"""The reference corpus: named graphs plus every isomorphism class on at most 5 vertices."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .core import ThreeGraph, generate_named, isomorphism_classes
from .io import parse_graph, serialize_graph

NAMED_ENTRIES = (
    ("edge", "edge", {}),
    ("k4", "K4-3", {}),
    ("k4minus", "K4-3-minus", {}),
    ("c5minus", "C-minus", {"l": 5}),
    ("c6minus", "C-minus", {"l": 6}),
    ("z3minus", "Z-minus", {"r": 3}),
    ("z4minus", "Z-minus", {"r": 4}),
    ("fano", "fano", {}),
    ("fanominus", "fano-minus", {}),
    ("f32", "F32", {}),
    ("f1", "F1", {}),
    ("f2", "F2", {}),
    ("f", "F", {}),
    ("k222", "Ktt", {"t": 2}),
)


def build_corpus() -> dict[str, ThreeGraph]:
    out = {stem: generate_named(name, **params) for stem, name, params in NAMED_ENTRIES}
    for n in range(3, 6):
        for i, F in enumerate(isomorphism_classes(n)):
            out[f"iso{n}_{i:02d}"] = F
    return out


def corpus_dir() -> Path:
    return Path(str(resources.files("hgt") / "data" / "corpus"))


def corpus_files() -> list[Path]:
    return sorted(corpus_dir().glob("*.3g"))


def load_corpus() -> dict[str, ThreeGraph]:
    return {p.stem: parse_graph(p.read_text(encoding="utf-8")) for p in corpus_files()}


def write_corpus(target: Path | None = None) -> list[Path]:
    target = corpus_dir() if target is None else Path(target)
    target.mkdir(parents=True, exist_ok=True)
    paths = []
    for stem, F in build_corpus().items():
        p = target / f"{stem}.3g"
        p.write_text(serialize_graph(F), encoding="utf-8")
        paths.append(p)
    return paths
