import os

import pytest
from hypothesis import given, strategies as st

from conftest import three_graphs
from hgt.core import ThreeGraph, generate_named
from hgt.corpus import build_corpus, corpus_files, load_corpus
from hgt.errors import ParseError
from hgt.io import (
    canonical,
    parse_certificate,
    parse_graph,
    serialize_certificate,
    serialize_graph,
    serialize_labeled_graph,
    verify_certificate,
    write_atomic,
)
from hgt.layered import LayerFunction, find_layered_function
from hgt.uniform import certify_uniform_zero


def test_corpus_files_roundtrip_bytes():
    files = corpus_files()
    assert len(files) == 55
    for path in files:
        text = path.read_text(encoding="utf-8")
        assert serialize_graph(parse_graph(text)) == text, path.name


def test_corpus_matches_builder():
    built = build_corpus()
    loaded = load_corpus()
    assert set(built) == set(loaded)
    for k in built:
        assert built[k] == loaded[k] and built[k].vertex_names() == loaded[k].vertex_names()


def test_generated_c5_roundtrip():
    C = generate_named("C-minus", l=5)
    G = parse_graph(serialize_graph(C))
    assert G == C and G.names == C.names


def test_canonical_form_of_loose_input():
    text = "# comment\n%3graph v1\n\nvertices a b  c d\nedge c b a   \n# x\nedge d a b\n"
    assert canonical(text) == "%3graph v1\nvertices a b c d\nedge a b c\nedge a b d\n"
    assert canonical("%3graph v1\nedge 2 1 0\n") == "%3graph v1\nvertices 0 1 2\nedge 0 1 2\n"
    assert serialize_graph(ThreeGraph(0)) == "%3graph v1\nvertices\n"


@pytest.mark.parametrize("text,line,col", [
    ("%3graph v1\nedge 0 1 2\nedge 2 1 0\n", 3, 1),
    ("%3graph v2\n", 1, 1),
    ("", 1, 1),
    ("%3graph v1\nvertices a b c\nedge a b z\n", 3, 10),
    ("%3graph v1\nedge 0 1\n", 2, 9),
    ("%3graph v1\nedge 0 1 2 3\n", 2, 12),
    ("%3graph v1\nedge 0 0 1\n", 2, 6),
    ("%3graph v1\nvertex a\n", 2, 1),
    ("%3graph v1\nvertices a a\n", 2, 12),
    ("%3graph v1\nedge 0 1 2\nvertices a b c\n", 3, 1),
    ("%3graph v1\nedge x y z\n", 2, 6),
])
def test_parse_errors(text, line, col):
    with pytest.raises(ParseError) as ex:
        parse_graph(text)
    assert (ex.value.line, ex.value.column) == (line, col)
    assert f"{line}:{col}" in str(ex.value) or str(line) in str(ex.value)


@given(three_graphs(max_n=7))
def test_roundtrip_property(F):
    text = serialize_graph(F)
    G = parse_graph(text)
    assert G == F and serialize_graph(G) == text


@given(st.lists(st.text(alphabet="abcxyz019_", min_size=1, max_size=4), min_size=3, max_size=6, unique=True))
def test_named_roundtrip(names):
    F = ThreeGraph(len(names), [(0, 1, 2)], names)
    assert parse_graph(serialize_graph(F)).names == tuple(names)


def test_labeled_graph_format():
    G, sigma = generate_named("B", k=2)
    assert serialize_labeled_graph(G, sigma) == (
        "%2graph v1\nvertices u1 v1 u2 v2\norder u1 v1 u2 v2\npair u1 v1\npair u1 v2\npair u2 v2\n")


def test_uniform_certificate_roundtrip():
    C = generate_named("C-minus", l=5)
    cert = certify_uniform_zero(C).witness
    text = serialize_certificate(C, cert)
    back = parse_certificate(text, C)
    assert back.sigma == cert.sigma and dict(back.coloring) == {tuple(sorted(p)): c for p, c in cert.coloring.items()}
    assert verify_certificate(C, back)
    assert serialize_certificate(C, back) == text


def test_layered_certificate_roundtrip():
    F1 = generate_named("F1")
    f = find_layered_function(F1).witness
    text = serialize_certificate(F1, f)
    assert text.startswith("%certificate layered\nlayer a ")
    back = parse_certificate(text, F1)
    assert back == f and verify_certificate(F1, back)


def test_bad_certificates():
    E = generate_named("edge")
    with pytest.raises(ParseError):
        parse_certificate("%certificate layered\nlayer 1 1\n", E)
    with pytest.raises(ParseError):
        parse_certificate("%certificate layered\nlayer 1 0\nlayer 2 1\nlayer 3 2\n", E)
    with pytest.raises(ParseError):
        parse_certificate("%certificate uniform-zero\ncolor 1 2 red\n", E)
    with pytest.raises(ParseError):
        parse_certificate("%certificate uniform-zero\norder 1 2 3\ncolor 1 2 pink\n", E)
    wrong = parse_certificate("%certificate layered\nlayer 1 1\nlayer 2 2\nlayer 3 2\n", E)
    assert not verify_certificate(E, wrong)
    flipped = parse_certificate(
        "%certificate uniform-zero\norder 1 2 3\ncolor 1 2 red\ncolor 1 3 blue\ncolor 2 3 red\n", E)
    assert not verify_certificate(E, flipped)
    partial = parse_certificate("%certificate uniform-zero\norder 1 2 3\ncolor 1 2 red\n", E)
    assert not verify_certificate(E, partial)
    assert verify_certificate(E, LayerFunction((1, 1, 2)))


def test_write_atomic(tmp_path):
    target = tmp_path / "out.3g"
    target.write_text("old\n")
    write_atomic(target, "new\n")
    assert target.read_text() == "new\n"
    assert os.listdir(tmp_path) == ["out.3g"]


def test_write_atomic_leaves_target_on_failure(tmp_path, monkeypatch):
    target = tmp_path / "out.3g"
    target.write_text("old\n")

    def boom(src, dst):
        raise OSError("disk full")

    monkeypatch.setattr(os, "replace", boom)
    with pytest.raises(OSError):
        write_atomic(target, "new\n")
    assert target.read_text() == "old\n"
    assert os.listdir(tmp_path) == ["out.3g"]
