"""Text formats for 3-graphs, labeled 2-graphs and certificates.

Canonical output: header, a ``vertices`` line, then one record per line with
single spaces and a trailing newline. Comments (``#``) and blank lines are
accepted on input and dropped on output.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .core import Graph, ThreeGraph
from .errors import HGTError, ParseError
from .layered import LayerFunction, is_layered_function
from .orderings import Labeling
from .uniform import COLORS, UniformZeroCertificate, verify_uniform_certificate

GRAPH_HEADER = "%3graph v1"
GRAPH2_HEADER = "%2graph v1"
UNIFORM_HEADER = "%certificate uniform-zero"
LAYERED_HEADER = "%certificate layered"


@dataclass
class _Line:
    no: int
    text: str

    def tokens(self) -> list[tuple[str, int]]:
        """Whitespace-separated tokens with 1-based columns."""
        out = []
        i = 0
        s = self.text
        while i < len(s):
            if s[i].isspace():
                i += 1
                continue
            j = i
            while j < len(s) and not s[j].isspace():
                j += 1
            out.append((s[i:j], i + 1))
            i = j
        return out


def _records(text: str, header: str | tuple[str, ...]) -> tuple[str, list[_Line]]:
    headers = (header,) if isinstance(header, str) else header
    lines = text.split("\n")
    body = []
    head = None
    for no, raw in enumerate(lines, 1):
        s = raw.rstrip("\r")
        if head is None:
            if not s.strip() or s.lstrip().startswith("#"):
                continue
            if s.strip() not in headers:
                raise ParseError(f"expected header {' or '.join(headers)!r}", no, 1)
            head = s.strip()
            continue
        if not s.strip() or s.lstrip().startswith("#"):
            continue
        body.append(_Line(no, s))
    if head is None:
        raise ParseError("missing header", 1, 1)
    return head, body


def _resolve(tok: str, col: int, line: _Line, index: dict[str, int] | None) -> int:
    if index is not None:
        if tok not in index:
            raise ParseError(f"unknown vertex {tok!r}", line.no, col)
        return index[tok]
    if not tok.isdigit():
        raise ParseError(f"vertex {tok!r} is not an index and no vertices line was given", line.no, col)
    return int(tok)


def _vertices(body: list[_Line]) -> tuple[list[str] | None, dict[str, int] | None, list[_Line]]:
    names = None
    index = None
    rest = []
    for ln in body:
        toks = ln.tokens()
        if toks[0][0] == "vertices":
            if names is not None:
                raise ParseError("second vertices line", ln.no, toks[0][1])
            if rest:
                raise ParseError("vertices line must precede all records", ln.no, toks[0][1])
            names = []
            index = {}
            for tok, col in toks[1:]:
                if tok in index:
                    raise ParseError(f"vertex {tok!r} listed twice", ln.no, col)
                index[tok] = len(names)
                names.append(tok)
        else:
            rest.append(ln)
    return names, index, rest


def parse_graph(text: str) -> ThreeGraph:
    _, body = _records(text, GRAPH_HEADER)
    names, index, rest = _vertices(body)
    edges = []
    seen: dict[tuple, int] = {}
    for ln in rest:
        toks = ln.tokens()
        if toks[0][0] != "edge":
            raise ParseError(f"unknown record {toks[0][0]!r}", ln.no, toks[0][1])
        if len(toks) != 4:
            col = toks[4][1] if len(toks) > 4 else len(ln.text) + 1
            raise ParseError("edge needs exactly three vertices", ln.no, col)
        e = tuple(_resolve(t, c, ln, index) for t, c in toks[1:])
        if len(set(e)) != 3:
            raise ParseError("edge repeats a vertex", ln.no, toks[1][1])
        key = tuple(sorted(e))
        if key in seen:
            raise ParseError(f"duplicate edge (first on line {seen[key]})", ln.no, toks[0][1])
        seen[key] = ln.no
        edges.append(key)
    if names is None:
        n = 1 + max((x for e in edges for x in e), default=-1)
    else:
        n = len(names)
    try:
        return ThreeGraph(n, edges, names)
    except HGTError as ex:
        raise ParseError(str(ex), 1, 1) from None


def serialize_graph(F: ThreeGraph) -> str:
    names = F.vertex_names()
    out = [GRAPH_HEADER, " ".join(["vertices"] + list(names)) if names else "vertices"]
    for a, b, c in F.edges:
        out.append(f"edge {names[a]} {names[b]} {names[c]}")
    return "\n".join(out) + "\n"


def canonical(text: str) -> str:
    return serialize_graph(parse_graph(text))


def serialize_labeled_graph(G: Graph, sigma: Labeling | None = None) -> str:
    names = [G.names[v] if G.names else str(v) for v in range(G.n)]
    out = [GRAPH2_HEADER, " ".join(["vertices"] + names) if names else "vertices"]
    if sigma is not None:
        out.append(" ".join(["order"] + [names[v] for v in sigma.order]))
    for a, b in sorted(G.edges):
        out.append(f"pair {names[a]} {names[b]}")
    return "\n".join(out) + "\n"


def serialize_certificate(F: ThreeGraph, cert) -> str:
    names = F.vertex_names()
    if isinstance(cert, UniformZeroCertificate):
        out = [UNIFORM_HEADER, " ".join(["order"] + [names[v] for v in cert.sigma.order])]
        col = {tuple(sorted(p)): c for p, c in cert.coloring.items()}
        for a, b in sorted(col):
            out.append(f"color {names[a]} {names[b]} {col[(a, b)]}")
        return "\n".join(out) + "\n"
    if isinstance(cert, LayerFunction):
        out = [LAYERED_HEADER]
        out += [f"layer {names[v]} {cert(v)}" for v in range(F.n)]
        return "\n".join(out) + "\n"
    raise TypeError(f"cannot serialize {type(cert).__name__}")


def parse_certificate(text: str, F: ThreeGraph):
    """UniformZeroCertificate or LayerFunction, with vertex tokens resolved against F."""
    head, body = _records(text, (UNIFORM_HEADER, LAYERED_HEADER))
    index = {x: i for i, x in enumerate(F.vertex_names())}
    if head == UNIFORM_HEADER:
        order = None
        coloring: dict[tuple[int, int], str] = {}
        for ln in body:
            toks = ln.tokens()
            kind, col0 = toks[0]
            if kind == "order":
                if order is not None:
                    raise ParseError("second order line", ln.no, col0)
                order = [_resolve(t, c, ln, index) for t, c in toks[1:]]
                if len(set(order)) != len(order):
                    raise ParseError("order lists a vertex twice", ln.no, col0)
            elif kind == "color":
                if len(toks) != 4:
                    raise ParseError("color needs two vertices and a color", ln.no, col0)
                a, b = (_resolve(t, c, ln, index) for t, c in toks[1:3])
                color, ccol = toks[3]
                if color not in COLORS:
                    raise ParseError(f"unknown color {color!r}", ln.no, ccol)
                key = (min(a, b), max(a, b))
                if a == b or key in coloring:
                    raise ParseError("repeated or degenerate pair", ln.no, col0)
                coloring[key] = color
            else:
                raise ParseError(f"unknown record {kind!r}", ln.no, col0)
        if order is None:
            raise ParseError("missing order line", 1, 1)
        return UniformZeroCertificate(Labeling(tuple(order)), coloring)
    vals: dict[int, int] = {}
    for ln in body:
        toks = ln.tokens()
        kind, col0 = toks[0]
        if kind != "layer" or len(toks) != 3:
            raise ParseError("expected 'layer <vertex> <value>'", ln.no, col0)
        v = _resolve(toks[1][0], toks[1][1], ln, index)
        tok, c = toks[2]
        if not tok.isdigit() or int(tok) < 1:
            raise ParseError(f"layer value {tok!r} is not a positive integer", ln.no, c)
        if v in vals:
            raise ParseError("vertex given two layers", ln.no, col0)
        vals[v] = int(tok)
    if sorted(vals) != list(range(F.n)):
        raise ParseError("layer lines do not cover every vertex", 1, 1)
    return LayerFunction(tuple(vals[v] for v in range(F.n)))


def verify_certificate(F: ThreeGraph, cert) -> bool:
    if isinstance(cert, UniformZeroCertificate):
        try:
            return verify_uniform_certificate(F, cert)
        except HGTError:
            return False
    if isinstance(cert, LayerFunction):
        return len(cert) == F.n and is_layered_function(F, cert)
    raise TypeError(f"cannot verify {type(cert).__name__}")


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write via a temporary file in the target directory, then rename over the target."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def read_graph(path: str | os.PathLike) -> ThreeGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))
