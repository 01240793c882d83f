"""``hgt`` command line.

Exit codes: 0 yes, 1 a complete no, 2 error or an incomplete search.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .constructions import density_estimates, rb_construction, twelve_part_construction
from .core import ThreeGraph, blowup, generate_named, is_linear, tensor_product
from .embed import DEFAULT_BUDGET, MODES, EmbeddingProblem, find_embedding
from .errors import HGTError
from .io import (
    parse_certificate,
    read_graph,
    serialize_certificate,
    serialize_graph,
    serialize_labeled_graph,
    verify_certificate,
    write_atomic,
)
from .layered import find_layered_function, linearize_all, linearize_vertex
from .uniform import certify_uniform_zero

YES, NO, ERROR = 0, 1, 2


class CliError(Exception):
    pass


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        write_atomic(out, text)


def _params(items: list[str]) -> dict[str, str]:
    out = {}
    for it in items or []:
        if "=" not in it:
            raise CliError(f"--param expects k=v, got {it!r}")
        k, v = it.split("=", 1)
        out[k] = v
    return out


def _max_n(args):
    return None if args.force else 12


def cmd_gen(args) -> int:
    obj = generate_named(args.name, **_params(args.param))
    if isinstance(obj, ThreeGraph):
        _emit(serialize_graph(obj), args.output)
    else:
        G, sigma = obj
        _emit(serialize_labeled_graph(G, sigma), args.output)
    return YES


def cmd_check(args) -> int:
    F = read_graph(args.file)
    if args.property == "linear":
        ok = is_linear(F)
        print("linear" if ok else "not linear")
        return YES if ok else NO
    if args.property == "uniform-zero":
        res = certify_uniform_zero(F, args.method, max_n=_max_n(args), budget=args.budget, threads=args.threads)
        what = "uniform-zero"
    else:
        res = find_layered_function(F, budget=args.budget)
        what = "layered"
    if res.found:
        if not verify_certificate(F, res.witness):
            raise CliError("internal error: certificate failed verification")
        if args.cert:
            write_atomic(args.cert, serialize_certificate(F, res.witness))
        print(f"{what} (certificate verified, {res.nodes} nodes)")
        return YES
    if res.complete:
        print(f"not {what} (search complete, {res.nodes} nodes)")
        return NO
    print(f"unknown: search incomplete after {res.nodes} nodes", file=sys.stderr)
    return ERROR


def cmd_verify(args) -> int:
    F = read_graph(args.graph)
    cert = parse_certificate(Path(args.cert).read_text(encoding="utf-8"), F)
    ok = verify_certificate(F, cert)
    print("certificate valid" if ok else "certificate INVALID")
    return YES if ok else NO


def cmd_transform(args) -> int:
    if args.op == "linearize":
        F = read_graph(args.files[0])
        if len(args.files) != 1:
            raise CliError("linearize takes one file")
        if args.vertex is not None:
            G = linearize_vertex(F, F.index(args.vertex), force=args.force)
        else:
            G = linearize_all(F, force=args.force)
    elif args.op == "blowup":
        if len(args.files) != 1 or args.factor is None:
            raise CliError("blowup takes one file and --factor")
        G = blowup(read_graph(args.files[0]), args.factor, force=args.force)
    else:
        G = tensor_product([read_graph(f) for f in args.files], force=args.force)
    _emit(serialize_graph(G), args.output)
    return YES


def cmd_construct(args) -> int:
    if args.kind == "rb":
        if args.n is None or args.seed is None:
            raise CliError("rb needs --n and --seed")
        H = rb_construction(args.n, args.seed)
    else:
        if args.part_size is None:
            raise CliError("twelve needs --part-size")
        _, H = twelve_part_construction(args.part_size, force=args.force)
    _emit(serialize_graph(H), args.output)
    return YES


def cmd_embed(args) -> int:
    P, H = read_graph(args.pattern), read_graph(args.host)
    res = find_embedding(EmbeddingProblem(P, H, args.budget, args.mode), threads=args.threads)
    if args.mode == "count":
        if not res.complete:
            print(f"unknown: count incomplete after {res.nodes} nodes", file=sys.stderr)
            return ERROR
        print(f"embeddings {res.count}")
        print(f"copies {res.copies}")
        return YES if res.count else NO
    if res.found:
        print("found")
        if args.mode == "find":
            pn, hn = P.vertex_names(), H.vertex_names()
            for v in range(P.n):
                print(f"map {pn[v]} {hn[res.mapping[v]]}")
        return YES
    if res.complete:
        print(f"absent (search complete, {res.nodes} nodes)")
        return NO
    print(f"unknown: search incomplete after {res.nodes} nodes", file=sys.stderr)
    return ERROR


def cmd_stats(args) -> int:
    H = read_graph(args.file)
    rep = density_estimates(H, args.uniform_samples, args.min_frac, args.seed)
    sys.stdout.write(f"vertices={H.n}\nedges={H.num_edges}\n" + rep.as_text())
    return YES


def cmd_reproduce(args) -> int:
    from .reproduce import run_item, select

    numbers = select(args.filter)
    if not numbers:
        raise CliError(f"no acceptance item matches {args.filter!r}")
    ok = True
    for n in numbers:
        r = run_item(n)
        print(r.line(), flush=True)
        ok &= r.passed
    return YES if ok else NO


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="cap on worker processes (also HGT_THREADS)")
    common.add_argument("--force", action="store_true", default=argparse.SUPPRESS,
                        help="override size guards")

    p = argparse.ArgumentParser(prog="hgt", parents=[common],
                                description="Certify, construct and transform 3-graphs.")
    p.add_argument("--version", action="version", version=f"hgt {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="write a named graph")
    g.add_argument("name")
    g.add_argument("--param", action="append", metavar="K=V")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", parents=[common], help="decide a property")
    c.add_argument("property", choices=["uniform-zero", "layered", "linear"])
    c.add_argument("file")
    c.add_argument("--method", choices=["b2", "links", "21type"], default="b2")
    c.add_argument("--cert")
    c.add_argument("--budget", type=int)
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("verify", parents=[common], help="check a certificate against a graph")
    v.add_argument("graph")
    v.add_argument("cert")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("transform", parents=[common], help="linearize, blow up or multiply graphs")
    t.add_argument("op", choices=["linearize", "blowup", "tensor"])
    t.add_argument("files", nargs="+")
    t.add_argument("--vertex")
    t.add_argument("--factor", type=int)
    t.add_argument("-o", "--output")
    t.set_defaults(func=cmd_transform)

    k = sub.add_parser("construct", parents=[common], help="build an extremal construction")
    k.add_argument("kind", choices=["rb", "twelve"])
    k.add_argument("--n", type=int)
    k.add_argument("--seed", type=int)
    k.add_argument("--part-size", type=int)
    k.add_argument("-o", "--output")
    k.set_defaults(func=cmd_construct)

    e = sub.add_parser("embed", parents=[common], help="search for a copy of PATTERN in HOST")
    e.add_argument("pattern")
    e.add_argument("host")
    e.add_argument("--mode", choices=MODES, default="decide")
    e.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    e.set_defaults(func=cmd_embed)

    s = sub.add_parser("stats", parents=[common], help="densities and minimum codegree")
    s.add_argument("file")
    s.add_argument("--uniform-samples", type=int)
    s.add_argument("--min-frac", type=float, default=0.25)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_stats)

    r = sub.add_parser("reproduce", parents=[common], help="run the acceptance suite")
    r.add_argument("--filter")
    r.set_defaults(func=cmd_reproduce)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return ERROR if ex.code else YES
    args.force = getattr(args, "force", False)
    args.threads = getattr(args, "threads", None)
    if args.threads is not None:
        if args.threads < 1:
            print("hgt: --threads must be at least 1", file=sys.stderr)
            return ERROR
        os.environ["HGT_THREADS"] = str(args.threads)
    try:
        return args.func(args)
    except (HGTError, CliError, OSError) as ex:
        print(f"hgt: {ex}", file=sys.stderr)
        return ERROR
    except KeyboardInterrupt:
        return ERROR
    except Exception as ex:  # exit codes stay total even on bugs
        print(f"hgt: internal error: {type(ex).__name__}: {ex}", file=sys.stderr)
        return ERROR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
