"""Command-line front end.

Exit status: 0 success/pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .embeddings import (
    EmbeddingWitness,
    Surface,
    WitnessError,
    planarity_test,
    projective_embedding_f2_cycle,
    trace_faces,
    verify_witness,
)
from .factorizations import (
    Factorization,
    FactorizationError,
    Kind,
    bipartite_cycles,
    bipartite_paths,
    trivial_factorization,
    verify_factorization,
    walecki_cycles,
    walecki_paths,
)
from .graph import Graph, MalformedInputError, named_family, parse_family, to_dot
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .oracle import OracleLimitError, brute_force_theta4
from .thickness import (
    CertificationError,
    DecompositionCertificate,
    decompose_token,
    lower_bound_girth4,
    theorem_bound_arithmetic,
    theta4_line_complete,
    thetaS_line_complete,
    verify_certificate,
)
from .tokens import PreconditionError, token_graph


class UsageError(Exception):
    pass


SURFACES = {"plane": Surface.PLANE, "projective": Surface.PROJECTIVE}


def _source_graph(args, allow_tokens: bool = True) -> Graph:
    if args.family:
        name, params = parse_family(args.family)
        g = named_family(name, *params)
    elif args.graph6:
        g = parse_graph6(args.graph6)
    elif args.file:
        g = parse_graph6(Path(args.file).read_text().strip())
    else:
        raise UsageError("a graph source is required (--family, --graph6 or --file)")
    if allow_tokens and getattr(args, "tokens", None):
        g = token_graph(g, args.tokens).graph
    return g


def _emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _format_graph(g: Graph, fmt: str, extra: dict | None = None) -> str:
    if fmt == "dot":
        return to_dot(g)
    if fmt == "json":
        data = {"graph6": write_graph6(g), "order": g.order, "size": g.size,
                "labels": list(g.labels) if g.labels is not None else None}
        data.update(extra or {})
        return _dump(data)
    return write_graph6(g) + "\n"


def cmd_token(args) -> int:
    if not args.tokens:
        raise UsageError("token needs -k")
    base = _source_graph(args, allow_tokens=False)
    t = token_graph(base, args.tokens)
    _emit(args, _format_graph(t.graph, args.format, {"k": t.k, "base_graph6": write_graph6(base)}))
    return 0


def _construct_factorization(g: Graph, kind: Kind | None) -> Factorization:
    """Pick the classical construction for a recognized host, or fail."""
    n = g.order
    candidates = []
    if g.size == n * (n - 1) // 2:
        if n % 2 == 0:
            candidates.append(lambda: walecki_paths(n))
        else:
            candidates.append(lambda: walecki_cycles(n))
    if n % 2 == 0 and n >= 4:
        candidates.append(lambda: bipartite_cycles(n // 2))
    if n % 2 == 1 and n >= 3:
        candidates.append(lambda: bipartite_paths((n + 1) // 2))
    candidates.append(lambda: trivial_factorization(g))
    for make in candidates:
        try:
            f = make()
        except (ValueError, FactorizationError):
            continue
        if f.host == g and (kind is None or f.kind is kind):
            return f
    want = f"Hamiltonian {kind.value}" if kind else "Hamiltonian"
    raise UsageError(f"no {want} factorization construction known for this graph")


def cmd_factorize(args) -> int:
    g = _source_graph(args, allow_tokens=False)
    kind = Kind(args.kind) if args.kind else None
    f = _construct_factorization(g, kind)
    _emit(args, _dump(f.to_json()))
    return 0


def cmd_decompose(args) -> int:
    surface = SURFACES[args.surface]
    kind = Kind.PATHS if surface is Surface.PLANE else Kind.CYCLES
    if args.factorization:
        f = Factorization.from_json(json.loads(Path(args.factorization).read_text()))
        base = _source_graph(args, allow_tokens=False) if (args.family or args.graph6 or args.file) else f.host
        if f.host != base:
            raise UsageError("factorization host differs from the given graph")
        cert = decompose_token(base, f, surface)
    elif args.family and parse_family(args.family)[0] in ("line-complete", "complete"):
        name, params = parse_family(args.family)
        if len(params) != 1:
            raise UsageError(f"{name} takes one parameter")
        n = params[0]
        cert = theta4_line_complete(n) if surface is Surface.PLANE else thetaS_line_complete(n)
    else:
        base = _source_graph(args, allow_tokens=False)
        cert = decompose_token(base, _construct_factorization(base, kind), surface)
    text = cert.dumps()
    if args.cert:
        Path(args.cert).write_text(text)
        print(f"claimed_value={cert.claimed_value} lower_bound={cert.lower_bound} parts={len(cert.parts)}")
    else:
        _emit(args, text)
    return 0


def cmd_bound(args) -> int:
    surface = SURFACES[args.surface]
    if args.arith:
        n, k = args.arith
        print(theorem_bound_arithmetic(n, k, surface))
        return 0
    g = _source_graph(args)
    print(lower_bound_girth4(g, surface))
    return 0


def cmd_oracle(args) -> int:
    g = _source_graph(args)
    res = brute_force_theta4(g, SURFACES[args.surface], args.max_parts, edge_limit=args.edge_limit)
    print(res if res is not None else f"exceeds {args.max_parts}")
    return 0


def cmd_embed(args) -> int:
    surface = SURFACES[args.surface]
    if surface is Surface.PROJECTIVE and args.family and args.tokens == 2:
        name, params = parse_family(args.family)
        if name == "cycle":
            w = trace_faces(projective_embedding_f2_cycle(params[0]))
            _emit(args, _dump(w.to_json()))
            return 0
    g = _source_graph(args)
    res = planarity_test(g)
    if res.planar:
        _emit(args, _dump(res.witness().to_json()))
        return 0
    if surface is Surface.PROJECTIVE:
        raise UsageError("no projective construction for this graph (supported: --family cycle:n -k 2)")
    print("non-planar", file=sys.stderr)
    return 1


def cmd_verify(args) -> int:
    chosen = [x for x in (args.cert, args.witness, args.factorization) if x]
    if len(chosen) != 1:
        raise UsageError("verify needs exactly one of --cert, --witness, --factorization")
    try:
        text = Path(chosen[0]).read_text()
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    try:
        data = json.loads(text)
        if args.cert:
            report = verify_certificate(DecompositionCertificate.from_json(data))
        elif args.witness:
            report = verify_witness(EmbeddingWitness.from_json(data), SURFACES[args.surface], args.min_girth)
        else:
            report = verify_factorization(Factorization.from_json(data))
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        # unreadable structure is a failed verification, not a usage error
        print(f"FAIL: malformed input: {exc}")
        return 1
    print(report)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tokenthick", description="Girth-4 thickness of 2-token graphs: build, decompose, bound, verify.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def source(sp, tokens=True):
        grp = sp.add_mutually_exclusive_group()
        grp.add_argument("--family", help="named family, e.g. path:6, complete-bipartite:3,4, line-complete:5")
        grp.add_argument("--graph6", help="graph6 string")
        grp.add_argument("--file", help="file holding a graph6 string")
        if tokens:
            sp.add_argument("-k", "--tokens", type=int, help="use the k-token graph of the source")

    def surface(sp):
        sp.add_argument("--surface", choices=sorted(SURFACES), default="plane")

    def out(sp, fmt=False):
        sp.add_argument("--out", help="output path (default stdout)")
        if fmt:
            sp.add_argument("--format", choices=["g6", "dot", "json"], default="g6")

    sp = sub.add_parser("token", help="build F_k(G)")
    source(sp)
    out(sp, fmt=True)
    sp.set_defaults(func=cmd_token)

    sp = sub.add_parser("factorize", help="Hamiltonian path/cycle factorization as JSON")
    source(sp, tokens=False)
    sp.add_argument("--kind", choices=[k.value for k in Kind])
    out(sp)
    sp.set_defaults(func=cmd_factorize)

    sp = sub.add_parser("decompose", help="certified decomposition of F_2(G)")
    source(sp, tokens=False)
    surface(sp)
    sp.add_argument("--factorization", help="factorization JSON to use instead of a construction")
    sp.add_argument("--cert", help="write the certificate here")
    out(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("bound", help="girth-4 lower bound")
    source(sp)
    surface(sp)
    sp.add_argument("--arith", nargs=2, type=int, metavar=("N", "K"),
                    help="evaluate the ceiling bound for a base graph of order N split into K Hamiltonian parts")
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("oracle", help="exact girth-4 thickness by exhaustive search")
    source(sp)
    surface(sp)
    sp.add_argument("--max-parts", type=int, default=3)
    sp.add_argument("--edge-limit", type=int, default=20)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("embed", help="embedding witness JSON")
    source(sp)
    surface(sp)
    out(sp)
    sp.set_defaults(func=cmd_embed)

    sp = sub.add_parser("verify", help="re-check a certificate, witness or factorization")
    sp.add_argument("--cert")
    sp.add_argument("--witness")
    sp.add_argument("--factorization")
    surface(sp)
    sp.add_argument("--min-girth", type=int, default=4)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, Graph6Error, MalformedInputError, PreconditionError,
            WitnessError, OracleLimitError, OSError) as exc:
        print(f"tokenthick {args.command}: {exc}", file=sys.stderr)
        return 2
    except CertificationError as exc:
        print(f"tokenthick {args.command}: certification failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
