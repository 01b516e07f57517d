"""Command-line interface.

Every subcommand reading a graph takes a path in the gain-graph text format
(`-` for standard input).  Results go to standard output as JSON — floats
rendered with 17 significant digits — except `sweep-unicyclic` (tab-separated
columns) and `gen` (graph text).  A one-line human summary goes to standard
error.  Exit status: 0 on success, 1 when a verification or numerical routine
fails, 2 on bad input or usage.
"""
from __future__ import annotations

import argparse
import sys
from math import isfinite

import numpy as np

from . import fileio, gains as gn, polynomials, theorems
from .coulson import QuadratureError, coulson_energy
from .gains import GainGraph
from .graphs import named_family
from .spectral import EigensolverError, adjacency, energy, spectrum


def _json_escape(s: str) -> str:
    out = []
    for ch in s:
        if ch == '"':
            out.append('\\"')
        elif ch == "\\":
            out.append("\\\\")
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\t":
            out.append("\\t")
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    return '"' + "".join(out) + '"'


def render_json(obj, indent: int = 0) -> str:
    """Small JSON renderer with fixed 17-significant-digit floats."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not isfinite(x):
            raise ValueError(f"non-finite value {x!r} in JSON output")
        return f"{x:.17g}"
    if isinstance(obj, complex):
        return render_json({"re": obj.real, "im": obj.imag}, indent)
    if isinstance(obj, str):
        return _json_escape(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{_json_escape(str(k))}: {render_json(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        seq = list(obj)
        if not seq:
            return "[]"
        rendered = [render_json(v, indent + 1) for v in seq]
        if all(len(r) <= 24 and "\n" not in r for r in rendered) and len(rendered) <= 8:
            return "[" + ", ".join(rendered) + "]"
        return "[\n" + ",\n".join(inner + r for r in rendered) + f"\n{pad}]"
    raise TypeError(f"cannot render {type(obj).__name__} as JSON")


def _emit(payload, summary: str) -> int:
    print(render_json(payload))
    print(summary, file=sys.stderr)
    return 0


def _load(path: str) -> GainGraph:
    return fileio.read_path(path)


def _instance(phi: GainGraph) -> str:
    return fileio.dumps(phi)


def cmd_spectrum(args) -> int:
    phi = _load(args.path)
    lam = spectrum(phi).eigenvalues
    payload = {
        "instance": _instance(phi),
        "spectrum": [float(x) for x in lam],
    }
    if lam.size:
        summary = f"{lam.size} eigenvalues in [{float(lam[0]):.6g}, {float(lam[-1]):.6g}]"
    else:
        summary = "empty graph: no eigenvalues"
    return _emit(payload, summary)


def cmd_energy(args) -> int:
    phi = _load(args.path)
    rep = energy(phi)
    payload = {
        "instance": _instance(phi),
        "energy": rep.energy,
        "spectral_radius": rep.spectral_radius,
        "vertex_energies": [float(x) for x in rep.vertex_energies],
    }
    return _emit(payload, f"energy {rep.energy:.10g} over {phi.graph.n} vertices")


def cmd_charpoly(args) -> int:
    phi = _load(args.path)
    if args.method == "eigen":
        coeffs = polynomials.char_poly_eigen(phi)
    elif args.method == "subgraph":
        coeffs = polynomials.char_poly_subgraph(phi)
    else:
        coeffs = polynomials.char_poly_faddeev(adjacency(phi))
    payload = {
        "instance": _instance(phi),
        "method": args.method,
        "char_poly": [float(c) for c in coeffs],
    }
    return _emit(payload, f"characteristic polynomial of degree {phi.graph.n} via {args.method}")


def cmd_matchpoly(args) -> int:
    phi = _load(args.path)
    counts = polynomials.matching_counts(phi.graph)
    coeffs = polynomials.matching_poly(phi.graph)
    payload = {
        "instance": _instance(phi),
        "matching_counts": [int(c) for c in counts],
        "matching_poly": [float(c) for c in coeffs],
        "matching_number": len(counts) - 1,
    }
    return _emit(payload, f"matching number {len(counts) - 1}, counts {list(counts)}")


def cmd_balance(args) -> int:
    phi = _load(args.path)
    balanced, cert = gn.is_balanced(phi)
    antibalanced = gn.is_antibalanced(phi)
    payload = {
        "instance": _instance(phi),
        "balanced": balanced,
        "antibalanced": antibalanced,
        "switching_certificate": list(cert.zeta) if cert is not None else None,
    }
    kind = "balanced" if balanced else ("antibalanced" if antibalanced else "neither")
    return _emit(payload, f"gain graph is {kind}")


def cmd_coulson(args) -> int:
    phi = _load(args.path)
    coeffs = polynomials.char_poly_eigen(phi)
    result = coulson_energy(coeffs, tol=args.tol)
    payload = {
        "instance": _instance(phi),
        "energy": result.value,
        "abs_error_estimate": result.abs_error_estimate,
        "evaluations": result.evaluations,
        "tol": args.tol,
    }
    return _emit(payload, f"integral energy {result.value:.10g} ({result.evaluations} evaluations)")


def cmd_decompose(args) -> int:
    phi = _load(args.path)
    result = theorems.matching_decomposition(phi.graph)
    pieces = []
    for p in result.pieces:
        pieces.append({
            "matching_edge": list(p.matching_edge),
            "edges": [list(e) for e in p.edges],
            "shape": p.shape,
            "pendants": [p.pendants_first, p.pendants_second],
            "apexes": list(p.apexes),
            "energy": energy(gn.edge_subgraph(phi, p.edges)).energy,
        })
    payload = {
        "instance": _instance(phi),
        "matching_number": len(result.pieces),
        "total_energy": energy(phi).energy,
        "piece_energy_sum": sum(p["energy"] for p in pieces),
        "decomposition": pieces,
    }
    return _emit(payload, f"{len(pieces)} pieces covering {phi.graph.m} edges")


def _check_projection(ident: str, c) -> dict:
    return {
        "instance": ident,
        "check": c.name,
        "lhs": c.lhs if isfinite(c.lhs) else None,
        "rhs": c.rhs if isfinite(c.rhs) else None,
        "slack": c.slack if isfinite(c.slack) else None,
        "holds": c.holds,
        "equality": c.equality,
        "skipped": c.skipped,
        "verdict": c.classifier_verdict,
    }


def cmd_verify(args) -> int:
    results = theorems.verify_suite(args.suite, seed=args.seed, count=args.count)
    checks = []
    failing = skipped = 0
    for ident, checklist in results:
        for c in checklist:
            checks.append(_check_projection(ident, c))
            skipped += c.skipped
            failing += not c.holds
    payload = {
        "suite": args.suite,
        "seed": args.seed,
        "count": args.count,
        "instances": len(results),
        "total": len(checks),
        "skipped": skipped,
        "failures": failing,
        "all_hold": failing == 0,
        "checks": checks,
    }
    print(render_json(payload))
    status = "all hold" if failing == 0 else f"{failing} FAILED"
    print(f"{len(checks)} checks on {len(results)} instances: {status}", file=sys.stderr)
    return 0 if failing == 0 else 1


def cmd_sweep_unicyclic(args) -> int:
    phi = _load(args.path)
    rows = theorems.sweep_unicyclic(phi.graph, samples=args.samples)
    print("theta\tenergy")
    for theta, e in rows:
        print(f"{theta:.17g}\t{e:.17g}")
    print(f"{len(rows)} samples over one cycle-gain turn", file=sys.stderr)
    return 0


def cmd_gen(args) -> int:
    params = [int(x) for x in args.params.split(",")] if args.params else []
    g = named_family(args.family, params)
    sys.stdout.write(fileio.dumps(GainGraph.all_ones(g)))
    print(f"{args.family} graph: {g.n} vertices, {g.m} edges", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gainspectra",
        description="Spectra, energies, and verified bounds for complex unit gain graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, with_path=True):
        p = sub.add_parser(name, help=help_text)
        if with_path:
            p.add_argument("path", help="gain-graph file, or - for stdin")
        p.set_defaults(func=fn)
        return p

    add("spectrum", cmd_spectrum, "eigenvalues of the gain adjacency matrix")
    add("energy", cmd_energy, "total and per-vertex energy")
    p = add("charpoly", cmd_charpoly, "characteristic polynomial coefficients")
    p.add_argument("--method", choices=["eigen", "subgraph", "faddeev"], default="eigen")
    add("matchpoly", cmd_matchpoly, "matching counts and matching polynomial")
    add("balance", cmd_balance, "balance test with switching certificate")
    p = add("coulson", cmd_coulson, "energy via the integral formula")
    p.add_argument("--tol", type=float, default=1e-6)
    add("decompose", cmd_decompose, "matching-based edge decomposition")
    p = add("verify", cmd_verify, "run a verification suite on seeded corpora", with_path=False)
    p.add_argument("--suite", choices=["sec3", "sec4", "sec5", "all"], default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p = add("sweep-unicyclic", cmd_sweep_unicyclic, "energy versus cycle gain angle")
    p.add_argument("--samples", type=int, default=64)
    p = add("gen", cmd_gen, "emit a named family as graph text", with_path=False)
    p.add_argument("--family", required=True,
                   choices=["path", "cycle", "complete", "complete-bipartite",
                            "double-star", "book", "t1"])
    p.add_argument("--params", default="", help="comma-separated integer parameters")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (EigensolverError, QuadratureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
