"""Plain-text reader and writer for gain graphs.

Format, one directive per line, `#` starting a comment:

    graph 3
    edge 0 1 i
    edge 1 2 polar:1.5707963267948966
    edge 0 2 rect:-0.6,0.8

`graph <n>` fixes the vertex count and must come first.  Each `edge <u> <v>
<gain>` attaches the gain to the orientation u -> v.  Gain tokens are `1`,
`-1`, `i`, `-i`, `polar:<theta>` (radians), or `rect:<re>,<im>`; the modulus
must be within 1e-9 of one and is renormalized on load.  The writer emits the
symbolic tokens where they apply exactly and `polar:` otherwise, so a written
file loads back to the same graph and gains.
"""
from __future__ import annotations

import sys
from cmath import exp as cexp
from math import atan2

from .gains import UNIT_MODULUS_TOL, GainGraph
from .graphs import SimpleGraph

_SYMBOLIC = {"1": 1 + 0j, "-1": -1 + 0j, "i": 1j, "-i": -1j}
_SYMBOLIC_TOL = 1e-12


class FileFormatError(ValueError):
    """Malformed gain-graph text; the message carries the offending line number."""


def parse_gain_token(token: str, line_no: int) -> complex:
    if token in _SYMBOLIC:
        return _SYMBOLIC[token]
    if token.startswith("polar:"):
        try:
            theta = float(token[6:])
        except ValueError:
            raise FileFormatError(f"line {line_no}: bad polar angle {token[6:]!r}") from None
        return cexp(1j * theta)
    if token.startswith("rect:"):
        parts = token[5:].split(",")
        if len(parts) != 2:
            raise FileFormatError(f"line {line_no}: rect gain needs two components, got {token!r}")
        try:
            z = complex(float(parts[0]), float(parts[1]))
        except ValueError:
            raise FileFormatError(f"line {line_no}: bad rect component in {token!r}") from None
        if abs(abs(z) - 1.0) > UNIT_MODULUS_TOL:
            raise FileFormatError(f"line {line_no}: gain {token!r} has modulus {abs(z)!r}, not 1")
        return z
    raise FileFormatError(f"line {line_no}: unrecognized gain token {token!r}")


def format_gain(z: complex) -> str:
    for token, value in _SYMBOLIC.items():
        if abs(z - value) <= _SYMBOLIC_TOL:
            return token
    return f"polar:{atan2(z.imag, z.real):.17g}"


def loads(text: str) -> GainGraph:
    """Parse gain-graph text into a GainGraph."""
    n = None
    gains: list[tuple[int, int, complex]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "graph":
            if n is not None:
                raise FileFormatError(f"line {line_no}: duplicate graph directive")
            if len(fields) != 2:
                raise FileFormatError(f"line {line_no}: expected 'graph <n>'")
            try:
                n = int(fields[1])
            except ValueError:
                raise FileFormatError(f"line {line_no}: bad vertex count {fields[1]!r}") from None
            if n < 0:
                raise FileFormatError(f"line {line_no}: vertex count must be nonnegative")
        elif fields[0] == "edge":
            if n is None:
                raise FileFormatError(f"line {line_no}: edge before graph directive")
            if len(fields) != 4:
                raise FileFormatError(f"line {line_no}: expected 'edge <u> <v> <gain>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise FileFormatError(f"line {line_no}: bad vertex in {line!r}") from None
            if not (0 <= u < n and 0 <= v < n):
                raise FileFormatError(f"line {line_no}: vertex out of range 0..{n - 1}")
            if u == v:
                raise FileFormatError(f"line {line_no}: loop edge {u} {v} not allowed")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise FileFormatError(f"line {line_no}: duplicate edge {u} {v}")
            seen.add(key)
            gains.append((u, v, parse_gain_token(fields[3], line_no)))
        else:
            raise FileFormatError(f"line {line_no}: unknown directive {fields[0]!r}")
    if n is None:
        raise FileFormatError("missing graph directive")
    g = SimpleGraph.from_edges(n, [(u, v) for u, v, _ in gains])
    return GainGraph.from_gains(g, {(u, v): z for u, v, z in gains})


def dumps(phi: GainGraph) -> str:
    lines = [f"graph {phi.graph.n}"]
    for u, v in phi.graph.edge_list:
        lines.append(f"edge {u} {v} {format_gain(phi.gain(u, v))}")
    return "\n".join(lines) + "\n"


def read_path(path: str) -> GainGraph:
    """Load from a file path, or standard input when the path is '-'."""
    if path == "-":
        return loads(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write_path(phi: GainGraph, path: str):
    if path == "-":
        sys.stdout.write(dumps(phi))
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(phi))
