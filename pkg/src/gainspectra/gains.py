"""Unit-modulus edge gains on simple graphs.

A gain graph carries one unit complex number per oriented edge, with the
reverse orientation getting the conjugate.  Gains are stored once per
canonical edge (u, v), u < v, as the value for the u -> v direction.
"""
from __future__ import annotations

import cmath
import random
from dataclasses import dataclass
from functools import cached_property

from .graphs import Edge, GraphError, SimpleGraph, simple_cycles

UNIT_MODULUS_TOL = 1e-9
BALANCE_TOL = 1e-9


class GainError(ValueError):
    """Invalid gain value or an operation unsupported for this gain assignment."""


def _require_unit(z: complex, what: str) -> complex:
    """Check modulus within tolerance of 1, then renormalize exactly."""
    r = abs(z)
    if abs(r - 1.0) > UNIT_MODULUS_TOL:
        raise GainError(f"{what} has modulus {r!r}, not 1")
    return z / r


@dataclass(frozen=True)
class SwitchingFunction:
    """A unit complex value per vertex."""

    zeta: tuple[complex, ...]

    def __post_init__(self):
        for v, z in enumerate(self.zeta):
            _require_unit(z, f"switching value at vertex {v}")


@dataclass(frozen=True)
class CycleGainRecord:
    cycle: tuple[int, ...]
    gain: complex

    @property
    def real_part(self) -> float:
        return self.gain.real


@dataclass(frozen=True)
class GainGraph:
    """A simple graph with a unit gain on each canonical edge (u -> v direction)."""

    graph: SimpleGraph
    edge_gains: tuple[tuple[Edge, complex], ...]

    def __post_init__(self):
        seen = {e for e, _ in self.edge_gains}
        if seen != self.graph.edges:
            missing = self.graph.edges - seen
            extra = seen - self.graph.edges
            raise GainError(f"gain/edge mismatch: missing {sorted(missing)}, extra {sorted(extra)}")
        if len(self.edge_gains) != len(seen):
            raise GainError("duplicate edge in gain list")
        for e, z in self.edge_gains:
            _require_unit(z, f"gain on edge {e}")

    @classmethod
    def from_gains(cls, graph: SimpleGraph, gains) -> "GainGraph":
        """Build from a mapping {(u, v): gain}; either orientation may be given."""
        canon: dict[Edge, complex] = {}
        for (u, v), z in dict(gains).items():
            e = (u, v) if u < v else (v, u)
            if e in canon:
                raise GainError(f"edge {e} given twice")
            canon[e] = _require_unit(z if u < v else z.conjugate(), f"gain on edge ({u}, {v})")
        return cls(graph, tuple(sorted(canon.items())))

    @classmethod
    def all_ones(cls, graph: SimpleGraph) -> "GainGraph":
        return cls(graph, tuple((e, 1 + 0j) for e in graph.edge_list))

    @cached_property
    def _lookup(self) -> dict[Edge, complex]:
        return dict(self.edge_gains)

    def gain(self, u: int, v: int) -> complex:
        """Gain of the oriented edge u -> v."""
        if u < v:
            return self._lookup[(u, v)]
        return self._lookup[(v, u)].conjugate()

    def negate(self) -> "GainGraph":
        return GainGraph(self.graph, tuple((e, -z) for e, z in self.edge_gains))


def cycle_gain(phi: GainGraph, cycle: tuple[int, ...]) -> CycleGainRecord:
    """Product of oriented gains along the cycle as listed (closing edge included)."""
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise GainError(f"not a simple cycle: {cycle}")
    z = 1 + 0j
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        if not phi.graph.has_edge(u, v):
            raise GainError(f"cycle step ({u}, {v}) is not an edge")
        z *= phi.gain(u, v)
    return CycleGainRecord(tuple(cycle), z)


def is_balanced(phi: GainGraph) -> tuple[bool, SwitchingFunction | None]:
    """Whether every cycle has gain 1; if so, also a switching onto all-ones gains.

    A spanning-forest potential theta with theta(v) = theta(u) * gain(u -> v)
    is propagated from each component root; the assignment is balanced exactly
    when every non-tree edge agrees with the potential.  The certificate is
    zeta = conj(theta): switching by it turns every gain into 1.
    """
    g = phi.graph
    theta = [1 + 0j] * g.n
    for comp in g.components:
        root = comp[0]
        order = [root]
        seen = {root}
        idx = 0
        while idx < len(order):
            u = order[idx]
            idx += 1
            for v in g.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    theta[v] = theta[u] * phi.gain(u, v)
                    order.append(v)
    for u, v in g.edge_list:
        if abs(phi.gain(u, v) - theta[v] / theta[u]) > BALANCE_TOL:
            return False, None
    return True, SwitchingFunction(tuple(t.conjugate() for t in theta))


def is_antibalanced(phi: GainGraph) -> bool:
    """Whether negating every gain yields a balanced assignment."""
    ok, _ = is_balanced(phi.negate())
    return ok


def switch(phi: GainGraph, zeta: SwitchingFunction) -> GainGraph:
    """Gain re-grading: the u -> v gain becomes zeta(u)^-1 * gain * zeta(v)."""
    if len(zeta.zeta) != phi.graph.n:
        raise GainError("switching function length must match vertex count")
    z = zeta.zeta
    new = tuple(((u, v), z[u].conjugate() * w * z[v]) for (u, v), w in phi.edge_gains)
    return GainGraph(phi.graph, new)


def with_cycle_gain(g: SimpleGraph, z: complex) -> GainGraph:
    """Unicyclic graph with gain z placed on one cycle edge and 1 elsewhere.

    The gain sits on the first edge of the canonical cycle, oriented along the
    cycle, so the cycle's gain as enumerated equals z.
    """
    if not g.unicyclic:
        raise GainError("with_cycle_gain needs a connected graph with exactly one cycle")
    return assign_cycle_gains(g, [z])


def assign_cycle_gains(g: SimpleGraph, cycle_values) -> GainGraph:
    """Gains realizing a prescribed gain per simple cycle, in simple_cycles order.

    Each cycle's value goes on its first edge, oriented along the listed cycle;
    every other edge gets 1.  The simple cycles must be pairwise edge-disjoint
    (cactus graphs), otherwise the placements would interact.
    """
    cycles = simple_cycles(g)
    values = [complex(v) for v in cycle_values]
    if len(values) != len(cycles):
        raise GainError(f"graph has {len(cycles)} simple cycles, got {len(values)} values")
    used: set[Edge] = set()
    for c in cycles:
        for i in range(len(c)):
            e = tuple(sorted((c[i], c[(i + 1) % len(c)])))
            if e in used:
                raise GainError("simple cycles are not edge-disjoint")
            used.add(e)
    gains = {e: 1 + 0j for e in g.edge_list}
    for c, z in zip(cycles, values):
        u, v = c[0], c[1]
        gains[(u, v) if u < v else (v, u)] = z if u < v else z.conjugate()
    return GainGraph(g, tuple(sorted(gains.items())))


def pure_imaginary_cycle_gains(g: SimpleGraph, signs=None) -> GainGraph:
    """Gains giving every simple cycle the gain +i or -i (edge-disjoint cycles only)."""
    cycles = simple_cycles(g)
    if signs is None:
        signs = [1] * len(cycles)
    values = []
    for s in signs:
        if s not in (1, -1):
            raise GainError(f"sign must be +1 or -1, got {s!r}")
        values.append(complex(0, s))
    return assign_cycle_gains(g, values)


def random_gains(g: SimpleGraph, seed: int) -> GainGraph:
    """Independent uniform-angle unit gains, reproducible from the seed."""
    rng = random.Random(seed)
    gains = tuple((e, cmath.exp(2j * cmath.pi * rng.random())) for e in g.edge_list)
    return GainGraph(g, gains)


def induced(phi: GainGraph, vertices) -> GainGraph:
    """Gain subgraph induced on the given vertices, relabeled to 0..k-1."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    sub = SimpleGraph.from_edges(
        len(keep), ((index[u], index[v]) for u, v in phi.graph.edge_list if u in index and v in index)
    )
    gains = tuple(
        ((index[u], index[v]), z)
        for (u, v), z in phi.edge_gains
        if u in index and v in index
    )
    return GainGraph(sub, tuple(sorted(gains)))


def edge_subgraph(phi: GainGraph, edges) -> GainGraph:
    """Spanning subgraph keeping only the given edges (vertex set unchanged)."""
    keep = {tuple(sorted(e)) for e in edges}
    unknown = keep - phi.graph.edges
    if unknown:
        raise GainError(f"edges not in graph: {sorted(unknown)}")
    sub = SimpleGraph(phi.graph.n, frozenset(keep))
    return GainGraph(sub, tuple((e, z) for e, z in phi.edge_gains if e in keep))
