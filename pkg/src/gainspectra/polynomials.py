"""Characteristic and matching polynomials by independent routes.

Three ways to the characteristic polynomial of a gain adjacency:

* from the spectrum (roots -> coefficients),
* from elementary subgraphs (components are single edges or cycles; each
  contributes a sign, a power of two per cycle, and the real parts of the
  cycle gains),
* by the Faddeev-LeVerrier trace recursion on the matrix itself.

The matching polynomial comes from exact integer matching counts, and the
subgraph route also yields the reconstruction of the characteristic
polynomial from matching polynomials of cycle-deleted subgraphs.

All polynomials are numpy float64 coefficient arrays, highest degree first.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gains import GainGraph, cycle_gain
from .graphs import Edge, SimpleGraph, simple_cycles
from .spectral import ensure_hermitian, spectrum

SUBGRAPH_VERTEX_CAP = 16
MATCHING_VERTEX_CAP = 24
FADDEEV_DIMENSION_CAP = 64
FADDEEV_IMAG_TOL = 1e-8


class PolynomialError(ValueError):
    """Input outside a routine's supported range."""


@dataclass(frozen=True)
class ElementarySubgraph:
    """Vertex-disjoint union of single edges and simple cycles."""

    edges: tuple[Edge, ...]
    cycles: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return 2 * len(self.edges) + sum(len(c) for c in self.cycles)

    @property
    def component_count(self) -> int:
        return len(self.edges) + len(self.cycles)

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)


@dataclass(frozen=True)
class CycleUnion:
    """Nonempty vertex-disjoint set of simple cycles."""

    cycles: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return sum(len(c) for c in self.cycles)

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)


def _cycles_with_masks(g: SimpleGraph):
    """Simple cycles grouped by their minimum vertex, with vertex bitmasks."""
    by_min: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(g.n)]
    for c in simple_cycles(g):
        mask = 0
        for x in c:
            mask |= 1 << x
        by_min[c[0]].append((mask, c))
    return by_min


def _iter_elementary(g: SimpleGraph):
    """Yield every elementary subgraph (including the empty one) exactly once.

    Recursion on the lowest undecided vertex: leave it out, cover it by an
    edge to a higher neighbor, or cover it by a cycle in which it is minimal.
    """
    n = g.n
    adj = g.adjacency
    by_min = _cycles_with_masks(g)
    edges_acc: list[Edge] = []
    cycles_acc: list[tuple[int, ...]] = []

    def rec(avail: int):
        if avail == 0:
            yield ElementarySubgraph(tuple(edges_acc), tuple(cycles_acc))
            return
        v = (avail & -avail).bit_length() - 1
        rest = avail & (avail - 1)
        yield from rec(rest)
        for u in adj[v]:
            if (rest >> u) & 1:
                edges_acc.append((v, u))
                yield from rec(rest & ~(1 << u))
                edges_acc.pop()
        for mask, c in by_min[v]:
            if mask & ~avail:
                continue
            cycles_acc.append(c)
            yield from rec(avail & ~mask)
            cycles_acc.pop()

    yield from rec((1 << n) - 1)


def enumerate_elementary_subgraphs(g: SimpleGraph, vertex_count: int | None = None) -> list[ElementarySubgraph]:
    """All elementary subgraphs, optionally only those on a given vertex count."""
    if g.n > SUBGRAPH_VERTEX_CAP:
        raise PolynomialError(f"subgraph enumeration capped at {SUBGRAPH_VERTEX_CAP} vertices, got {g.n}")
    out = [h for h in _iter_elementary(g) if h.component_count > 0]
    if vertex_count is not None:
        out = [h for h in out if h.vertex_count == vertex_count]
    return out


def enumerate_cycle_unions(g: SimpleGraph) -> list[CycleUnion]:
    """All nonempty vertex-disjoint unions of simple cycles."""
    if g.n > SUBGRAPH_VERTEX_CAP:
        raise PolynomialError(f"cycle union enumeration capped at {SUBGRAPH_VERTEX_CAP} vertices, got {g.n}")
    by_min = _cycles_with_masks(g)
    acc: list[tuple[int, ...]] = []
    out: list[CycleUnion] = []

    def rec(avail: int):
        if avail == 0:
            if acc:
                out.append(CycleUnion(tuple(acc)))
            return
        v = (avail & -avail).bit_length() - 1
        rec(avail & (avail - 1))
        for mask, c in by_min[v]:
            if mask & ~avail:
                continue
            acc.append(c)
            rec(avail & ~mask)
            acc.pop()

    rec((1 << g.n) - 1)
    return out


def char_poly_eigen(phi: GainGraph) -> np.ndarray:
    """Characteristic polynomial as the monic polynomial over the computed spectrum."""
    return np.poly(spectrum(phi).eigenvalues) if phi.graph.n else np.array([1.0])


def char_poly_subgraph(phi: GainGraph) -> np.ndarray:
    """Characteristic polynomial from the elementary-subgraph expansion.

    The coefficient of x^(n-i) sums, over elementary subgraphs on i vertices,
    (-1)^components * 2^cycles * product of cycle-gain real parts.
    """
    g = phi.graph
    if g.n > SUBGRAPH_VERTEX_CAP:
        raise PolynomialError(f"subgraph route capped at {SUBGRAPH_VERTEX_CAP} vertices, got {g.n}")
    coeffs = np.zeros(g.n + 1)
    coeffs[0] = 1.0
    re_cache: dict[tuple[int, ...], float] = {}
    for h in _iter_elementary(g):
        if h.component_count == 0:
            continue
        w = (-1.0) ** h.component_count * 2.0 ** h.cycle_count
        for c in h.cycles:
            r = re_cache.get(c)
            if r is None:
                r = cycle_gain(phi, c).real_part
                re_cache[c] = r
            w *= r
        coeffs[h.vertex_count] += w
    return coeffs


def char_poly_faddeev(a: np.ndarray) -> np.ndarray:
    """Characteristic polynomial by the Faddeev-LeVerrier trace recursion."""
    h = ensure_hermitian(a)
    n = h.shape[0]
    if n > FADDEEV_DIMENSION_CAP:
        raise PolynomialError(f"trace recursion capped at dimension {FADDEEV_DIMENSION_CAP}, got {n}")
    coeffs = np.zeros(n + 1)
    coeffs[0] = 1.0
    m = np.eye(n, dtype=np.complex128)
    eye = np.eye(n, dtype=np.complex128)
    for k in range(1, n + 1):
        am = h @ m
        ck = -np.trace(am) / k
        if abs(ck.imag) > FADDEEV_IMAG_TOL:
            raise PolynomialError(f"coefficient {k} has imaginary residue {ck.imag!r}")
        coeffs[k] = ck.real
        m = am + ck * eye
    return coeffs


class MatchingCounter:
    """Exact matching counts m(G[S], j) for induced vertex subsets S, memoized."""

    def __init__(self, g: SimpleGraph):
        self.masks = g.neighbor_masks
        self._memo: dict[int, tuple[int, ...]] = {0: (1,)}

    def counts(self, avail: int) -> tuple[int, ...]:
        got = self._memo.get(avail)
        if got is not None:
            return got
        v = (avail & -avail).bit_length() - 1
        rest = avail & (avail - 1)
        res = list(self.counts(rest))
        nb = self.masks[v] & rest
        while nb:
            u = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            sub = self.counts(rest & ~(1 << u))
            if len(res) < len(sub) + 1:
                res.extend([0] * (len(sub) + 1 - len(res)))
            for j, cnt in enumerate(sub):
                res[j + 1] += cnt
        out = tuple(res)
        self._memo[avail] = out
        return out


def matching_counts(g: SimpleGraph) -> tuple[int, ...]:
    """m(G, j) for j = 0..matching number, as exact integers."""
    if g.n > MATCHING_VERTEX_CAP:
        raise PolynomialError(f"matching counts capped at {MATCHING_VERTEX_CAP} vertices, got {g.n}")
    return MatchingCounter(g).counts((1 << g.n) - 1)


def matching_poly(g: SimpleGraph) -> np.ndarray:
    """Matching polynomial sum_j (-1)^j m(G, j) x^(n-2j), highest degree first."""
    counts = matching_counts(g)
    coeffs = np.zeros(g.n + 1)
    for j, cnt in enumerate(counts):
        coeffs[2 * j] = (-1.0) ** j * cnt
    return coeffs


def matching_number_from_poly(g: SimpleGraph) -> int:
    """Largest j with m(G, j) > 0, read off the matching counts."""
    return len(matching_counts(g)) - 1


def char_poly_from_matchings(phi: GainGraph) -> np.ndarray:
    """Characteristic polynomial rebuilt from matching polynomials.

    P(x) = m_G(x) + sum over nonempty disjoint cycle unions K of
    (-2)^{#cycles in K} * prod of cycle-gain real parts * m_{G - V(K)}(x).
    """
    g = phi.graph
    if g.n > SUBGRAPH_VERTEX_CAP:
        raise PolynomialError(f"matching reconstruction capped at {SUBGRAPH_VERTEX_CAP} vertices, got {g.n}")
    n = g.n
    counter = MatchingCounter(g)
    full = (1 << n) - 1
    coeffs = np.zeros(n + 1)
    for j, cnt in enumerate(counter.counts(full)):
        coeffs[2 * j] = (-1.0) ** j * cnt
    by_min = _cycles_with_masks(g)
    acc_masks: list[int] = []
    acc_re: list[float] = []

    def rec(avail: int):
        if avail == 0:
            if not acc_masks:
                return
            k_mask = 0
            wt = (-2.0) ** len(acc_masks)
            for bm, r in zip(acc_masks, acc_re):
                k_mask |= bm
                wt *= r
            size = k_mask.bit_count()
            for j, cnt in enumerate(counter.counts(full & ~k_mask)):
                coeffs[size + 2 * j] += wt * (-1.0) ** j * cnt
            return
        v = (avail & -avail).bit_length() - 1
        rec(avail & (avail - 1))
        for mask, c in by_min[v]:
            if mask & ~avail:
                continue
            acc_masks.append(mask)
            acc_re.append(cycle_gain(phi, c).real_part)
            rec(avail & ~mask)
            acc_masks.pop()
            acc_re.pop()

    rec(full)
    return coeffs
