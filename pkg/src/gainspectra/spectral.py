"""Hermitian adjacency matrices, spectra, and graph energies.

The adjacency of a gain graph has A[u, v] = gain(u -> v) and A[v, u] its
conjugate, so the matrix is exactly Hermitian and all eigenvalues are real.
Energy is the sum of |eigenvalue|; each vertex gets the share weighted by its
squared eigenvector components, and those shares sum back to the total.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import KERNEL_BACKEND, kernel_solve
from .gains import GainGraph

HERMITIAN_TOL = 1e-12


class EigensolverError(RuntimeError):
    """The QL iteration hit its sweep cap before deflating every eigenvalue."""


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues ascending, with a unitary eigenvector matrix (columns)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


@dataclass(frozen=True)
class EnergyReport:
    energy: float
    vertex_energies: np.ndarray
    spectral_radius: float


def adjacency(phi: GainGraph) -> np.ndarray:
    """Hermitian adjacency matrix of a gain graph (complex128, zero diagonal)."""
    n = phi.graph.n
    a = np.zeros((n, n), dtype=np.complex128)
    for (u, v), z in phi.edge_gains:
        a[u, v] = z
        a[v, u] = z.conjugate()
    return a


def ensure_hermitian(a: np.ndarray, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Validate near-Hermitian input and return an exactly Hermitian copy."""
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    dev = float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0
    if dev > tol:
        raise ValueError(f"matrix deviates from Hermitian by {dev!r}")
    return (a + a.conj().T) * 0.5


def eigensystem(a: np.ndarray) -> Spectrum:
    """Full eigendecomposition via the in-house kernel, eigenvalues ascending."""
    h = ensure_hermitian(a)
    try:
        d, q = kernel_solve(h)
    except RuntimeError as exc:
        raise EigensolverError(str(exc)) from exc
    order = np.argsort(d, kind="stable")
    return Spectrum(eigenvalues=d[order], eigenvectors=q[:, order])


def spectrum(phi: GainGraph) -> Spectrum:
    return eigensystem(adjacency(phi))


def energy(phi: GainGraph) -> EnergyReport:
    """Total and per-vertex energy plus spectral radius.

    Vertex v's share is sum_j |q[v, j]|^2 |lambda_j|; unitarity of q makes the
    shares sum to the total energy.
    """
    spec = spectrum(phi)
    lam = spec.eigenvalues
    absl = np.abs(lam)
    weights = np.abs(spec.eigenvectors) ** 2
    vertex = weights @ absl
    return EnergyReport(
        energy=float(absl.sum()),
        vertex_energies=vertex,
        spectral_radius=float(absl.max()) if len(lam) else 0.0,
    )


def underlying_spectral_radius(g) -> float:
    """Spectral radius of the plain (all-ones gain) adjacency."""
    return energy(GainGraph.all_ones(g)).spectral_radius


def singular_value_sum(a: np.ndarray) -> float:
    """Sum of singular values of a general square matrix, via eigenvalues of [[0,A],[A*,0]].

    The doubled Hermitian matrix has eigenvalues +/- each singular value, so
    the positive half sums to the answer.  Keeps everything on the in-house
    kernel rather than pulling in an SVD.
    """
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    big = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    big[:n, n:] = a
    big[n:, :n] = a.conj().T
    spec = eigensystem(big)
    lam = spec.eigenvalues
    return float(lam[lam > 0].sum())
