"""Adjacency spectra of threshold graphs.

Three independent routes to the spectral radius:

* ``spectral_radius`` -- power iteration on the full adjacency matrix,
* ``full_spectrum`` -- cyclic Jacobi rotations giving every eigenvalue,
* ``spectral_radius_quotient`` -- power iteration on the small quotient
  matrix of the equitable partition into composition blocks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from threshmax.graph_core import CapacityError, CreationSequence, to_adjacency, to_composition

JACOBI_MAX_N = 512
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
RQ_TOL = 1e-12
# A + SHIFT*I has a unique dominant eigenvalue even for bipartite graphs
SHIFT = 1.0

# above this size the quotient matrix is the default objective
QUOTIENT_THRESHOLD = 64


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class SpectralResult:
    lambda_1: float
    perron_vector: np.ndarray
    spectrum: np.ndarray | None = None


def _power_iteration(mat: np.ndarray, start: np.ndarray, max_iter: int) -> tuple[float, np.ndarray]:
    x = start / np.linalg.norm(start)
    y = mat @ x
    lam = float(x @ y)
    for _ in range(max_iter):
        z = y + SHIFT * x
        x = z / np.linalg.norm(z)
        y = mat @ x
        lam_new = float(x @ y)
        if abs(lam_new - lam) <= RQ_TOL * (1.0 + abs(lam_new)):
            return lam_new, x
        lam = lam_new
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")


def spectral_radius(seq: CreationSequence) -> SpectralResult:
    """Spectral radius and unit Perron vector of a connected threshold graph."""
    adj = to_adjacency(seq)
    start = adj.sum(axis=1)
    lam, vec = _power_iteration(adj, start, max_iter=100 * seq.n)
    if vec.sum() < 0:
        vec = -vec
    return SpectralResult(lambda_1=lam, perron_vector=vec)


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Pairings that visit every index pair once per sweep, n//2 disjoint pairs per round."""
    size = n + (n % 2)
    players = list(range(size))
    rounds = []
    for _ in range(size - 1):
        pairs = [(players[i], players[size - 1 - i]) for i in range(size // 2)]
        pairs = [(min(p, q), max(p, q)) for p, q in pairs if p < n and q < n]
        p, q = zip(*pairs)
        rounds.append((np.array(p), np.array(q)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def jacobi_eigh(mat: np.ndarray, tol: float = JACOBI_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and eigenvectors of a dense symmetric matrix.

    Each round annihilates n//2 disjoint off-diagonal entries at once; the
    rounds of one sweep cover every pair. Stops once the off-diagonal
    Frobenius norm falls below ``tol`` times the initial Frobenius norm.
    """
    a = np.array(mat, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    if n == 1:
        return a.diagonal().copy(), v
    target = tol * np.linalg.norm(a)
    rounds = _round_robin(n)

    off_diag = ~np.eye(n, dtype=bool)

    def off_norm() -> float:
        # measured directly; subtracting the diagonal from the full norm cancels badly
        return float(np.linalg.norm(a[off_diag]))

    for _ in range(JACOBI_MAX_SWEEPS):
        if off_norm() <= target:
            return a.diagonal().copy(), v
        for p, q in rounds:
            apq = a[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            tau = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.where(tau >= 0, 1.0, -1.0) / (np.abs(tau) + np.hypot(1.0, tau))
            c = 1.0 / np.hypot(1.0, t)
            s = t * c
            rows_p, rows_q = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * rows_p - s[:, None] * rows_q
            a[q, :] = s[:, None] * rows_p + c[:, None] * rows_q
            cols_p, cols_q = a[:, p].copy(), a[:, q].copy()
            a[:, p] = cols_p * c - cols_q * s
            a[:, q] = cols_p * s + cols_q * c
            a[p, q] = 0.0
            a[q, p] = 0.0
            vp, vq = v[:, p].copy(), v[:, q].copy()
            v[:, p] = vp * c - vq * s
            v[:, q] = vp * s + vq * c
    raise ConvergenceError(f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps")


def full_spectrum(adj: np.ndarray, max_n: int = JACOBI_MAX_N) -> SpectralResult:
    """All eigenvalues in non-increasing order, with the eigenvector of the largest."""
    adj = np.asarray(adj, dtype=float)
    n = adj.shape[0]
    if n > max_n:
        raise CapacityError(f"full_spectrum is capped at n={max_n}, got n={n}")
    values, vectors = jacobi_eigh(adj)
    order = np.argsort(-values, kind="stable")
    values = values[order]
    top = vectors[:, order[0]]
    if top.sum() < 0:
        top = -top
    return SpectralResult(lambda_1=float(values[0]), perron_vector=top, spectrum=values)


def quotient_matrix(seq: CreationSequence) -> tuple[np.ndarray, np.ndarray]:
    """Symmetrised quotient matrix of the block partition, and the block sizes.

    Entry (a, b) is ``adj(a, b) * sqrt(|a| |b|)`` which is similar to the
    neighbour-count quotient and shares its eigenvalues.
    """
    sizes = np.array(to_composition(seq).parts, dtype=float)
    k = len(sizes)
    # block types alternate backwards from the dominating last block
    dominating = np.array([(k - 1 - a) % 2 == 0 for a in range(k)])
    idx = np.arange(k)
    later = np.maximum.outer(idx, idx)
    # two distinct blocks are joined iff the later one is dominating
    joined = dominating[later] & (idx[:, None] != idx[None, :])
    q = joined * np.sqrt(np.outer(sizes, sizes))
    # a dominating block is a clique
    q[idx, idx] = np.where(dominating, sizes - 1, 0.0)
    return q, sizes


def spectral_radius_quotient(seq: CreationSequence) -> float:
    q, sizes = quotient_matrix(seq)
    if len(sizes) == 1:
        return float(sizes[0] - 1)
    # degree-vector start, expressed in the symmetrised block coordinates
    start = q @ np.sqrt(sizes)
    lam, _ = _power_iteration(q, start, max_iter=100 * seq.n)
    return lam


def objective(seq: CreationSequence) -> float:
    """Spectral radius through the cheapest exact route for this size."""
    if seq.n > QUOTIENT_THRESHOLD:
        return spectral_radius_quotient(seq)
    return spectral_radius(seq).lambda_1
