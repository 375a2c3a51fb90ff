"""Symmetric eigenvalues, quotient matrices, and eigenvalue interlacing.

The eigensolver is a cyclic Jacobi iteration: sweep the strict upper
triangle, annihilate each pivot with a Givens rotation, and stop once
the off-diagonal Frobenius norm falls below 1e-12 * (1 + ||M||_F).
Rotations preserve symmetry and the spectrum exactly, so the diagonal
converges to the eigenvalues; for the matrices handled here (order up
to a few dozen) a handful of sweeps suffices.
"""

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .graphs import Graph
from .tolerance import resolve_eps

JACOBI_REL_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100

SYMMETRY_REL_TOL = 1e-12


def adjacency_matrix(g):
    """Dense 0/1 adjacency matrix as a float array."""
    a = np.zeros((g.n, g.n))
    for i, j in g.edges():
        a[i, j] = 1.0
        a[j, i] = 1.0
    return a


def laplacian_matrix(g):
    """Laplacian D - A as a float array."""
    m = -adjacency_matrix(g)
    for v, d in enumerate(g.degrees):
        m[v, v] = float(d)
    return m


def _as_symmetric(matrix):
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    if m.shape[0] == 0:
        raise ValueError("matrix must have at least one row")
    scale = max(1.0, float(np.abs(m).max()))
    if float(np.abs(m - m.T).max()) > SYMMETRY_REL_TOL * scale:
        raise ValueError("matrix is not symmetric")
    return m


def symmetric_eigenvalues(matrix, max_sweeps=JACOBI_MAX_SWEEPS):
    """All eigenvalues of a real symmetric matrix, non-increasing.

    Raises ArithmeticError if the Jacobi iteration has not converged
    after max_sweeps sweeps (does not happen for symmetric input).
    """
    m = _as_symmetric(matrix)
    n = m.shape[0]
    if n == 1:
        return [float(m[0, 0])]
    a = [[float(m[i, j]) for j in range(n)] for i in range(n)]
    frob = sqrt(sum(x * x for row in a for x in row))
    stop = JACOBI_REL_TOL * (1.0 + frob)
    for _ in range(max_sweeps):
        off = 0.0
        for i in range(n - 1):
            row = a[i]
            for j in range(i + 1, n):
                off += row[j] * row[j]
        if sqrt(2.0 * off) < stop:
            eigs = [a[i][i] for i in range(n)]
            eigs.sort(reverse=True)
            return eigs
        for p in range(n - 1):
            ap = a[p]
            for q in range(p + 1, n):
                apq = ap[q]
                if apq == 0.0:
                    continue
                aq = a[q]
                theta = (aq[q] - ap[p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                ap[p] -= t * apq
                aq[q] += t * apq
                ap[q] = 0.0
                aq[p] = 0.0
                for i in range(n):
                    if i == p or i == q:
                        continue
                    ai = a[i]
                    aip = ai[p]
                    aiq = ai[q]
                    ai[p] = aip - s * (aiq + tau * aip)
                    ai[q] = aiq + s * (aip - tau * aiq)
                    ap[i] = ai[p]
                    aq[i] = ai[q]
    raise ArithmeticError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


@dataclass(frozen=True)
class SpectralSummary:
    """Extreme adjacency eigenvalues and the Laplacian spectral radius."""

    lambda1: float
    lambda_n: float
    mu1: float
    tolerance: float


def spectral_summary(g):
    """Adjacency lambda_1, lambda_n and Laplacian mu_1 of a graph.

    tolerance is the accuracy bound of the converged solver runs: the
    larger of the two Jacobi stopping thresholds.
    """
    adj = symmetric_eigenvalues(adjacency_matrix(g))
    lap = symmetric_eigenvalues(laplacian_matrix(g))
    edge_bound = sqrt(2.0 * g.bits.bit_count())
    tol = JACOBI_REL_TOL * (2.0 + edge_bound + sqrt(float(sum(d * d + d for d in g.degrees))))
    lambda1, lambda_n, mu1 = adj[0], adj[-1], lap[0]
    if lambda1 < abs(lambda_n) - 1e-9 or mu1 < -1e-9 or mu1 > g.n + 1e-9:
        raise ArithmeticError("eigensolver output violates spectral range invariants")
    return SpectralSummary(lambda1, lambda_n, mu1, tol)


@dataclass(frozen=True)
class QuotientMatrix:
    """Average row-sum block matrix B_ij = e(V_i, V_j) / |V_i|."""

    blocks: tuple
    entries: tuple

    @property
    def m(self):
        return len(self.blocks)


def _check_partition(n, partition):
    blocks = []
    seen = 0
    for block in partition:
        members = sorted(set(block))
        if not members:
            raise ValueError("partition blocks must be nonempty")
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range for n={n}")
            mask |= 1 << v
        if mask & seen:
            raise ValueError("partition blocks must be disjoint")
        seen |= mask
        blocks.append(tuple(members))
    if seen != (1 << n) - 1:
        raise ValueError("partition must cover all vertices")
    return tuple(blocks)


def quotient_matrix(matrix, partition):
    """Quotient of a symmetric matrix under a vertex partition."""
    m = _as_symmetric(matrix)
    blocks = _check_partition(m.shape[0], partition)
    idx = [np.array(b) for b in blocks]
    entries = tuple(
        tuple(float(m[np.ix_(bi, bj)].sum()) / len(bi) for bj in idx) for bi in idx
    )
    return QuotientMatrix(blocks, entries)


def graph_quotient(g, block_mask):
    """Adjacency quotient of a graph under the 2-block split (S, V \\ S).

    block_mask is the bitmask of S; both sides must be nonempty.  Equals
    quotient_matrix(adjacency_matrix(g), [S, V \\ S]) but stays in integer
    popcount arithmetic.
    """
    full = (1 << g.n) - 1
    other = full & ~block_mask
    if block_mask & ~full or block_mask == 0 or other == 0:
        raise ValueError("block mask must cut the vertex set into two nonempty parts")
    masks = g.neighbor_masks
    within = 0
    across = 0
    rest = 0
    for v in range(g.n):
        nb = masks[v]
        if block_mask >> v & 1:
            within += (nb & block_mask).bit_count()
            across += (nb & other).bit_count()
        else:
            rest += (nb & other).bit_count()
    a = block_mask.bit_count()
    b = g.n - a
    blocks = (
        tuple(v for v in range(g.n) if block_mask >> v & 1),
        tuple(v for v in range(g.n) if other >> v & 1),
    )
    entries = ((within / a, across / a), (across / b, rest / b))
    return QuotientMatrix(blocks, entries)


def quotient_eigenvalues_2x2(q):
    """Eigenvalues (high, low) of a 2x2 quotient via trace and determinant."""
    if q.m != 2:
        raise ValueError(f"expected a 2x2 quotient, got m={q.m}")
    (a, b), (c, d) = q.entries
    half_trace = (a + d) / 2.0
    det = a * d - b * c
    disc = half_trace * half_trace - det
    scale = max(1.0, abs(a), abs(b), abs(c), abs(d))
    if disc < -1e-9 * scale * scale:
        raise ValueError("quotient has complex eigenvalues; blocks are inconsistent")
    root = sqrt(max(disc, 0.0))
    return half_trace + root, half_trace - root


@dataclass(frozen=True)
class InterlacingReport:
    """Outcome of checking eta_i against theta_i and theta_{n-m+i}."""

    outer: tuple
    inner: tuple
    holds: bool
    tight: bool
    worst_violation: float


def check_interlacing(outer, inner, tol=None):
    """Check that inner eigenvalues interlace outer ones.

    Interlacing: theta_i >= eta_i >= theta_{n-m+i} for i = 1..m, with
    both sequences non-increasing.  Tight means some k splits the inner
    sequence into a prefix matching the top of outer and a suffix
    matching its bottom.  worst_violation is the largest amount by
    which an inequality fails (<= 0 when interlacing holds exactly).
    """
    tol = resolve_eps(tol)
    theta = sorted((float(x) for x in outer), reverse=True)
    eta = sorted((float(x) for x in inner), reverse=True)
    n, m = len(theta), len(eta)
    if not 0 < m < n:
        raise ValueError(f"inner size must be in 1..{n - 1}, got {m}")
    worst = max(
        max(eta[i] - theta[i], theta[n - m + i] - eta[i]) for i in range(m)
    )
    holds = worst <= tol
    tight = False
    if holds:
        top = [abs(theta[i] - eta[i]) <= tol for i in range(m)]
        bottom = [abs(theta[n - m + i] - eta[i]) <= tol for i in range(m)]
        tight = any(
            all(top[:k]) and all(bottom[k:]) for k in range(m + 1)
        )
    return InterlacingReport(tuple(theta), tuple(eta), holds, tight, worst)


def is_equitable(matrix, partition, tol=None):
    """True when every block has constant row sums into every block."""
    tol = resolve_eps(tol)
    m = _as_symmetric(matrix)
    blocks = _check_partition(m.shape[0], partition)
    for bi in blocks:
        for bj in blocks:
            sums = [float(m[u, list(bj)].sum()) for u in bi]
            if max(sums) - min(sums) > tol:
                return False
    return True
