"""Exact structural invariants: connectivity, independence number, and friends.

Vertex connectivity runs unit-capacity max-flow on the standard
vertex-split digraph (each vertex becomes an in/out arc of capacity 1),
minimised over non-adjacent vertex pairs.  The independence number is a
branch-and-bound over candidate bitmasks with a greedy clique-cover
upper bound.  Both are exact; nothing here is sampled or approximate.
"""

from collections import deque
from dataclasses import dataclass

from .graphs import Graph, reachable_mask


def min_degree(g):
    return min(g.degrees)


def is_connected(g):
    full = (1 << g.n) - 1
    return reachable_mask(g.neighbor_masks, 0, full) == full


def _local_connectivity(masks, n, source, sink, cap):
    """Max number of internally disjoint source-sink paths, stopping at cap.

    Nodes 0..n-1 are "in" copies, n..2n-1 are "out" copies; the in->out
    arc carries capacity 1, edge arcs are effectively unbounded.  BFS
    augmentation on the residual digraph; source enters at its out copy,
    sink is reached at its in copy.
    """
    residual = [[0] * (2 * n) for _ in range(2 * n)]
    for v in range(n):
        residual[v][v + n] = 1
        nb = masks[v]
        while nb:
            low = nb & -nb
            nb ^= low
            residual[v + n][low.bit_length() - 1] = n
    start = source + n
    flow = 0
    while flow < cap:
        parent = [-1] * (2 * n)
        parent[start] = start
        queue = deque([start])
        while queue and parent[sink] == -1:
            u = queue.popleft()
            row = residual[u]
            for w in range(2 * n):
                if row[w] > 0 and parent[w] == -1:
                    parent[w] = u
                    if w == sink:
                        break
                    queue.append(w)
        if parent[sink] == -1:
            break
        w = sink
        while w != start:
            u = parent[w]
            residual[u][w] -= 1
            residual[w][u] += 1
            w = u
        flow += 1
    return flow


def connectivity(g):
    """Vertex connectivity; n-1 for complete graphs, 0 when disconnected."""
    n = g.n
    if g.bits == (1 << n * (n - 1) // 2) - 1:
        return n - 1
    if not is_connected(g):
        return 0
    masks = g.neighbor_masks
    best = min_degree(g)
    for u in range(n - 1):
        for v in range(u + 1, n):
            if masks[u] >> v & 1:
                continue
            best = min(best, _local_connectivity(masks, n, u, v, best))
            if best == 1:
                return 1
    return best


def _clique_cover_bound(masks, candidates):
    """Number of cliques in a greedy cover of the candidate set."""
    cliques = 0
    ext = []
    while candidates:
        low = candidates & -candidates
        candidates ^= low
        v = low.bit_length() - 1
        nb = masks[v]
        for i in range(cliques):
            if ext[i] >> v & 1:
                ext[i] &= nb
                break
        else:
            ext.append(nb)
            cliques += 1
    return cliques


def independence_number(g):
    """Size of a maximum independent set, by branch and bound."""
    masks = g.neighbor_masks
    order = sorted(range(g.n), key=lambda v: -g.degrees[v])
    best = 0

    def expand(candidates, size):
        nonlocal best
        if size + candidates.bit_count() <= best:
            return
        if not candidates:
            best = max(best, size)
            return
        if size + _clique_cover_bound(masks, candidates) <= best:
            return
        for v in order:
            if candidates >> v & 1:
                break
        bit = 1 << v
        expand(candidates & ~bit & ~masks[v], size + 1)
        expand(candidates & ~bit, size)

    expand((1 << g.n) - 1, 0)
    return best


def is_complete_bipartite(g):
    """The part sizes (a, b) with a <= b if g is some K_{a,b}, else None."""
    if not is_connected(g):
        return None
    masks = g.neighbor_masks
    color = [-1] * g.n
    color[0] = 0
    queue = [0]
    while queue:
        u = queue.pop()
        nb = masks[u]
        while nb:
            low = nb & -nb
            nb ^= low
            w = low.bit_length() - 1
            if color[w] == -1:
                color[w] = 1 - color[u]
                queue.append(w)
            elif color[w] == color[u]:
                return None
    a = color.count(0)
    b = g.n - a
    if b == 0 or g.edge_count() != a * b:
        return None
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class GraphInvariants:
    """Order, minimum degree, connectivity, independence number."""

    n: int
    min_degree: int
    connectivity: int
    independence_number: int
    is_connected: bool


def invariants(g):
    kappa = connectivity(g)
    delta = min_degree(g)
    if kappa > delta:
        raise AssertionError(f"connectivity {kappa} exceeds min degree {delta}")
    return GraphInvariants(
        n=g.n,
        min_degree=delta,
        connectivity=kappa,
        independence_number=independence_number(g),
        is_connected=kappa > 0 or g.n == 1,
    )
