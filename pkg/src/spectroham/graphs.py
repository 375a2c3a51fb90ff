"""Simple undirected graphs on vertices 0..n-1, stored as packed edge bits.

Edges live in an integer bitmask indexed in column-major upper-triangle
order: pair (i, j) with i < j sits at bit j*(j-1)//2 + i.  This is the
same order graph6 serialises, so an edge-subset counter doubles as an
enumeration of graphs.
"""

from dataclasses import dataclass
from functools import cached_property

MAX_VERTICES = 62


def pair_index(i, j):
    """Bit position of the vertex pair {i, j}, i != j."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: vertex count plus packed adjacency bits."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if self.bits < 0 or self.bits >> (self.n * (self.n - 1) // 2):
            raise ValueError("edge bits out of range for vertex count")

    @cached_property
    def neighbor_masks(self):
        """Tuple where bit v of entry u is set iff u and v are adjacent."""
        masks = [0] * self.n
        bits = self.bits
        idx = 0
        for j in range(1, self.n):
            for i in range(j):
                if bits >> idx & 1:
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
                idx += 1
        return tuple(masks)

    @cached_property
    def degrees(self):
        return tuple(m.bit_count() for m in self.neighbor_masks)

    def has_edge(self, u, v):
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return False
        return self.bits >> pair_index(u, v) & 1 == 1

    def degree(self, v):
        self._check_vertex(v)
        return self.degrees[v]

    def edge_count(self):
        return self.bits.bit_count()

    def edges(self):
        """Edges as (i, j) pairs with i < j, in bit order."""
        bits = self.bits
        out = []
        idx = 0
        for j in range(1, self.n):
            for i in range(j):
                if bits >> idx & 1:
                    out.append((i, j))
                idx += 1
        return out

    def _check_vertex(self, v):
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edges(n, edges):
    """Graph on n vertices with the given (u, v) pairs; loops rejected."""
    bits = 0
    g = Graph(n)
    for u, v in edges:
        g._check_vertex(u)
        g._check_vertex(v)
        if u == v:
            raise ValueError(f"loop at vertex {u} not allowed")
        bits |= 1 << pair_index(u, v)
    return Graph(n, bits)


def empty_graph(n):
    return Graph(n)


def complete_graph(n):
    return Graph(n, (1 << n * (n - 1) // 2) - 1)


def path_graph(n):
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def complete_bipartite(a, b):
    """K_{a,b} with parts {0..a-1} and {a..a+b-1}."""
    if a < 1 or b < 1:
        raise ValueError("both parts must be nonempty")
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def join(g, h):
    """Join G + H: disjoint union plus all edges between the two parts.

    Vertices of g keep their labels; vertices of h are shifted by g.n.
    """
    n = g.n + h.n
    bits = 0
    for u, v in g.edges():
        bits |= 1 << pair_index(u, v)
    for u, v in h.edges():
        bits |= 1 << pair_index(g.n + u, g.n + v)
    for u in range(g.n):
        for v in range(g.n, n):
            bits |= 1 << pair_index(u, v)
    return Graph(n, bits)


def cone(g):
    """K_1 + G: a new dominating vertex, labelled g.n, joined to all of G."""
    n = g.n + 1
    bits = g.bits
    for u in range(g.n):
        bits |= 1 << pair_index(u, g.n)
    return Graph(n, bits)


def complement(g):
    full = (1 << g.n * (g.n - 1) // 2) - 1
    return Graph(g.n, full & ~g.bits)


def relabel(g, perm):
    """Apply the vertex relabelling v -> perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    return from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def petersen_graph():
    """Kneser graph K(5,2): outer 5-cycle, inner pentagram, five spokes."""
    outer = [(v, (v + 1) % 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    spokes = [(v, 5 + v) for v in range(5)]
    return from_edges(10, outer + inner + spokes)


def reachable_mask(masks, start, allowed):
    """Bitmask of vertices reachable from start inside the allowed mask.

    start must be a member of allowed.
    """
    seen = 1 << start
    frontier = seen
    while frontier:
        grow = 0
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            grow |= masks[low.bit_length() - 1]
        frontier = grow & allowed & ~seen
        seen |= frontier
    return seen
