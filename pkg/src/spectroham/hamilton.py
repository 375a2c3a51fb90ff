"""Exact Hamiltonicity oracles by backtracking over vertex bitmasks.

The search extends a path one vertex at a time and prunes a branch when
either (a) some unvisited vertex other than the required endpoint has
no unvisited-or-current neighbour left, or (b) the unvisited vertices
plus the current endpoint are no longer connected.  Neighbours are
tried in ascending degree order, which empirically shrinks the tree.

Bipartite graphs get a parity precheck before any search: a Hamiltonian
path alternates sides, so the part sizes must differ by at most one, a
cycle needs equal parts, and path endpoints are pinned to the larger
part (or to opposite parts when balanced).  Without this, dense
unbalanced cases like K_{6,8} defeat both in-search prunes and the
exhaustive search runs for minutes.

Small orders follow the usual path conventions: K_1 is traceable but
not Hamiltonian, and K_2 is Hamiltonian-connected but not Hamiltonian
(a cycle needs at least three vertices).
"""

from dataclasses import dataclass

from .graphs import Graph, reachable_mask


def _search(masks, order, full, current, visited, target_bit):
    """True if the path at `current` extends to cover full.

    target_bit = 0 searches for any Hamiltonian path; a single vertex
    bit demands that endpoint; target_bit == 1 << start closes a cycle.
    """
    remaining = full & ~visited
    if remaining == 0:
        return target_bit == 0 or masks[current] & target_bit != 0
    if remaining == target_bit:
        return masks[current] & target_bit != 0
    cur_bit = 1 << current
    avail = remaining | cur_bit
    probe = remaining & ~target_bit
    while probe:
        low = probe & -probe
        probe ^= low
        if masks[low.bit_length() - 1] & avail & ~low == 0:
            return False
    region = (remaining & ~target_bit) | cur_bit
    if reachable_mask(masks, current, region) != region:
        return False
    candidates = masks[current] & remaining & ~target_bit
    for v in order:
        if candidates >> v & 1 and _search(masks, order, full, v, visited | (1 << v), target_bit):
            return True
    return False


def _degree_order(g):
    return tuple(sorted(range(g.n), key=lambda v: (g.degrees[v], v)))


def _bipartition(g):
    """(smaller, larger) colour-class masks if g is bipartite, else None.

    Assumes g is connected, so one BFS colours every vertex.
    """
    masks = g.neighbor_masks
    color = [-1] * g.n
    color[0] = 0
    queue = [0]
    part = [1, 0]
    while queue:
        u = queue.pop()
        nb = masks[u]
        while nb:
            low = nb & -nb
            nb ^= low
            w = low.bit_length() - 1
            if color[w] == -1:
                color[w] = 1 - color[u]
                part[color[w]] |= low
                queue.append(w)
            elif color[w] == color[u]:
                return None
    if part[0].bit_count() <= part[1].bit_count():
        return part[0], part[1]
    return part[1], part[0]


def has_hamiltonian_path_between(g, u, v):
    """True if some Hamiltonian path has endpoints u and v."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise ValueError("endpoints must be distinct")
    full = (1 << g.n) - 1
    if reachable_mask(g.neighbor_masks, u, full) != full:
        return False
    parts = _bipartition(g)
    if parts is not None:
        small, large = parts
        diff = large.bit_count() - small.bit_count()
        if diff >= 2:
            return False
        ends = (1 << u) | (1 << v)
        if diff == 1 and ends & small:
            return False
        if diff == 0 and not (ends & small and ends & large):
            return False
    # walk from u; v may only be entered as the final vertex
    return _search(g.neighbor_masks, _degree_order(g), full, u, 1 << u, 1 << v)


def _path_from(g, start, full, order, parts):
    if parts is not None:
        small, large = parts
        diff = large.bit_count() - small.bit_count()
        if diff >= 2:
            return False
        if diff == 1 and (1 << start) & small:
            return False
    return _search(g.neighbor_masks, order, full, start, 1 << start, 0)


def is_traceable(g):
    """True if g has a Hamiltonian path."""
    if g.n == 1:
        return True
    full = (1 << g.n) - 1
    if reachable_mask(g.neighbor_masks, 0, full) != full:
        return False
    order = _degree_order(g)
    parts = _bipartition(g)
    return any(_path_from(g, start, full, order, parts) for start in order)


def is_hamiltonian(g):
    """True if g has a Hamiltonian cycle (needs n >= 3)."""
    if g.n < 3:
        return False
    if min(g.degrees) < 2:
        return False
    full = (1 << g.n) - 1
    masks = g.neighbor_masks
    if reachable_mask(masks, 0, full) != full:
        return False
    parts = _bipartition(g)
    if parts is not None and parts[0].bit_count() != parts[1].bit_count():
        return False
    # anchor the cycle at vertex 0 and demand a closing edge back to it
    return _search(masks, _degree_order(g), full, 0, 1, 1)


def is_homogeneously_traceable(g):
    """True if every vertex starts some Hamiltonian path."""
    if g.n == 1:
        return True
    full = (1 << g.n) - 1
    if reachable_mask(g.neighbor_masks, 0, full) != full:
        return False
    order = _degree_order(g)
    parts = _bipartition(g)
    return all(_path_from(g, start, full, order, parts) for start in range(g.n))


def is_hamiltonian_connected(g):
    """True if every vertex pair is joined by a Hamiltonian path."""
    if g.n == 1:
        return True
    full = (1 << g.n) - 1
    if reachable_mask(g.neighbor_masks, 0, full) != full:
        return False
    if g.n >= 3 and _bipartition(g) is not None:
        # endpoints of an alternating path cannot cover same-part pairs
        return False
    return all(
        has_hamiltonian_path_between(g, u, v)
        for u in range(g.n - 1)
        for v in range(u + 1, g.n)
    )


@dataclass(frozen=True)
class HamiltonianProfile:
    """The four path/cycle properties of one graph."""

    traceable: bool
    hamiltonian: bool
    homogeneously_traceable: bool
    hamiltonian_connected: bool


def hamiltonian_profile(g):
    """All four properties, with the implication chain sanity-checked."""
    profile = HamiltonianProfile(
        traceable=is_traceable(g),
        hamiltonian=is_hamiltonian(g),
        homogeneously_traceable=is_homogeneously_traceable(g),
        hamiltonian_connected=is_hamiltonian_connected(g),
    )
    if g.n >= 3 and profile.hamiltonian_connected and not profile.hamiltonian:
        raise AssertionError(f"property chain violated on {g!r}")
    if profile.hamiltonian and not profile.homogeneously_traceable:
        raise AssertionError(f"property chain violated on {g!r}")
    if profile.homogeneously_traceable and not profile.traceable:
        raise AssertionError(f"property chain violated on {g!r}")
    return profile
