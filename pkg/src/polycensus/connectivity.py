"""Connectivity predicates.

3-connectivity is decided straight from the definition: delete every vertex
subset of size 0, 1 and 2 and test connectivity of the rest.  At order <= 16
this is at most 137 bitmask searches, so the brute-force definition is also
the fastest sensible implementation.
"""

from __future__ import annotations

from itertools import combinations

from .graphs import Graph, bits


def _connected_within(adj: tuple[int, ...], mask: int) -> bool:
    """Is the subgraph induced on the vertex bitmask ``mask`` connected?

    Vertex sets of size 0 and 1 count as connected.
    """
    if mask & (mask - 1) == 0:
        return True
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        reach = 0
        for v in bits(frontier):
            reach |= adj[v]
        frontier = reach & mask & ~seen
        seen |= frontier
    return seen == mask


def is_connected(g: Graph) -> bool:
    return _connected_within(g.adj, (1 << g.p) - 1)


def min_degree(g: Graph) -> int:
    return min(row.bit_count() for row in g.adj)


def is_3_connected(g: Graph) -> bool:
    """True iff ``g`` has more than 3 vertices and no cut set of size < 3."""
    p, adj = g.p, g.adj
    if p < 4:
        return False
    full = (1 << p) - 1
    if not _connected_within(adj, full):
        return False
    for v in range(p):
        if not _connected_within(adj, full ^ (1 << v)):
            return False
    for u, v in combinations(range(p), 2):
        if not _connected_within(adj, full ^ (1 << u) ^ (1 << v)):
            return False
    return True
