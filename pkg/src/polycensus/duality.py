"""Duals of polyhedral graphs.

A graph is polyhedral when it is simple, planar and 3-connected.  Such
a graph has an essentially unique embedding, so its dual is a single
well-defined isomorphism class, again polyhedral, with
p* = q - p + 2 vertices and q* = q edges.
"""

from __future__ import annotations

from .connectivity import is_3_connected
from .graphs import Graph
from .isomorphism import are_isomorphic
from .planarity import embed, is_planar


class NotPolyhedralError(ValueError):
    """Raised when an operation needs a 3-connected planar input."""


def is_polyhedral(g: Graph) -> bool:
    """Simple graphs are assumed; checks 3-connectivity, then planarity."""
    return g.p >= 4 and is_3_connected(g) and is_planar(g)


def dual(g: Graph) -> Graph:
    """Planar dual: one vertex per face, edges between facing faces.

    Deterministic for a given labelled input (faces are numbered in the
    sorted order produced by the embedder), but only the isomorphism
    class is meaningful.
    """
    if not is_polyhedral(g):
        raise NotPolyhedralError(f"graph with p={g.p}, q={g.q} is not polyhedral")
    faces = embed(g).faces().faces
    side: dict[tuple[int, int], int] = {}
    for idx, face in enumerate(faces):
        m = len(face)
        for k in range(m):
            side[face[k], face[(k + 1) % m]] = idx
    edges = {
        (min(a, b), max(a, b))
        for u, v in g.edges()
        for a, b in [(side[u, v], side[v, u])]
    }
    # 3-connectivity rules out two faces sharing more than one edge
    assert len(edges) == g.q
    return Graph.from_edges(len(faces), sorted(edges))


def is_self_dual(g: Graph) -> bool:
    return are_isomorphic(g, dual(g))
