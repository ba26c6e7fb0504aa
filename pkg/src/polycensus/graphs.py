"""Immutable simple graphs on at most 16 vertices, stored as adjacency bit rows."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 16


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class DegreeSequence:
    """Weakly decreasing vertex degrees with an even sum."""

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        degs = self.degrees
        if not degs:
            raise ValueError("degree sequence must be non-empty")
        p = len(degs)
        if any(d < 0 or d > p - 1 for d in degs):
            raise ValueError(f"degrees must lie in 0..{p - 1}: {degs}")
        if any(degs[i] < degs[i + 1] for i in range(p - 1)):
            raise ValueError(f"degree sequence must be weakly decreasing: {degs}")
        if sum(degs) % 2:
            raise ValueError(f"degree sum must be even: {degs}")

    @property
    def p(self) -> int:
        return len(self.degrees)

    @property
    def q(self) -> int:
        return sum(self.degrees) // 2

    def complement(self) -> DegreeSequence:
        """Degree sequence of the complement of any graph with this sequence.

        Vertex of degree d on p vertices has degree p-1-d in the complement,
        so the sorted sequence is mirrored entry-wise.
        """
        p = self.p
        return DegreeSequence(tuple(p - 1 - d for d in reversed(self.degrees)))

    def compact(self) -> str:
        """Digit string like ``44443333``; only defined for degrees <= 9."""
        if any(d > 9 for d in self.degrees):
            raise ValueError("compact form needs single-digit degrees")
        return "".join(str(d) for d in self.degrees)

    @classmethod
    def from_compact(cls, text: str) -> DegreeSequence:
        return cls(tuple(int(ch) for ch in text))

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __getitem__(self, i: int) -> int:
        return self.degrees[i]


def complement_degree_sequence(d: DegreeSequence) -> DegreeSequence:
    """Function form of DegreeSequence.complement."""
    return d.complement()


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbour bitmask of vertex ``v``."""

    p: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        p, adj = self.p, self.adj
        if not isinstance(p, int) or not 1 <= p <= MAX_VERTICES:
            raise ValueError(f"order must be 1..{MAX_VERTICES}, got {p!r}")
        if len(adj) != p:
            raise ValueError(f"expected {p} adjacency rows, got {len(adj)}")
        full = (1 << p) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"row {v} references vertices outside 0..{p - 1}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(p):
            for u in bits(adj[v]):
                if not (adj[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, p: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * p
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop ({u}, {v})")
            if not (0 <= u < p and 0 <= v < p):
                raise ValueError(f"edge ({u}, {v}) out of range for order {p}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(p, tuple(rows))

    @property
    def q(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Undirected edges as (u, v) with u < v, lexicographic order."""
        for u in range(self.p):
            high = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(high):
                yield (u, v)

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v or not (0 <= u < self.p and 0 <= v < self.p):
            raise ValueError(f"bad edge ({u}, {v})")
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) already present")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.p, tuple(rows))

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) not present")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.p, tuple(rows))

    def complement(self) -> Graph:
        full = (1 << self.p) - 1
        return Graph(
            self.p,
            tuple((full ^ row ^ (1 << v)) for v, row in enumerate(self.adj)),
        )

    def degree_sequence(self) -> DegreeSequence:
        return DegreeSequence(
            tuple(sorted((row.bit_count() for row in self.adj), reverse=True))
        )

    def induced_subgraph(self, keep: Iterable[int]) -> Graph:
        """Subgraph induced on ``keep``; vertices are renumbered 0..k-1 in sorted order."""
        kept = sorted(set(keep))
        if not kept:
            raise ValueError("cannot induce on an empty vertex set")
        if kept[0] < 0 or kept[-1] >= self.p:
            raise ValueError(f"vertices out of range: {kept}")
        index = {v: i for i, v in enumerate(kept)}
        rows = [0] * len(kept)
        for v in kept:
            for u in bits(self.adj[v]):
                if u in index:
                    rows[index[v]] |= 1 << index[u]
        return Graph(len(kept), tuple(rows))

    def relabel(self, perm: Iterable[int]) -> Graph:
        """Apply a permutation (old vertex -> new vertex) to the labelling."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.p)):
            raise ValueError(f"not a permutation of 0..{self.p - 1}: {perm}")
        rows = [0] * self.p
        for v in range(self.p):
            new_row = 0
            for u in bits(self.adj[v]):
                new_row |= 1 << perm[u]
            rows[perm[v]] = new_row
        return Graph(self.p, tuple(rows))


# ====== Named constructions ======


def empty_graph(p: int) -> Graph:
    return Graph(p, (0,) * p)


def complete(p: int) -> Graph:
    full = (1 << p) - 1
    return Graph(p, tuple(full ^ (1 << v) for v in range(p)))


def cycle(p: int) -> Graph:
    if p < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(p, [(v, (v + 1) % p) for v in range(p)])


def path(p: int) -> Graph:
    if p < 1:
        raise ValueError("path needs at least 1 vertex")
    return Graph.from_edges(p, [(v, v + 1) for v in range(p - 1)])


def wheel(rim: int) -> Graph:
    """Hub vertex ``rim`` joined to every vertex of an outer ``rim``-cycle."""
    if rim < 3:
        raise ValueError("wheel rim needs at least 3 vertices")
    edges = [(v, (v + 1) % rim) for v in range(rim)]
    edges += [(v, rim) for v in range(rim)]
    return Graph.from_edges(rim + 1, edges)


def complete_multipartite(*sizes: int) -> Graph:
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    p = sum(sizes)
    part = []
    for i, s in enumerate(sizes):
        part += [i] * s
    edges = [(u, v) for u, v in combinations(range(p), 2) if part[u] != part[v]]
    return Graph.from_edges(p, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite(a, b)
