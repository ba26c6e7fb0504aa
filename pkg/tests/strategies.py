"""Hypothesis strategies for small graphs."""

import itertools

from hypothesis import strategies as st

from polycensus import Graph


@st.composite
def graphs(draw, min_p: int = 1, max_p: int = 8):
    p = draw(st.integers(min_p, max_p))
    pairs = list(itertools.combinations(range(p), 2))
    if pairs:
        edges = draw(st.sets(st.sampled_from(pairs)))
    else:
        edges = set()
    return Graph.from_edges(p, edges)


@st.composite
def permutations_of(draw, p: int):
    return tuple(draw(st.permutations(range(p))))
