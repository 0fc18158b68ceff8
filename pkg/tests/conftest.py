from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from domset.generators import named
from domset.graph import Graph

# K_{5,5}: a0..a4 are 0..4, b0..b4 are 5..9
A = list(range(5))
B = list(range(5, 10))

D5_WEIGHTS = {"white": 35, 5: 23, 4: 21, 3: 19, 2: 17, 1: 14}
D4_WEIGHTS = {"white": 16, 4: 10, 3: 9, 2: 8, 1: 7}


def closed(g: Graph, vs) -> set[int]:
    out = set(vs)
    for v in vs:
        out.update(g.neighbors(v))
    return out


def definitional_colors(g: Graph, chosen) -> dict[int, str]:
    """Colors straight from the definitions, via N[D] and N[v] set inclusion."""
    nd = closed(g, chosen)
    colors = {}
    for v in range(g.n):
        if v not in nd:
            colors[v] = "white"
        elif not closed(g, [v]) <= nd:
            colors[v] = "blue"
        else:
            colors[v] = "red"
    return colors


def definitional_potential(g: Graph, chosen, weights: dict) -> int:
    colors = definitional_colors(g, chosen)
    top = max(k for k in weights if k != "white")
    total = 0
    for v, c in colors.items():
        if c == "white":
            total += weights["white"]
        elif c == "blue":
            wd = sum(1 for u in g.neighbors(v) if colors[u] == "white")
            total += weights[min(wd, top)]
    return total


def brute_force_gamma(g: Graph) -> int:
    for k in range(g.n + 1):
        for s in combinations(range(g.n), k):
            if len(closed(g, s)) == g.n:
                return k
    raise AssertionError("unreachable")


def patch_min_degree(n: int, edges: set[tuple[int, int]], d: int) -> Graph:
    """Join deficient vertices to their lowest-id non-neighbors until min degree >= d."""
    nbrs = {v: set() for v in range(n)}
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    for v in range(n):
        for u in range(n):
            if len(nbrs[v]) >= d:
                break
            if u != v and u not in nbrs[v]:
                nbrs[v].add(u)
                nbrs[u].add(v)
    return Graph(n, [(u, v) for u in range(n) for v in nbrs[u] if u < v])


@st.composite
def graphs_min_degree(draw, d: int, max_n: int = 14):
    n = draw(st.integers(d + 1, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return patch_min_degree(n, {p for p, keep in zip(pairs, mask) if keep}, d)


@st.composite
def graph_and_set(draw, d: int, max_n: int = 14):
    g = draw(graphs_min_degree(d, max_n))
    chosen = draw(st.sets(st.integers(0, g.n - 1), max_size=g.n))
    return g, sorted(chosen)


@pytest.fixture
def k55() -> Graph:
    return named("k55")


@pytest.fixture
def k6() -> Graph:
    return named("k6")


@pytest.fixture
def pendant_k6() -> Graph:
    return named("pendant_k6")


@pytest.fixture
def pendant_k5() -> Graph:
    return named("pendant_k5")
