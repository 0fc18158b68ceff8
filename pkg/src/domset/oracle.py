"""Exact domination number by closed-neighborhood branch and bound."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import Graph

DEFAULT_MAX_N = 32
DEFAULT_NODE_LIMIT = 5_000_000


class OracleInconclusive(RuntimeError):
    """The node budget ran out before optimality was proven."""


@dataclass(frozen=True)
class OracleResult:
    gamma: int
    witness: tuple[int, ...]
    nodes_explored: int


def is_dominating(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    for v in vs:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise ValueError(f"vertex id {v!r} out of range for n={g.n}")
    return len(g.closed_neighborhood(vs)) == g.n


def _incumbent(g: Graph) -> tuple[int, ...]:
    # Imported here: the rules module is the only consumer-side dependency.
    from .residual import D4, D5
    from .rules import solve

    if g.min_degree >= 5:
        return solve(g, D5).dominating_set
    if g.min_degree == 4:
        return solve(g, D4).dominating_set
    return tuple(range(g.n))


def minimum_dominating_set(g: Graph, node_limit: int = DEFAULT_NODE_LIMIT,
                           max_n: Optional[int] = DEFAULT_MAX_N,
                           seed_incumbent: bool = True) -> OracleResult:
    """Exact minimum dominating set.

    Branches on which member of N[v] covers the lowest-id undominated v;
    some member must be in every dominating set, so the search is exhaustive.
    Members tried in earlier sibling branches are excluded from later ones.
    A branch is cut when |D| + ceil(undominated / (Delta+1)) cannot beat the
    incumbent.
    """
    n = g.n
    if n < 1:
        raise ValueError("oracle needs n >= 1")
    if max_n is not None and n > max_n:
        raise ValueError(f"n = {n} exceeds the oracle guard {max_n}; pass max_n=None to override")
    adj = g.adjacency
    closed = [(v, *adj[v]) for v in range(n)]
    reach = max(len(c) for c in closed)
    best = list(_incumbent(g) if seed_incumbent else range(n))
    cover = [0] * n
    excluded = [False] * n
    undominated = n
    chosen: list[int] = []
    nodes = 0

    def search() -> None:
        nonlocal best, undominated, nodes
        nodes += 1
        if nodes > node_limit:
            raise OracleInconclusive(f"node limit {node_limit} exceeded")
        if undominated == 0:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + -(-undominated // reach) >= len(best):
            return
        v = cover.index(0)
        options = [u for u in closed[v] if not excluded[u]]
        options.sort(key=lambda x: -sum(1 for y in closed[x] if not cover[y]))
        for u in options:
            chosen.append(u)
            for y in closed[u]:
                if cover[y] == 0:
                    undominated -= 1
                cover[y] += 1
            search()
            for y in closed[u]:
                cover[y] -= 1
                if cover[y] == 0:
                    undominated += 1
            chosen.pop()
            # later siblings may assume u stays out of D
            excluded[u] = True
        for u in options:
            excluded[u] = False

    search()
    return OracleResult(len(best), tuple(sorted(best)), nodes)
