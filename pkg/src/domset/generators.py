"""Seeded instance generators and named fixtures.

Everything here is a pure function of its arguments: the same spec always
produces the same graph, edge for edge.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional, Sequence

from .graph import Graph

MODELS = ("regular", "min_degree", "named")


class InfeasibleSpec(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    model: str
    n: int = 0
    d: int = 0
    seed: int = 0
    name: Optional[str] = None

    def validate(self) -> None:
        if self.model not in MODELS:
            raise InfeasibleSpec(f"unknown model {self.model!r}")
        if self.model == "named":
            if self.name not in FIXTURES:
                raise InfeasibleSpec(f"unknown fixture {self.name!r}")
            return
        if self.n < 1 or self.d < 0:
            raise InfeasibleSpec("need n >= 1 and d >= 0")
        if self.d >= self.n:
            raise InfeasibleSpec(f"degree {self.d} impossible on {self.n} vertices (need d < n)")
        if self.model == "regular" and (self.n * self.d) % 2:
            raise InfeasibleSpec(f"n*d = {self.n * self.d} is odd; no {self.d}-regular graph on {self.n} vertices")


def generate(spec: GeneratorSpec) -> Graph:
    spec.validate()
    if spec.model == "regular":
        return random_regular(spec.n, spec.d, spec.seed)
    if spec.model == "min_degree":
        return random_min_degree(spec.n, spec.d, spec.seed)
    assert spec.name is not None
    return named(spec.name)


def random_regular(n: int, d: int, seed: int) -> Graph:
    """Uniform d-regular simple graph from the configuration model.

    Stubs are matched one pair at a time (the first unmatched stub with a
    uniformly random other one), which draws a uniform perfect matching.
    The attempt is abandoned at the first loop or repeated edge; rejecting
    early discards exactly the pairings a final check would, so the output
    stays uniform over simple graphs.
    """
    if d >= n or (n * d) % 2:
        raise InfeasibleSpec(f"no {d}-regular graph on {n} vertices")
    rng = random.Random(seed)
    base = [v for v in range(n) for _ in range(d)]
    total = len(base)
    while True:
        stubs = base[:]
        seen: set[tuple[int, int]] = set()
        for i in range(0, total, 2):
            j = rng.randrange(i + 1, total)
            stubs[i + 1], stubs[j] = stubs[j], stubs[i + 1]
            u, v = stubs[i], stubs[i + 1]
            e = (u, v) if u < v else (v, u)
            if u == v or e in seen:
                break
            seen.add(e)
        else:
            return Graph(n, sorted(seen))


def random_min_degree(n: int, d: int, seed: int) -> Graph:
    """Sparse random graph patched up until every degree is at least ``d``.

    Starts from G(n, p) with p drawn from [0, d/(n-1)], then visits vertices
    in id order and joins each deficient one to uniformly random
    non-neighbors.
    """
    if d >= n:
        raise InfeasibleSpec(f"degree {d} impossible on {n} vertices")
    rng = random.Random(seed)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    p = rng.uniform(0.0, d / (n - 1)) if n > 1 else 0.0
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            nbrs[u].add(v)
            nbrs[v].add(u)
    for v in range(n):
        while len(nbrs[v]) < d:
            choices = [u for u in range(n) if u != v and u not in nbrs[v]]
            u = rng.choice(choices)
            nbrs[v].add(u)
            nbrs[u].add(v)
    return Graph(n, [(u, v) for u in range(n) for v in nbrs[u] if u < v])


# -- named fixtures ---------------------------------------------------------

def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def pendant_clique(k: int) -> Graph:
    """Clique on {x, b1..bk} (x = 0) plus w = k+1 joined to b1..bk."""
    edges = list(combinations(range(k + 1), 2))
    edges += [(i, k + 1) for i in range(1, k + 1)]
    return Graph(k + 2, edges)


def icosahedron() -> Graph:
    edges = [(0, i) for i in range(1, 6)]
    edges += [(i, i % 5 + 1) for i in range(1, 6)]
    edges += [(5 + i, 5 + i % 5 + 1) for i in range(1, 6)]
    edges += [(5 + i, 11) for i in range(1, 6)]
    for i in range(1, 6):
        edges.append((i, 5 + i))
        edges.append((i, 5 + i % 5 + 1))
    return Graph(12, [tuple(sorted(e)) for e in edges])


def circulant(n: int, offsets: Sequence[int]) -> Graph:
    edges = {tuple(sorted((v, (v + k) % n))) for v in range(n) for k in offsets}
    return Graph(n, sorted(edges))


@dataclass(frozen=True)
class Gadget:
    """A padded graph plus the chosen set under which one claim fires first."""

    graph: Graph
    seed_set: tuple[int, ...]
    whites: tuple[int, ...]
    blues: tuple[int, ...]


def build_gadget(floor: int, n_white: int, white_edges: Sequence[tuple[int, int]],
                 blue_whites: Sequence[Sequence[int]]) -> Gadget:
    """Realize a prescribed residual picture as a graph with min degree ``floor``.

    Whites are 0..n_white-1 with the given white-white edges. Each entry of
    ``blue_whites`` becomes a blue vertex adjacent to exactly those whites.
    Every white is then topped up to ``floor`` with private blue leaves.
    All blues hang off a padding clique Q of size floor+1 whose first member
    is the single chosen vertex; Q ends up red and the blues stay blue.
    """
    wdeg = [0] * n_white
    for u, v in white_edges:
        wdeg[u] += 1
        wdeg[v] += 1
    for ws in blue_whites:
        for w in ws:
            wdeg[w] += 1
    blue_whites = [list(ws) for ws in blue_whites]
    for w in range(n_white):
        blue_whites.extend([w] for _ in range(max(0, floor - wdeg[w])))
    first_blue = n_white
    q0 = first_blue + len(blue_whites)
    clique = list(range(q0, q0 + floor + 1))
    edges = list(white_edges)
    for i, ws in enumerate(blue_whites):
        b = first_blue + i
        edges.extend((w, b) for w in ws)
        edges.extend((b, q) for q in clique[:floor])
    edges.extend(combinations(clique, 2))
    g = Graph(clique[-1] + 1, [tuple(sorted(e)) for e in edges])
    return Gadget(g, (q0,), tuple(range(n_white)), tuple(range(first_blue, q0)))


def _cycle_edges(vertices: Sequence[int]) -> list[tuple[int, int]]:
    k = len(vertices)
    return [(vertices[i], vertices[(i + 1) % k]) for i in range(k)]


def _gadget_c(floor: int) -> Gadget:
    # three isolated whites under one B3
    return build_gadget(floor, 3, [], [[0, 1, 2]])


def _gadget_d(floor: int) -> Gadget:
    # special vertex over two isolated whites
    return build_gadget(floor, 2, [], [[0, 1]])


def _gadget_e(floor: int, cycle_len: int) -> Gadget:
    # white 0 isolated; whites 1..L on a cycle; special joins 0 and 1
    cyc = list(range(1, cycle_len + 1))
    return build_gadget(floor, cycle_len + 1, _cycle_edges(cyc), [[0, 1]])


def _gadget_f(floor: int) -> Gadget:
    # P2 = 0-1, isolated whites 2 and 3, specials {0,2} and {1,3}
    return build_gadget(floor, 4, [(0, 1)], [[0, 2], [1, 3]])


GADGETS: dict[str, Callable[[], Gadget]] = {
    "gadget_c": lambda: _gadget_c(5),
    "gadget_d": lambda: _gadget_d(5),
    "gadget_e4": lambda: _gadget_e(5, 4),
    "gadget_e7": lambda: _gadget_e(5, 7),
    "gadget_f": lambda: _gadget_f(5),
    "gadget_i": lambda: _gadget_c(4),
    "gadget_j": lambda: _gadget_d(4),
    "gadget_k4": lambda: _gadget_e(4, 4),
    "gadget_k7": lambda: _gadget_e(4, 7),
    "gadget_l": lambda: _gadget_f(4),
}

# gadget -> (scheme id, rule expected to fire first under the seed set)
GADGET_TARGETS: dict[str, tuple[str, str]] = {
    "gadget_c": ("d5", "CLAIM_C"),
    "gadget_d": ("d5", "CLAIM_D"),
    "gadget_e4": ("d5", "CLAIM_E"),
    "gadget_e7": ("d5", "CLAIM_E"),
    "gadget_f": ("d5", "CLAIM_F"),
    "gadget_i": ("d4", "CLAIM_C"),
    "gadget_j": ("d4", "CLAIM_D"),
    "gadget_k4": ("d4", "CLAIM_E"),
    "gadget_k7": ("d4", "CLAIM_E"),
    "gadget_l": ("d4", "CLAIM_F"),
}

FIXTURES: dict[str, Callable[[], Graph]] = {
    "k6": lambda: complete(6),
    "k55": lambda: complete_bipartite(5, 5),
    "pendant_k6": lambda: pendant_clique(5),
    "pendant_k5": lambda: pendant_clique(4),
    "icosahedron": icosahedron,
    "circulant_9_12": lambda: circulant(9, (1, 2)),
}
FIXTURES.update({name: (lambda f=f: f().graph) for name, f in GADGETS.items()})

# Documented chosen sets for the fixtures that have one.
SEED_SETS: dict[str, tuple[int, ...]] = {
    "pendant_k6": (0,),
    "pendant_k5": (0,),
    "circulant_9_12": (0,),
}


def named(name: str) -> Graph:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise InfeasibleSpec(f"unknown fixture {name!r}") from None


def seed_set(name: str) -> tuple[int, ...]:
    if name in GADGETS:
        return GADGETS[name]().seed_set
    return SEED_SETS.get(name, ())
