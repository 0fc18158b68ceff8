"""Residual graphs G_D: white/blue/red coloring, white-degrees and potentials."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, Mapping

from .graph import Graph


class Color(IntEnum):
    """Ordered so that recoloring under a growing D only ever increases."""

    WHITE = 0
    BLUE = 1
    RED = 2


class SchemeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class WeightScheme:
    """Vertex weights of a potential function and its per-vertex move threshold.

    ``blue_weights[i]`` is the weight of a blue vertex with exactly i white
    neighbors; the top class ``degree_floor`` also absorbs everything above it.
    """

    id: str
    degree_floor: int
    white_weight: int
    blue_weights: Mapping[int, int]
    threshold: int
    charge_unit: int
    allowed_cycles: tuple[int, ...]
    cyc2_min: int
    cyc1_min: int

    def blue_class(self, white_degree: int) -> int:
        return min(white_degree, self.degree_floor)

    def blue_weight(self, white_degree: int) -> int:
        return self.blue_weights[min(white_degree, self.degree_floor)]

    def bound(self, n: int) -> int:
        return self.white_weight * n // self.threshold


D5 = WeightScheme(
    id="d5", degree_floor=5, white_weight=35,
    blue_weights={5: 23, 4: 21, 3: 19, 2: 17, 1: 14},
    threshold=105, charge_unit=6,
    allowed_cycles=(4, 5, 7, 10), cyc2_min=8, cyc1_min=13,
)
D4 = WeightScheme(
    id="d4", degree_floor=4, white_weight=16,
    blue_weights={4: 10, 3: 9, 2: 8, 1: 7},
    threshold=44, charge_unit=1,
    allowed_cycles=(4, 7), cyc2_min=5, cyc1_min=10,
)
SCHEMES = {"d5": D5, "d4": D4}


def scheme_for(g: Graph) -> WeightScheme:
    """Default scheme for a graph: d5 when min degree >= 5, d4 when it is 4."""
    if g.min_degree >= 5:
        return D5
    if g.min_degree == 4:
        return D4
    raise SchemeMismatch(f"minimum degree {g.min_degree} < 4: no applicable scheme")


class ResidualGraph:
    """Immutable snapshot of G_D.

    ``color`` and ``white_degree`` are indexed by vertex. Red vertices have
    white-degree 0 by construction, which matches their isolation in G_D.
    """

    __slots__ = ("graph", "chosen", "color", "white_degree", "_potentials")

    def __init__(self, graph: Graph, chosen: frozenset[int],
                 color: tuple[Color, ...], white_degree: tuple[int, ...]):
        self.graph = graph
        self.chosen = chosen
        self.color = color
        self.white_degree = white_degree
        self._potentials: dict[str, int] = {}

    def whites(self) -> list[int]:
        return [v for v, c in enumerate(self.color) if c is Color.WHITE]

    def blues(self) -> list[int]:
        return [v for v, c in enumerate(self.color) if c is Color.BLUE]

    def reds(self) -> list[int]:
        return [v for v, c in enumerate(self.color) if c is Color.RED]

    def white_neighbors(self, v: int) -> list[int]:
        color = self.color
        return [u for u in self.graph.neighbors(v) if color[u] is Color.WHITE]

    def blue_degree(self, v: int) -> int:
        """Number of residual edges from v to blue vertices (nonzero only for whites)."""
        if self.color[v] is not Color.WHITE:
            return 0
        return self.graph.degree(v) - self.white_degree[v]

    def residual_edges(self) -> list[tuple[int, int]]:
        color = self.color
        return [(u, v) for u, v in self.graph.edges()
                if color[u] is Color.WHITE or color[v] is Color.WHITE]

    def is_dominating(self) -> bool:
        return all(c is Color.RED for c in self.color)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ResidualGraph) and self.graph == other.graph
                and self.chosen == other.chosen)

    def __hash__(self) -> int:
        return hash((self.graph, self.chosen))

    def __repr__(self) -> str:
        counts = Counter(c.name.lower() for c in self.color)
        return f"ResidualGraph(|D|={len(self.chosen)}, {dict(counts)})"


def _check_ids(g: Graph, vertices: Iterable[int], what: str) -> None:
    for v in vertices:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise ValueError(f"{what}: vertex id {v!r} out of range for n={g.n}")


def build_residual(g: Graph, chosen: Iterable[int]) -> ResidualGraph:
    chosen = frozenset(chosen)
    _check_ids(g, chosen, "chosen set")
    adj = g.adjacency
    dominated = [False] * g.n
    for v in chosen:
        dominated[v] = True
        for u in adj[v]:
            dominated[u] = True
    white_degree = tuple(sum(1 for u in a if not dominated[u]) for a in adj)
    color = tuple(
        Color.WHITE if not dom else (Color.BLUE if wd else Color.RED)
        for dom, wd in zip(dominated, white_degree)
    )
    return ResidualGraph(g, chosen, color, white_degree)


def potential(r: ResidualGraph, scheme: WeightScheme) -> int:
    """Weighted count of white and blue vertices; zero exactly when D dominates."""
    cached = r._potentials.get(scheme.id)
    if cached is not None:
        return cached
    g = r.graph
    if g.n and g.min_degree < scheme.degree_floor:
        raise SchemeMismatch(
            f"scheme {scheme.id} needs min degree >= {scheme.degree_floor}, graph has {g.min_degree}")
    total = 0
    ww, top, bw = scheme.white_weight, scheme.degree_floor, scheme.blue_weights
    for c, wd in zip(r.color, r.white_degree):
        if c is Color.WHITE:
            total += ww
        elif c is Color.BLUE:
            total += bw[wd if wd < top else top]
    r._potentials[scheme.id] = total
    return total


def extend(r: ResidualGraph, added: Iterable[int]) -> ResidualGraph:
    added = frozenset(added)
    if not added:
        raise ValueError("cannot extend by an empty set")
    _check_ids(r.graph, added, "extension set")
    overlap = added & r.chosen
    if overlap:
        raise ValueError(f"extension set intersects D at {sorted(overlap)}")
    nxt = build_residual(r.graph, r.chosen | added)
    for v, (before, after) in enumerate(zip(r.color, nxt.color)):
        if after < before:
            raise AssertionError(f"vertex {v} recolored {before.name} -> {after.name}")
    return nxt


def score_and_extend(r: ResidualGraph, added: Iterable[int],
                     scheme: WeightScheme) -> tuple[int, ResidualGraph]:
    nxt = extend(r, added)
    return potential(r, scheme) - potential(nxt, scheme), nxt


def score_move(r: ResidualGraph, added: Iterable[int], scheme: WeightScheme) -> int:
    """Potential drop s(A) caused by adding ``added`` to D (0 for the empty set)."""
    added = frozenset(added)
    if not added:
        _check_ids(r.graph, added, "extension set")
        return 0
    return score_and_extend(r, added, scheme)[0]


# -- blue classes ------------------------------------------------------------

@dataclass(frozen=True)
class BlueProfile:
    class_members: dict[int, frozenset[int]]
    special_set: frozenset[int]

    def members(self, cls: int) -> frozenset[int]:
        return self.class_members.get(cls, frozenset())


def blue_profile(r: ResidualGraph, scheme: WeightScheme = D5) -> BlueProfile:
    """Blue vertices by capped white-degree class, plus the special B2 vertices.

    A B2 vertex is special when one of its two white neighbors has no white
    neighbor of its own.
    """
    classes: dict[int, set[int]] = {k: set() for k in scheme.blue_weights}
    special: set[int] = set()
    wd = r.white_degree
    for v in r.blues():
        cls = scheme.blue_class(wd[v])
        classes[cls].add(v)
        if wd[v] == 2 and any(wd[u] == 0 for u in r.white_neighbors(v)):
            special.add(v)
    return BlueProfile({k: frozenset(s) for k, s in classes.items()}, frozenset(special))


# -- white components --------------------------------------------------------

@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]
    kind: str  # "path" | "cycle" | "general"

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def label(self) -> str:
        if self.kind == "path":
            return f"P{len(self)}"
        if self.kind == "cycle":
            return f"C{len(self)}"
        return f"G{len(self)}"


@dataclass(frozen=True)
class WhiteComponentReport:
    components: tuple[Component, ...]
    w_class: dict[int, str]
    counts: Counter = field(default_factory=Counter)

    @property
    def p1(self) -> int:
        return self.counts["P1"]

    @property
    def p2(self) -> int:
        return self.counts["P2"]

    @property
    def c4(self) -> int:
        return self.counts["C4"]

    @property
    def c5(self) -> int:
        return self.counts["C5"]

    @property
    def c7(self) -> int:
        return self.counts["C7"]

    @property
    def c10(self) -> int:
        return self.counts["C10"]

    def other_counts(self) -> dict[str, int]:
        """Counters for every component label outside the six standard ones."""
        std = {"P1", "P2", "C4", "C5", "C7", "C10"}
        return {k: v for k, v in sorted(self.counts.items()) if k not in std}

    def component_of(self) -> dict[int, Component]:
        return {v: c for c in self.components for v in c.vertices}


def _walk(start: int, nbrs: dict[int, list[int]], first: int) -> list[int]:
    seq = [start]
    prev, cur = start, first
    while cur != start:
        seq.append(cur)
        nxt = [u for u in nbrs[cur] if u != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
    return seq


def white_components(r: ResidualGraph) -> WhiteComponentReport:
    """Components of the subgraph induced by white vertices.

    Paths are listed from their smaller-id endpoint; cycles from their
    smallest id toward its smaller-id neighbor; other components sorted.
    """
    whites = r.whites()
    wnbrs = {v: r.white_neighbors(v) for v in whites}
    seen: set[int] = set()
    comps: list[Component] = []
    for s in whites:
        if s in seen:
            continue
        members = [s]
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for u in wnbrs[v]:
                if u not in seen:
                    seen.add(u)
                    members.append(u)
                    stack.append(u)
        members.sort()
        degs = [len(wnbrs[v]) for v in members]
        if max(degs) > 2:
            comps.append(Component(tuple(members), "general"))
        elif len(members) == 1:
            comps.append(Component((s,), "path"))
        elif min(degs) == 2:
            start = members[0]
            comps.append(Component(tuple(_walk(start, wnbrs, min(wnbrs[start]))), "cycle"))
        else:
            start = min(v for v in members if len(wnbrs[v]) == 1)
            comps.append(Component(tuple(_walk(start, wnbrs, wnbrs[start][0])), "path"))
    w_class = {v: ("W3plus" if len(wnbrs[v]) >= 3 else f"W{len(wnbrs[v])}") for v in whites}
    counts = Counter(c.label for c in comps)
    return WhiteComponentReport(tuple(comps), w_class, counts)
