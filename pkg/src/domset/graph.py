"""Immutable simple undirected graphs and the edge-list text format."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, TextIO, Union


class GraphFormatError(ValueError):
    """Malformed graph text; ``line`` is the 1-based offending line, if known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Neighbor lists are sorted tuples; the object is never mutated after
    construction, so it can be shared freely.
    """

    __slots__ = ("_adj", "_m", "_nbr_sets", "_min_degree")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            m += 1
        self._adj = tuple(tuple(sorted(s)) for s in nbrs)
        self._nbr_sets = tuple(frozenset(s) for s in nbrs)
        self._m = m
        self._min_degree = min((len(a) for a in self._adj), default=0)

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    @property
    def min_degree(self) -> int:
        """Minimum degree; 0 for the empty graph."""
        return self._min_degree

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def closed_neighborhood(self, vertices: Iterable[int]) -> set[int]:
        out: set[int] = set()
        for v in vertices:
            out.add(v)
            out.update(self._adj[v])
        return out

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, a in enumerate(self._adj) for v in a if u < v]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeStats:
    min_degree: int
    max_degree: int


def degree_stats(g: Graph) -> DegreeStats:
    if g.n == 0:
        raise ValueError("degree statistics undefined for the empty graph")
    degs = g.degrees()
    return DegreeStats(min(degs), max(degs))


def parse_graph(text: Union[str, TextIO]) -> Graph:
    """Parse the ``n m`` header + ``u v`` edge-list format.

    Comment lines start with ``#``. Each edge must satisfy ``0 <= u < v < n``.
    """
    if not isinstance(text, str):
        text = text.read()
    header: Optional[tuple[int, int]] = None
    n = m = 0
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.rstrip("\r")
        if line.startswith("#") or not line.strip():
            continue
        parts = line.split(" ")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            what = "header" if header is None else "edge line"
            raise GraphFormatError(f"malformed {what} {line!r}", lineno)
        a, b = int(parts[0]), int(parts[1])
        if header is None:
            header = (a, b)
            n, m = a, b
            continue
        if len(edges) == m:
            raise GraphFormatError(f"more than {m} edge lines", lineno)
        if a >= n or b >= n:
            raise GraphFormatError(f"vertex id out of range in {line!r}", lineno)
        if a == b:
            raise GraphFormatError(f"self-loop {line!r}", lineno)
        if a > b:
            raise GraphFormatError(f"edge must be written as u < v, got {line!r}", lineno)
        if (a, b) in seen:
            raise GraphFormatError(f"duplicate edge {line!r}", lineno)
        seen.add((a, b))
        edges.append((a, b))
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh)


def write_graph(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_graph(g))


@dataclass(frozen=True)
class ClassicalBounds:
    arnautov: Fraction
    alon: float
    theorem_bound: Optional[int]


def classical_bounds(n: int, delta: int) -> ClassicalBounds:
    """Arnautov/Payan harmonic bound, the Alon log bound, and the constructive bound.

    The constructive bound is floor(n/3) for min degree >= 5 and
    floor(4n/11) for min degree 4; below that there is none.
    """
    if n < 1 or delta < 0:
        raise ValueError("need n >= 1 and delta >= 0")
    harmonic = sum((Fraction(1, j) for j in range(1, delta + 2)), Fraction(0))
    arnautov = Fraction(n, delta + 1) * harmonic
    alon = n * (1 + math.log(delta + 1)) / (delta + 1)
    if delta >= 5:
        bound: Optional[int] = n // 3
    elif delta == 4:
        bound = 4 * n // 11
    else:
        bound = None
    return ClassicalBounds(arnautov, alon, bound)
