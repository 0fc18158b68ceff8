"""Prioritized move system: find A with s(A) >= threshold*|A|, apply, repeat.

Each rule is only guaranteed to reach the threshold once every rule before
it has stopped matching, so the order below is load-bearing.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .graph import Graph, serialize_graph
from .residual import (
    D5,
    Color,
    Component,
    ResidualGraph,
    SchemeMismatch,
    WeightScheme,
    WhiteComponentReport,
    build_residual,
    potential,
    score_and_extend,
    white_components,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Rule:
    id: str
    claim_ref: str
    arity_kind: str  # single-vertex | component | gadget | terminal


RULES: dict[str, Rule] = {r.id: r for r in (
    Rule("W_HIGH", "white vertex of high white-degree", "single-vertex"),
    Rule("B_HIGH", "blue vertex of high white-degree", "single-vertex"),
    Rule("W_MID", "white vertex, one degree tier down", "single-vertex"),
    Rule("B_MID", "blue vertex, one degree tier down", "single-vertex"),
    Rule("PATH3", "white path on three or more vertices", "component"),
    Rule("CYC0", "white cycle, length 0 mod 3", "component"),
    Rule("CYC2", "long white cycle, length 2 mod 3", "component"),
    Rule("CYC1", "long white cycle, length 1 mod 3", "component"),
    Rule("CLAIM_C", "B3 next to W0", "single-vertex"),
    Rule("CLAIM_D", "special over two W0", "single-vertex"),
    Rule("CLAIM_E", "special next to C4 or C7", "gadget"),
    Rule("CLAIM_F", "P2 with two specials", "gadget"),
    Rule("TERMINAL", "discharging: minimum dominating set of the white subgraph", "terminal"),
)}
STRUCTURAL_RULES = tuple(r for r in RULES if r != "TERMINAL")


class ProofViolation(AssertionError):
    """A selected move scored below the threshold, or an end-state check failed.

    Carries everything needed to replay the offending state.
    """

    def __init__(self, message: str, graph: Graph, chosen: Iterable[int],
                 added: Iterable[int] = (), rule: Optional[str] = None,
                 scheme: Optional[WeightScheme] = None, score: Optional[int] = None,
                 required: Optional[int] = None):
        super().__init__(message)
        self.dump = {
            "error": "proof violation",
            "message": message,
            "rule": rule,
            "scheme": scheme.id if scheme else None,
            "D": sorted(chosen),
            "A": sorted(added),
            "s": score,
            "required": required,
            "graph": serialize_graph(graph),
        }

    def to_json(self) -> str:
        return json.dumps(self.dump, sort_keys=True)


@dataclass(frozen=True)
class Move:
    rule_id: str
    A: tuple[int, ...]
    s_realized: int
    s_required: int
    after: Optional[ResidualGraph] = field(default=None, compare=False, repr=False)


# -- detection ---------------------------------------------------------------

class _State:
    """Lazily computed views of one residual graph shared by the detectors."""

    def __init__(self, r: ResidualGraph, scheme: WeightScheme):
        self.r = r
        self.scheme = scheme
        self._report: Optional[WhiteComponentReport] = None
        self._wnbrs: dict[int, list[int]] = {}

    @property
    def report(self) -> WhiteComponentReport:
        if self._report is None:
            self._report = white_components(self.r)
        return self._report

    def wn(self, v: int) -> list[int]:
        out = self._wnbrs.get(v)
        if out is None:
            out = self._wnbrs[v] = self.r.white_neighbors(v)
        return out

    def vertices(self, color: Color, pred: Callable[[int], bool]) -> Iterator[int]:
        wd = self.r.white_degree
        for v, c in enumerate(self.r.color):
            if c is color and pred(wd[v]):
                yield v

    def is_w0(self, v: int) -> bool:
        return self.r.color[v] is Color.WHITE and self.r.white_degree[v] == 0

    def is_special(self, v: int) -> bool:
        return (self.r.color[v] is Color.BLUE and self.r.white_degree[v] == 2
                and any(self.is_w0(u) for u in self.wn(v)))

    def specials(self) -> Iterator[int]:
        for v in self.vertices(Color.BLUE, lambda d: d == 2):
            if any(self.is_w0(u) for u in self.wn(v)):
                yield v


Candidate = tuple[int, tuple[int, ...]]  # (witness vertex, sorted A)
Detector = Callable[[_State], Optional[Candidate]]


def _first_vertex(color: Color, pred: Callable[[int], bool]) -> Detector:
    def detect(st: _State) -> Optional[Candidate]:
        v = next(st.vertices(color, pred), None)
        return None if v is None else (v, (v,))
    return detect


def _tiered(*detectors: Detector) -> Detector:
    def detect(st: _State) -> Optional[Candidate]:
        for d in detectors:
            found = d(st)
            if found is not None:
                return found
        return None
    return detect


def cycle_cover(seq: Sequence[int]) -> tuple[int, ...]:
    """{v3, v6, ..., v_{3*floor(L/3)}} plus v_L: dominates the cycle (or path) v1..vL."""
    return tuple(sorted(set(seq[2::3]) | {seq[-1]}))


def terminal_set(comp: Component) -> tuple[int, ...]:
    seq = comp.vertices
    if comp.kind == "path" and len(seq) <= 2:
        return (seq[0],)
    if comp.kind == "cycle":
        return cycle_cover(seq)
    raise ValueError(f"no terminal set for component {comp.label}")


def _path3(st: _State) -> Optional[Candidate]:
    for c in st.report.components:
        if c.kind == "path" and len(c) >= 3:
            return (min(c.vertices), (c.vertices[1],))
    return None


def _cycles(residue: int, min_len: Callable[[WeightScheme], int]) -> Detector:
    def detect(st: _State) -> Optional[Candidate]:
        lo = min_len(st.scheme)
        for c in st.report.components:
            if c.kind == "cycle" and len(c) % 3 == residue and len(c) >= lo:
                return (c.vertices[0], cycle_cover(c.vertices))
        return None
    return detect


def _claim_c(st: _State) -> Optional[Candidate]:
    for v in st.vertices(Color.BLUE, lambda d: d == 3):
        if any(st.is_w0(u) for u in st.wn(v)):
            return (v, (v,))
    return None


def _claim_d(st: _State) -> Optional[Candidate]:
    for v in st.specials():
        if all(st.is_w0(u) for u in st.wn(v)):
            return (v, (v,))
    return None


def _claim_e(st: _State) -> Optional[Candidate]:
    comp_of = None
    for v in st.specials():
        if comp_of is None:
            comp_of = st.report.component_of()
        for u1 in st.wn(v):
            c = comp_of[u1]
            if c.kind == "cycle" and len(c) in (4, 7):
                seq, i = c.vertices, c.vertices.index(u1)
                picks = [seq[(i + 2) % len(seq)]]
                if len(seq) == 7:
                    picks.append(seq[(i + 5) % 7])
                return (v, tuple(sorted([v, *picks])))
    return None


def _claim_f(st: _State) -> Optional[Candidate]:
    """Two adjacent W1 whites each with a special neighbor.

    The potential drop of 2*threshold needs six distinct vertices, so the two
    specials must hang off different W0 vertices.
    """
    best: Optional[Candidate] = None
    for c in st.report.components:
        if c.kind != "path" or len(c) != 2:
            continue
        a, b = sorted(c.vertices)
        sa = [u for u in st.r.graph.neighbors(a) if st.is_special(u)]
        sb = [u for u in st.r.graph.neighbors(b) if st.is_special(u)]
        for u1 in sa:
            x1 = next(x for x in st.wn(u1) if st.is_w0(x))
            for u2 in sb:
                x2 = next(x for x in st.wn(u2) if st.is_w0(x))
                if x1 != x2:
                    cand = (a, tuple(sorted((u1, u2))))
                    if best is None or cand < best:
                        best = cand
        if best is not None:
            return best
    return None


def _priority(scheme: WeightScheme) -> list[tuple[str, Detector]]:
    f = scheme.degree_floor
    stages: list[tuple[str, Detector]] = [
        ("W_HIGH", _tiered(_first_vertex(Color.WHITE, lambda d: d >= f + 1),
                           _first_vertex(Color.WHITE, lambda d: d == f))),
        ("B_HIGH", _first_vertex(Color.BLUE, lambda d: d >= f + 1)),
    ]
    for k in range(f - 1, 2, -1):
        stages.append(("W_MID", _first_vertex(Color.WHITE, lambda d, k=k: d == k)))
        stages.append(("B_MID", _first_vertex(Color.BLUE, lambda d, k=k: d == k + 1)))
    stages += [
        ("PATH3", _path3),
        ("CYC0", _cycles(0, lambda s: 3)),
        ("CYC2", _cycles(2, lambda s: s.cyc2_min)),
        ("CYC1", _cycles(1, lambda s: s.cyc1_min)),
        ("CLAIM_C", _claim_c),
        ("CLAIM_D", _claim_d),
        ("CLAIM_E", _claim_e),
        ("CLAIM_F", _claim_f),
    ]
    return stages


_PRIORITY_CACHE: dict[str, list[tuple[str, Detector]]] = {}


def priority(scheme: WeightScheme) -> list[tuple[str, Detector]]:
    if scheme.id not in _PRIORITY_CACHE:
        _PRIORITY_CACHE[scheme.id] = _priority(scheme)
    return _PRIORITY_CACHE[scheme.id]


def rule_order(scheme: WeightScheme) -> list[str]:
    return [rid for rid, _ in priority(scheme)] + ["TERMINAL"]


def matching_rules(r: ResidualGraph, scheme: WeightScheme) -> dict[str, tuple[int, ...]]:
    """Every non-terminal rule that matches r, mapped to the set it would pick.

    A rule id appearing at several tiers reports its first matching tier.
    """
    st = _State(r, scheme)
    out: dict[str, tuple[int, ...]] = {}
    for rid, detect in priority(scheme):
        if rid in out:
            continue
        found = detect(st)
        if found is not None:
            out[rid] = found[1]
    return out


def terminal_move_set(r: ResidualGraph) -> tuple[int, ...]:
    report = white_components(r)
    return tuple(sorted(v for c in report.components for v in terminal_set(c)))


def find_move(r: ResidualGraph, scheme: WeightScheme) -> Optional[Move]:
    """Next move of the constructive proof, or None once D dominates."""
    pot = potential(r, scheme)
    if pot == 0:
        return None
    st = _State(r, scheme)
    rule, chosen = "TERMINAL", None
    for rid, detect in priority(scheme):
        found = detect(st)
        if found is not None:
            rule, chosen = rid, found[1]
            break
    if chosen is None:
        try:
            chosen = tuple(sorted(v for c in st.report.components for v in terminal_set(c)))
        except ValueError as exc:
            raise ProofViolation(f"no rule matches but {exc}", r.graph, r.chosen,
                                 rule="TERMINAL", scheme=scheme) from None
    score, after = score_and_extend(r, chosen, scheme)
    required = scheme.threshold * len(chosen)
    if score < required or (rule == "TERMINAL" and score != pot):
        raise ProofViolation(
            f"{rule} move {list(chosen)} scored {score} < required {required}"
            if score < required else f"TERMINAL left potential {pot - score}",
            r.graph, r.chosen, chosen, rule, scheme, score, required)
    return Move(rule, chosen, score, required, after)


# -- solving -----------------------------------------------------------------

@dataclass(frozen=True)
class TraceStep:
    step: int
    rule: str
    A: tuple[int, ...]
    f_before: int
    f_after: int
    s: int
    required: int

    def to_json(self) -> str:
        return json.dumps({"step": self.step, "rule": self.rule, "A": list(self.A),
                           "f_before": self.f_before, "f_after": self.f_after,
                           "s": self.s, "required": self.required},
                          separators=(",", ":"))


@dataclass
class SolveResult:
    dominating_set: tuple[int, ...]
    trace: list[TraceStep]
    bound: int
    scheme: str
    initial: tuple[int, ...] = ()
    findings: list[str] = field(default_factory=list)
    terminal_state: Optional[ResidualGraph] = field(default=None, repr=False, compare=False)

    def trace_lines(self) -> list[str]:
        lines = [t.to_json() for t in self.trace]
        lines.append(json.dumps({"done": True, "D": list(self.dominating_set), "bound": self.bound},
                                separators=(",", ":")))
        return lines

    def trace_jsonl(self) -> str:
        return "\n".join(self.trace_lines()) + "\n"


def solve(g: Graph, scheme: WeightScheme = D5, initial: Iterable[int] = ()) -> SolveResult:
    """Run the move system from D0 = ``initial`` until D dominates ``g``.

    From D0 = {} every step drops the potential by at least threshold*|A|,
    so |D| <= white_weight*n/threshold at the end.
    """
    if g.n and g.min_degree < scheme.degree_floor:
        raise SchemeMismatch(
            f"scheme {scheme.id} needs min degree >= {scheme.degree_floor}, graph has {g.min_degree}")
    initial = tuple(sorted(set(initial)))
    r = build_residual(g, initial)
    trace: list[TraceStep] = []
    terminal_state = None
    while True:
        move = find_move(r, scheme)
        if move is None:
            break
        f_before = potential(r, scheme)
        assert move.after is not None
        f_after = potential(move.after, scheme)
        if move.rule_id == "TERMINAL":
            terminal_state = r
        trace.append(TraceStep(len(trace) + 1, move.rule_id, move.A, f_before, f_after,
                               move.s_realized, move.s_required))
        log.debug("step %d %s A=%s f=%d->%d", len(trace), move.rule_id, list(move.A), f_before, f_after)
        r = move.after
    dom = tuple(sorted(r.chosen))
    result = SolveResult(dom, trace, scheme.bound(g.n), scheme.id, initial,
                         terminal_state=terminal_state)
    if not r.is_dominating():
        raise ProofViolation("solver stopped without dominating", g, r.chosen, scheme=scheme)
    if not initial and len(dom) > result.bound:
        raise ProofViolation(f"|D| = {len(dom)} exceeds bound {result.bound}", g, dom, scheme=scheme)
    return result


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    return not any(g.has_edge(u, v) for u in vs for v in g.neighbors(u) if v in vs)


def extend_independent_set(g: Graph, independent: Iterable[int]) -> SolveResult:
    """Grow an independent set of a 5-regular graph into a dominating set.

    A result larger than floor(n/3) is recorded in ``findings`` rather than
    raised, since the guarantee for arbitrary starting sets is checked here
    empirically.
    """
    s_set = sorted(set(independent))
    if any(not (0 <= v < g.n) for v in s_set):
        raise ValueError("independent set has out-of-range ids")
    if any(d != 5 for d in g.degrees()):
        raise ValueError("graph is not 5-regular")
    if not is_independent(g, s_set):
        raise ValueError("initial set is not independent")
    result = solve(g, D5, s_set)
    limit = g.n // 3
    result.bound = limit
    if len(result.dominating_set) > limit:
        result.findings.append(
            f"corollary violation: |D| = {len(result.dominating_set)} > floor(n/3) = {limit}")
    return result
