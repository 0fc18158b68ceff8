"""Seeded instance batches and per-instance audits shared by fuzz and the test suite."""

from __future__ import annotations

import hashlib
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .discharge import assign_charges, verify_terminal
from .generators import GeneratorSpec, generate
from .graph import Graph
from .oracle import is_dominating
from .residual import SCHEMES, Color, WeightScheme
from .rules import ProofViolation, SolveResult, extend_independent_set, solve


def instance_spec(seed: int, index: int, d: int, n_lo: int, n_hi: int,
                  model: Optional[str] = None) -> GeneratorSpec:
    """The ``index``-th instance of a batch: alternating models unless one is forced."""
    rng = random.Random(seed * 1_000_003 + index)
    n = rng.randint(max(n_lo, d + 1), n_hi)
    if model is None:
        model = "regular" if index % 2 == 0 else "min_degree"
    if model == "regular" and (n * d) % 2:
        n = n + 1 if n < n_hi else n - 1
    return GeneratorSpec(model, n, d, rng.getrandbits(64))


def random_maximal_independent_set(g: Graph, seed: int) -> list[int]:
    """Greedy maximal independent set over a seeded random vertex order."""
    order = list(range(g.n))
    random.Random(seed).shuffle(order)
    taken: set[int] = set()
    for v in order:
        if not any(u in taken for u in g.neighbors(v)):
            taken.add(v)
    return sorted(taken)


@dataclass
class Audit:
    spec: GeneratorSpec
    scheme: str
    n: int
    size: int = 0
    bound: int = 0
    steps: int = 0
    failures: list[str] = field(default_factory=list)
    terminal_checked: bool = False
    trace_digest: str = ""
    violation: Optional[str] = None

    @property
    def ok(self) -> bool:
        return not self.failures and self.violation is None


def audit_trace(result: SolveResult, scheme: WeightScheme, start_potential: int) -> list[str]:
    problems = []
    expected = start_potential
    for t in result.trace:
        if t.s < scheme.threshold * len(t.A) or t.required != scheme.threshold * len(t.A):
            problems.append(f"step {t.step}: s={t.s} < {scheme.threshold}*{len(t.A)}")
        if t.f_before != expected or t.f_before - t.f_after != t.s or t.f_after >= t.f_before:
            problems.append(f"step {t.step}: potentials inconsistent")
        expected = t.f_after
    if expected != 0:
        problems.append(f"trace ends at potential {expected}")
    return problems


def audit_terminal(result: SolveResult, scheme: WeightScheme) -> list[str]:
    """Discharging certificate on the state where TERMINAL fired, if any."""
    r = result.terminal_state
    if r is None:
        return []
    problems = []
    report = verify_terminal(r, scheme)
    if not report.passed:
        problems.append(f"terminal report failed: {report.to_json()}")
        return problems
    charges = assign_charges(r, scheme)
    if any(charges.charge[v] for v, c in enumerate(r.color) if c is Color.BLUE):
        problems.append("blue vertex kept charge after redistribution")
    if sum(c.charge_total for c in report.components) != report.potential_scaled:
        problems.append("component charges do not sum to the scaled potential")
    return problems


def audit_solve(spec: GeneratorSpec, scheme_id: str) -> Audit:
    scheme = SCHEMES[scheme_id]
    g = generate(spec)
    audit = Audit(spec, scheme_id, g.n)
    try:
        result = solve(g, scheme)
    except ProofViolation as exc:
        audit.violation = exc.to_json()
        return audit
    audit.size = len(result.dominating_set)
    audit.bound = scheme.bound(g.n)
    audit.steps = len(result.trace)
    audit.trace_digest = hashlib.sha256(result.trace_jsonl().encode()).hexdigest()
    if not is_dominating(g, result.dominating_set):
        audit.failures.append("output does not dominate")
    if audit.size > audit.bound:
        audit.failures.append(f"|D| = {audit.size} > bound {audit.bound}")
    audit.failures += audit_trace(result, scheme, scheme.white_weight * g.n)
    audit.failures += audit_terminal(result, scheme)
    audit.terminal_checked = result.terminal_state is not None
    return audit


def audit_corollary(spec: GeneratorSpec, set_seed: int) -> Audit:
    g = generate(spec)
    s_set = random_maximal_independent_set(g, set_seed)
    audit = Audit(spec, "d5", g.n)
    try:
        result = extend_independent_set(g, s_set)
    except ProofViolation as exc:
        audit.violation = exc.to_json()
        return audit
    audit.size = len(result.dominating_set)
    audit.bound = g.n // 3
    audit.steps = len(result.trace)
    audit.trace_digest = hashlib.sha256(result.trace_jsonl().encode()).hexdigest()
    if not set(s_set) <= set(result.dominating_set):
        audit.failures.append("D does not contain S")
    if not is_dominating(g, result.dominating_set):
        audit.failures.append("output does not dominate")
    audit.failures += [f"|S| = {len(s_set)}; {f}" for f in result.findings]
    return audit


def _run_one(args: tuple[int, int, str, int, int]) -> Audit:
    seed, index, scheme_id, n_lo, n_hi = args
    d = SCHEMES[scheme_id].degree_floor
    return audit_solve(instance_spec(seed, index, d, n_lo, n_hi), scheme_id)


def fuzz(scheme_id: str, count: int, n_lo: int, n_hi: int, seed: int,
         jobs: int = 1) -> list[Audit]:
    """Audit ``count`` seeded instances; order of results is independent of ``jobs``."""
    tasks = [(seed, i, scheme_id, n_lo, n_hi) for i in range(count)]
    if jobs <= 1:
        return [_run_one(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, tasks, chunksize=16))
