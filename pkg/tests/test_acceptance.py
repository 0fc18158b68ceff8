"""Acceptance criteria 1-7. Each test prints one PASS/FAIL line."""

import hashlib
import time

import pytest

from domset.generators import generate, named
from domset.harness import audit_corollary, audit_solve, instance_spec
from domset.oracle import minimum_dominating_set
from domset.residual import D4, D5, SCHEMES, build_residual, potential
from domset.rules import find_move, solve

from conftest import brute_force_gamma

pytestmark = pytest.mark.acceptance

SEED = 20260101
COUNT = 500
N_RANGE = (10, 80)
ORACLE_COUNT = 200
COROLLARY_COUNT = 100


def report(capsys, number, ok, detail):
    with capsys.disabled():
        print(f"\nCRITERION {number} {'PASS' if ok else 'FAIL'}: {detail}")


def bound_batch(scheme_id):
    d = SCHEMES[scheme_id].degree_floor
    start = time.perf_counter()
    audits = [audit_solve(instance_spec(SEED, i, d, *N_RANGE), scheme_id) for i in range(COUNT)]
    return audits, time.perf_counter() - start


def oracle_spec(i):
    d = 5 if (i // 2) % 2 == 0 else 4
    return instance_spec(SEED + 1, i, d, d + 1, 18), d


def oracle_batch():
    rows = []
    for i in range(ORACLE_COUNT):
        spec, d = oracle_spec(i)
        g = generate(spec)
        res = solve(g, D5 if d == 5 else D4)
        gamma = minimum_dominating_set(g).gamma
        naive = brute_force_gamma(g) if g.n <= 12 else None
        digest = hashlib.sha256(res.trace_jsonl().encode()).hexdigest()
        rows.append((spec, d, g.n, len(res.dominating_set), gamma, naive, digest))
    return rows


def corollary_batch():
    return [audit_corollary(instance_spec(SEED + 2, i, 5, *N_RANGE, model="regular"), i)
            for i in range(COROLLARY_COUNT)]


@pytest.fixture(scope="module")
def d5_batch():
    return bound_batch("d5")


@pytest.fixture(scope="module")
def d4_batch():
    return bound_batch("d4")


@pytest.fixture(scope="module")
def oracle_rows():
    return oracle_batch()


@pytest.fixture(scope="module")
def corollary_audits():
    return corollary_batch()


def _bound_criterion(capsys, number, batch, scheme):
    audits, elapsed = batch
    bad = [a for a in audits if not a.ok]
    worst = max(a.size - a.bound for a in audits)
    ok = not bad and len(audits) == COUNT
    detail = (f"{scheme.id}: {len(audits) - len(bad)}/{len(audits)} instances dominate with "
              f"|D| <= bound and s >= {scheme.threshold}*|A| on every step; "
              f"max |D| - bound = {worst}; {elapsed:.2f}s")
    if number == 1:
        ok = ok and elapsed < 10.0
    report(capsys, number, ok, detail)
    assert not bad, [a.failures or a.violation for a in bad[:3]]
    return elapsed


def test_criterion_1_min_degree_5(capsys, d5_batch):
    elapsed = _bound_criterion(capsys, 1, d5_batch, D5)
    assert elapsed < 10.0


def test_criterion_2_min_degree_4(capsys, d4_batch):
    _bound_criterion(capsys, 2, d4_batch, D4)


def test_criterion_3_oracle(capsys, oracle_rows):
    problems = []
    naive_checked = 0
    for spec, d, n, size, gamma, naive, _ in oracle_rows:
        if gamma > size:
            problems.append((spec, "gamma above solver size"))
        if d == 5 and gamma > n // 3:
            problems.append((spec, "gamma above n/3"))
        if naive is not None:
            naive_checked += 1
            if naive != gamma:
                problems.append((spec, f"oracle {gamma} != enumeration {naive}"))
    ok = not problems and naive_checked > 0
    report(capsys, 3, ok, f"{len(oracle_rows)} instances (n <= 18), "
           f"{naive_checked} cross-checked by enumeration, {len(problems)} mismatches")
    assert ok, problems[:3]


def test_criterion_4_fixture_ledger(capsys):
    checks = {}
    for i in range(COUNT):
        for scheme in (D5, D4):
            g = generate(instance_spec(SEED, i, scheme.degree_floor, *N_RANGE))
            checks.setdefault("f(empty) = white weight * n", True)
            if potential(build_residual(g, []), scheme) != scheme.white_weight * g.n:
                checks["f(empty) = white weight * n"] = False
    k55 = solve(named("k55"), D5)
    checks["k55 trace"] = ([(t.rule, t.s) for t in k55.trace] == [("W_HIGH", 105), ("B_MID", 245)]
                           and len(k55.dominating_set) == 2)
    for name, scheme, value in (("pendant_k6", D5, 105), ("pendant_k5", D4, 44)):
        r = build_residual(named(name), [0])
        m = find_move(r, scheme)
        checks[f"{name} potential and terminal"] = (
            potential(r, scheme) == value and m.rule_id == "TERMINAL" and m.s_realized == value)
    failed = [k for k, v in checks.items() if not v]
    report(capsys, 4, not failed, f"{len(checks)} exact checks, failed: {failed or 'none'}")
    assert not failed


def test_criterion_5_discharging(capsys, d5_batch, d4_batch):
    audits = d5_batch[0] + d4_batch[0]
    certified = sum(a.terminal_checked for a in audits)
    cert_failures = [f for a in audits for f in a.failures if "terminal" in f or "charge" in f]
    ok = not cert_failures and certified > 0
    report(capsys, 5, ok, f"{certified} terminal states certified (per-component charge, blue "
           f"exhaustion, charge sum = scaled potential); {len(cert_failures)} failures")
    assert ok, cert_failures[:3]


def test_criterion_6_corollary(capsys, corollary_audits):
    bad = [a for a in corollary_audits if not a.ok]
    # A maximal independent set already dominates, so D = S and no move is made;
    # every violation is a random S with more than floor(n/3) members.
    oversized_s = [a for a in bad if a.steps == 0]
    detail = (f"{len(corollary_audits) - len(bad)}/{len(corollary_audits)} extensions within "
              f"floor(n/3); {len(bad)} violations, {len(oversized_s)} of them with D = S "
              f"and |S| > floor(n/3)")
    report(capsys, 6, not bad, detail)
    assert not bad, [a.failures[0] for a in bad]


def test_criterion_7_determinism(capsys, d5_batch, d4_batch, oracle_rows, corollary_audits):
    first = ([a.trace_digest for a in d5_batch[0]], [a.trace_digest for a in d4_batch[0]],
             [r[-1] for r in oracle_rows], [a.trace_digest for a in corollary_audits])
    second = ([a.trace_digest for a in bound_batch("d5")[0]],
              [a.trace_digest for a in bound_batch("d4")[0]],
              [r[-1] for r in oracle_batch()],
              [a.trace_digest for a in corollary_batch()])
    same = [x == y for x, y in zip(first, second)]
    ok = all(same)
    report(capsys, 7, ok, f"rerun digests identical per batch (d5, d4, oracle, corollary): {same}")
    assert ok
