import pytest
from hypothesis import given, settings, strategies as st

from domset.generators import GADGETS, named
from domset.residual import (
    D4,
    D5,
    Color,
    SchemeMismatch,
    build_residual,
    blue_profile,
    extend,
    potential,
    scheme_for,
    score_move,
    white_components,
)

from conftest import (
    A,
    B,
    D4_WEIGHTS,
    D5_WEIGHTS,
    definitional_colors,
    definitional_potential,
    graph_and_set,
)

NAMES = {Color.WHITE: "white", Color.BLUE: "blue", Color.RED: "red"}


def test_k55_one_vertex(k55):
    r = build_residual(k55, [A[0]])
    assert r.color[A[0]] is Color.RED
    assert all(r.color[b] is Color.BLUE and r.white_degree[b] == 4 for b in B)
    assert all(r.color[a] is Color.WHITE and r.white_degree[a] == 0 for a in A[1:])


def test_everything_chosen_is_red(k6):
    r = build_residual(k6, range(6))
    assert set(r.color) == {Color.RED}
    assert r.is_dominating()


def test_pendant_k6_residual(pendant_k6):
    r = build_residual(pendant_k6, [0])
    assert r.color[0] is Color.RED
    assert r.color[6] is Color.WHITE and r.white_degree[6] == 0
    assert [r.white_degree[b] for b in range(1, 6)] == [1] * 5
    assert r.blues() == [1, 2, 3, 4, 5]


def test_build_residual_rejects_bad_ids(k6):
    with pytest.raises(ValueError):
        build_residual(k6, [6])


@settings(max_examples=80, deadline=None)
@given(graph_and_set(5))
def test_colors_match_definitions(case):
    g, chosen = case
    r = build_residual(g, chosen)
    expected = definitional_colors(g, chosen)
    assert {v: NAMES[c] for v, c in enumerate(r.color)} == expected
    for v in range(g.n):
        wd = sum(1 for u in g.neighbors(v) if expected[u] == "white")
        if expected[v] != "red":
            assert r.white_degree[v] == wd


@settings(max_examples=80, deadline=None)
@given(graph_and_set(5))
def test_potential_matches_definition_d5(case):
    g, chosen = case
    assert potential(build_residual(g, chosen), D5) == definitional_potential(g, chosen, D5_WEIGHTS)


@settings(max_examples=80, deadline=None)
@given(graph_and_set(4))
def test_potential_matches_definition_d4(case):
    g, chosen = case
    assert potential(build_residual(g, chosen), D4) == definitional_potential(g, chosen, D4_WEIGHTS)


@pytest.mark.parametrize("chosen, expected", [([], 350), ([0], 245)])
def test_k55_potential(k55, chosen, expected):
    assert potential(build_residual(k55, chosen), D5) == expected


def test_pendant_potentials(pendant_k6, pendant_k5):
    assert potential(build_residual(pendant_k6, [0]), D5) == 105
    assert potential(build_residual(pendant_k5, [0]), D4) == 44


def test_potential_refuses_low_degree(pendant_k5):
    with pytest.raises(SchemeMismatch):
        potential(build_residual(pendant_k5, []), D5)


def test_scheme_for():
    assert scheme_for(named("k6")) is D5
    assert scheme_for(named("pendant_k5")) is D4
    with pytest.raises(SchemeMismatch):
        scheme_for(named("gadget_i").__class__(3, [(0, 1), (1, 2)]))


def test_bounds():
    assert D5.bound(10) == 3
    assert D4.bound(6) == 2
    assert D4.bound(11) == 4


# -- extend / score -----------------------------------------------------------

def test_extend_k55_finishes(k55):
    r = extend(build_residual(k55, [0]), [5])
    assert r.is_dominating() and potential(r, D5) == 0


def test_extend_pendant(pendant_k6):
    r = extend(build_residual(pendant_k6, [0]), [6])
    assert set(r.color) == {Color.RED}


def test_extend_errors(k55):
    r = build_residual(k55, [0])
    with pytest.raises(ValueError):
        extend(r, [0])
    with pytest.raises(ValueError):
        extend(r, [])


def test_score_examples(k55):
    assert score_move(build_residual(k55, []), [0], D5) == 105
    assert score_move(build_residual(k55, [0]), [5], D5) == 245
    assert score_move(build_residual(k55, [0]), [], D5) == 0


@settings(max_examples=60, deadline=None)
@given(graph_and_set(5), st.data())
def test_extend_equals_rebuild_and_is_monotone(case, data):
    g, chosen = case
    r = build_residual(g, chosen)
    rest = [v for v in range(g.n) if v not in chosen]
    if not rest:
        return
    added = data.draw(st.sets(st.sampled_from(rest), min_size=1))
    after = extend(r, added)
    assert after == build_residual(g, set(chosen) | added)
    assert all(a >= b for a, b in zip(after.color, r.color))
    assert potential(after, D5) <= potential(r, D5)


@settings(max_examples=60, deadline=None)
@given(graph_and_set(5), st.data())
def test_score_is_additive_over_sequences(case, data):
    g, chosen = case
    rest = [v for v in range(g.n) if v not in chosen]
    if len(rest) < 2:
        return
    a1 = data.draw(st.sets(st.sampled_from(rest), min_size=1, max_size=len(rest) - 1))
    a2 = data.draw(st.sets(st.sampled_from([v for v in rest if v not in a1]), min_size=1))
    r = build_residual(g, chosen)
    two_step = score_move(r, a1, D5) + score_move(extend(r, a1), a2, D5)
    assert two_step == score_move(r, a1 | a2, D5)


# -- blue profile / components -------------------------------------------------

def test_blue_profile_examples(k55, pendant_k6):
    p = blue_profile(build_residual(k55, [0]))
    assert p.members(4) == frozenset(B) and not p.special_set
    p = blue_profile(build_residual(pendant_k6, [0]))
    assert p.members(1) == frozenset(range(1, 6)) and not p.special_set


@pytest.mark.parametrize("name", ["gadget_d", "gadget_j"])
def test_gadget_special(name):
    gad = GADGETS[name]()
    r = build_residual(gad.graph, gad.seed_set)
    prof = blue_profile(r, D5 if name == "gadget_d" else D4)
    assert prof.special_set
    colors = definitional_colors(gad.graph, gad.seed_set)
    for v in prof.special_set:
        whites = [u for u in gad.graph.neighbors(v) if colors[u] == "white"]
        w0 = [u for u in whites
              if not any(colors[x] == "white" for x in gad.graph.neighbors(u))]
        assert len(whites) == 2 and w0


def test_components_k55(k55):
    rep = white_components(build_residual(k55, [0]))
    assert rep.p1 == 4 and len(rep.components) == 4


def test_components_empty(k6):
    rep = white_components(build_residual(k6, range(6)))
    assert rep.components == () and not rep.counts


def test_components_circulant():
    rep = white_components(build_residual(named("circulant_9_12"), [0]))
    assert len(rep.components) == 1
    comp = rep.components[0]
    assert comp.kind == "general" and set(comp.vertices) == {3, 4, 5, 6}


def test_component_sequences_are_canonical():
    gad = GADGETS["gadget_e7"]()
    rep = white_components(build_residual(gad.graph, gad.seed_set))
    assert rep.c7 == 1 and rep.p1 == 1
    cyc = next(c for c in rep.components if c.label == "C7")
    # starts at the smallest id and heads toward its smaller neighbor
    assert cyc.vertices == (1, 2, 3, 4, 5, 6, 7)


@settings(max_examples=60, deadline=None)
@given(graph_and_set(5))
def test_components_partition_whites(case):
    g, chosen = case
    r = build_residual(g, chosen)
    rep = white_components(r)
    seen = [v for c in rep.components for v in c.vertices]
    assert sorted(seen) == r.whites()
    for c in rep.components:
        if c.kind == "path":
            assert all(g.has_edge(u, v) for u, v in zip(c.vertices, c.vertices[1:]))
            assert c.vertices[0] <= c.vertices[-1]
        if c.kind == "cycle":
            assert g.has_edge(c.vertices[0], c.vertices[-1])
            assert c.vertices[0] == min(c.vertices)
