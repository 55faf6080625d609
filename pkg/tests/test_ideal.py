import json
from itertools import combinations

import pytest
import sympy
from hypothesis import given

from conftest import small_configs
from veronese.cliques import build_graph, enumerate_maximal_cliques
from veronese.ideal import (
    EXPORT_KINDS,
    alexander_dual_generators,
    binomial_holds,
    dual_to_json,
    export_cas,
    generators_I,
    groebner_pairs,
    groebner_to_json,
    ideal_from_json,
    ideal_to_json,
    is_vertex_cover,
    read_ideal_export,
    read_index_map,
)
from veronese.lattice import Config, enumerate_points
from veronese.sorting import is_sorted_pair


def complement_edges(config):
    g = build_graph(config)
    t = len(g)
    return [(i, j) for i, j in combinations(range(t), 2) if not g.adjacent(i, j)]


def test_worked_example_counts(worked):
    gens = generators_I(worked)
    assert len(gens) == 171
    assert all(sum(g) == 7 for g in gens)
    duals = alexander_dual_generators(worked)
    assert len(duals) == 960
    assert {g.degree for g in duals} == {166}


@given(small_configs())
def test_generators_are_pairwise_incomparable(config):
    gens = generators_I(config)
    assert gens == list(enumerate_points(config))
    for a, b in combinations(gens, 2):
        assert not all(x <= y for x, y in zip(a, b))


@given(small_configs())
def test_groebner_leads_are_the_non_edges(config):
    pairs = groebner_pairs(config)
    t = len(enumerate_points(config))
    g = build_graph(config)
    assert len(pairs) == t * (t - 1) // 2 - g.edge_count()
    assert {p.lead for p in pairs} == set(complement_edges(config))
    pts = enumerate_points(config)
    for p in pairs:
        assert not is_sorted_pair(pts[p.lead[0]], pts[p.lead[1]])
        assert binomial_holds(p, config)


@given(small_configs(max_t=12))
def test_dual_supports_are_the_minimal_vertex_covers(config):
    t = len(enumerate_points(config))
    edges = complement_edges(config)
    covers = set()
    for mask in range(1 << t):
        s = frozenset(i for i in range(t) if mask >> i & 1)
        if is_vertex_cover(s, edges) and not any(
            is_vertex_cover(s - {v}, edges) for v in s
        ):
            covers.add(s)
    supports = {g.support for g in alexander_dual_generators(config)}
    assert supports == covers
    assert {len(s) for s in supports} == {t - config.n}


@pytest.mark.parametrize("config", [Config(3, 2, (1, 1, 2)), Config(3, 2, (2, 2, 2)), Config(3, 3, (1, 2, 3))])
def test_binomials_generate_the_toric_ideal(config):
    pts = enumerate_points(config)
    t = len(pts)
    xs = sympy.symbols(f"x1:{config.n + 1}")
    ts = sympy.symbols(f"T0:{t}")
    mono = [sympy.Mul(*(x ** e for x, e in zip(xs, p))) for p in pts]
    elim = sympy.groebner([T - m for T, m in zip(ts, mono)], *xs, *ts, order="lex")
    toric = [g for g in elim.exprs if not g.free_symbols & set(xs)]
    ours = [ts[p.lead[0]] * ts[p.lead[1]] - ts[p.trail[0]] * ts[p.trail[1]] for p in groebner_pairs(config)]
    g_toric = sympy.groebner(toric, *ts, order="grevlex")
    g_ours = sympy.groebner(ours, *ts, order="grevlex")
    assert set(g_toric.exprs) == set(g_ours.exprs)


def test_ideal_export_round_trips(worked):
    text = export_cas(worked, "ideal")
    assert read_ideal_export(text, worked.n) == generators_I(worked)
    assert read_index_map(text) == dict(enumerate(enumerate_points(worked)))
    config, gens = ideal_from_json(json.loads(json.dumps(ideal_to_json(worked))))
    assert config == worked and gens == generators_I(worked)


def test_groebner_export_lists_lead_first():
    config = Config(3, 2, (1, 1, 2))
    text = export_cas(config, "groebner")
    assert "R = QQ[T_0..T_3];" in text
    assert "G = {T_0*T_3 - T_1*T_2};" in text
    assert groebner_to_json(config) == [{"lead": [0, 3], "trail": [1, 2]}]


def test_dual_export_lists_every_generator():
    config = Config(3, 2, (1, 1, 2))
    text = export_cas(config, "dual")
    assert text.count("T_") - 2 == sum(len(s) for s in dual_to_json(config))
    assert len(dual_to_json(config)) == len(enumerate_maximal_cliques(config))


def test_unknown_export_kind(worked):
    assert EXPORT_KINDS == ("ideal", "groebner", "dual")
    with pytest.raises(ValueError):
        export_cas(worked, "hilbert")
