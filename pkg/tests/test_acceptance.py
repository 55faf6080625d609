"""Acceptance criteria.  Each test prints one PASS/FAIL line before asserting.

The sweep family is n in {3, 4, 5}, d <= 8, t <= 400 (2630 configs); it is run
once per session and shared by criteria 3 to 9.
"""

import time
from collections import Counter

import pytest

from veronese.cliques import build_class, clique_from_signature, relative_signature, root
from veronese.invariants import a_invariant, bound_terms, count_G, count_H, count_t, multiplicity, regularity
from veronese.lattice import Config
from veronese.sweep import clear_caches, configs, run_sweep

TABLE_ROWS = [
    ((2, 4, 3, 1), (1, 2, 3, 4)), ((2, 4, 1, 3), (1, 2, 4, 3)), ((2, 1, 4, 3), (1, 4, 2, 3)),
    ((4, 2, 3, 1), (2, 1, 3, 4)), ((4, 2, 1, 3), (2, 1, 4, 3)), ((4, 3, 2, 1), (2, 3, 1, 4)),
    ((4, 3, 1, 2), (2, 3, 4, 1)), ((4, 1, 2, 3), (2, 4, 1, 3)), ((4, 1, 3, 2), (2, 4, 3, 1)),
    ((1, 2, 4, 3), (4, 1, 2, 3)), ((1, 4, 2, 3), (4, 2, 1, 3)), ((1, 4, 3, 2), (4, 2, 3, 1)),
]


@pytest.fixture(scope="module")
def sweep_report():
    clear_caches()
    return run_sweep(configs(max_n=5, max_d=8, max_t=400))


def describe(report, names):
    bad = [(c, name) for c, name in report.failures() if name in names]
    configs_hit = {c for c, _ in bad}
    if not bad:
        return bad, f"0 discrepancies on {len(report.results)} configs"
    unit_cap = sum(1 for c in configs_hit if c.alpha[0] == 1)
    kinds = ", ".join(f"{k} x{v}" for k, v in sorted(Counter(n for _, n in bad).items()))
    first = sorted(configs_hit, key=lambda c: (c.n, c.d, c.alpha))[0]
    return bad, (
        f"{len(configs_hit)} of {len(report.results)} configs fail ({kinds}); "
        f"{unit_cap} of them have alpha_1 = 1; first: {first}"
    )


def test_criterion_1_worked_example(verdict):
    clear_caches()
    start = time.perf_counter()
    c = Config(5, 7, (1, 4, 4, 5, 7))
    b = bound_terms(c)
    got = {
        "t": count_t(c), "G": count_G(c), "H": count_H(c), "reg": regularity(c),
        "a": a_invariant(c), "mult": multiplicity(c), "bounds": (b.lower, b.upper),
        "binomial": b.binomial,
    }
    elapsed = time.perf_counter() - start
    want = {
        "t": 171, "G": 75, "H": 18, "reg": 4, "a": -1, "mult": 960, "bounds": (170, 1116),
        "binomial": 33571342,
    }
    ok = got == want and elapsed < 5
    verdict(1, ok, f"worked example {got} in {elapsed:.2f}s")
    assert got == want
    assert elapsed < 5


def test_criterion_2_table_class(verdict):
    c = Config(5, 8, (2, 2, 2, 3, 3))
    first = (1, 1, 1, 3, 2)
    cls = build_class(first, c)
    rows = [(s, relative_signature(s, cls.marked_L)) for s in cls.signatures]
    B = clique_from_signature(first, (1, 4, 2, 3), c)
    A = clique_from_signature(first, (1, 2, 4, 3), c)
    checks = {
        "poset": cls.poset.covers == {(4, 3)},
        "size": cls.size == 12,
        "L": cls.marked_L == (2, 4, 3, 1),
        "table": rows == TABLE_ROWS,
        "chain": B.chain == ((1, 1, 1, 3, 2), (0, 2, 1, 3, 2), (0, 2, 1, 2, 3), (0, 1, 2, 2, 3), (0, 1, 1, 3, 3)),
        "no_root": root(A, c) is None,
    }
    ok = all(checks.values())
    verdict(2, ok, f"class of (1,1,1,3,2): {checks}")
    assert ok


def test_criterion_3_enumeration_matches_bron_kerbosch(sweep_report, verdict):
    bad, text = describe(sweep_report, {"cliques_vs_bk", "clique_size"})
    secs = sweep_report.clique_seconds
    ok = not bad and secs < 300
    verdict(3, ok, f"{text}; enumeration + Bron-Kerbosch sweep {secs:.0f}s "
                   f"(all checks {sweep_report.seconds:.0f}s)")
    assert not bad
    assert secs < 300


def test_criterion_4_linear_quotients(sweep_report, verdict):
    bad, text = describe(sweep_report, {"linear_quotients", "omega_bound"})
    verdict(4, not bad, f"colon ideals linear, omega <= n-1: {text}")
    assert not bad


def test_criterion_5_regularity_formula(sweep_report, verdict):
    bad, text = describe(
        sweep_report, {"reg_formula_first_lex", "reg_formula_last_lex", "top_count_tie_breaks"}
    )
    verdict(5, not bad, f"max omega vs n - ceil(n/d'): {text}")
    assert not bad


def test_criterion_6_counting_formulas(sweep_report, verdict):
    bad, text = describe(
        sweep_report, {"count_t", "count_G", "count_H", "count_G_shifted", "count_H_shifted"}
    )
    verdict(6, not bad, f"t, G, H formulas vs enumeration: {text}")
    assert not bad


def test_criterion_7_newton_dual(sweep_report, verdict):
    bad, text = describe(sweep_report, {"dual_mult", "dual_reg", "dual_t"})
    verdict(7, not bad, f"mult, reg, t under the Newton dual: {text}")
    assert not bad


def test_criterion_8_bound_sandwich(sweep_report, verdict):
    bad, text = describe(sweep_report, {"bounds"})
    extra, _ = describe(sweep_report, {"bounds_computed_reg"})
    verdict(8, not bad, f"lower <= mult <= upper: {text}; "
                        f"with the computed regularity in the lower bound: {len(extra)} failures")
    assert not bad


def test_criterion_9_top_omega_dichotomy(sweep_report, verdict):
    bad, text = describe(sweep_report, {"dichotomy"})
    extra, _ = describe(sweep_report, {"dichotomy_first_cap"})
    verdict(9, not bad, f"max omega = n-1 iff n <= d' and d <= sum(alpha_i - 1): {text}; "
                        f"adding alpha_1 >= 2 to the predicate: {len(extra)} failures")
    assert not bad
