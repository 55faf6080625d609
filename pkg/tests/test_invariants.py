from itertools import combinations_with_replacement, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import small_configs
from veronese.cliques import equivalence_classes, start_tuples
from veronese.invariants import (
    DegenerateConfigError,
    a_invariant,
    bound_terms,
    comb,
    count_bounded,
    count_G,
    count_H,
    count_t,
    h_polynomial,
    hilbert_function,
    invariant_report,
    multiplicity,
    multiplicity_bounds,
    reduction_number,
    regularity,
)
from veronese.lattice import Config, enumerate_points
from veronese.order import projective_dimension


def sums_of_k_points(config, k):
    pts = enumerate_points(config)
    return {tuple(map(sum, zip(*combo))) for combo in combinations_with_replacement(pts, k)}


def test_worked_example_closed_forms(worked):
    assert count_t(worked) == 171
    assert count_G(worked) == 75
    assert count_H(worked) == 18
    assert regularity(worked) == 4
    assert a_invariant(worked) == -1
    assert reduction_number(worked) == 4
    assert multiplicity(worked) == 960
    assert multiplicity_bounds(worked) == (170, 1116)
    b = bound_terms(worked)
    assert (b.cliques, b.d1_power, b.d2_power, b.binomial) == (1116, 2401, 38416, 33571342)


def test_worked_example_hilbert_data(worked):
    assert hilbert_function(worked, 1) == 171
    assert hilbert_function(worked, 2) == len(sums_of_k_points(worked, 2)) == 1439
    assert hilbert_function(worked, 3) == 5694
    assert h_polynomial(worked) == [1, 166, 594, 199]


def test_worked_example_report(worked):
    rep = invariant_report(worked)
    assert rep.reg_computed == 3
    doc = rep.to_json()
    assert doc["field_assumption"] == "infinite"
    assert (doc["t_dimKT"], doc["mult"], doc["lower_bound"], doc["upper_bound"]) == (171, 960, 170, 1116)


@given(small_configs(max_t=60))
def test_hilbert_function_counts_distinct_products(config):
    for k in (2, 3):
        assert hilbert_function(config, k) == len(sums_of_k_points(config, k))


@given(small_configs())
def test_h_polynomial_matches_quotients(config):
    h = h_polynomial(config)
    assert sum(h) == multiplicity(config)
    assert len(h) - 1 == projective_dimension(config)
    assert all(c >= 0 for c in h)
    assert h[:2] == [1, count_t(config) - config.n][: len(h)]


@given(small_configs())
def test_counting_formulas_match_enumeration(config):
    classes = equivalence_classes(config)
    assert count_t(config) == len(enumerate_points(config))
    assert count_G(config) == len(start_tuples(config)) == len(classes)
    assert count_H(config) == sum(1 for c in classes if c.is_full())


@given(st.integers(0, 12), st.lists(st.integers(-1, 5), min_size=1, max_size=5))
def test_count_bounded_matches_brute_force(total, caps):
    brute = 0
    if all(c >= 0 for c in caps):
        brute = sum(1 for p in product(*(range(c + 1) for c in caps)) if sum(p) == total)
    assert count_bounded(total, caps) == brute


@given(small_configs())
def test_regularity_closed_form_when_first_cap_at_least_two(config):
    if config.alpha[0] >= 2:
        assert regularity(config) == projective_dimension(config)
    else:
        # with a cap of 1 the closed form is only an upper bound
        assert regularity(config) >= projective_dimension(config)


def test_regularity_closed_form_overshoots_with_unit_cap():
    c = Config(3, 3, (1, 2, 3))
    assert h_polynomial(c) == [1, 3]
    assert projective_dimension(c) == 1
    assert regularity(c) == 2


def test_comb_convention():
    assert comb(5, 2) == 10
    assert comb(2, 5) == 0
    assert comb(-1, 0) == 0
    assert comb(3, -1) == 0


def test_degenerate_config_has_no_bounds():
    with pytest.raises(DegenerateConfigError):
        bound_terms(Config(3, 1, (1, 1, 1)))


@pytest.mark.parametrize("n,d", [(3, 2), (3, 3), (4, 2), (4, 3)])
def test_veronese_bound_term(n, d):
    c = Config(n, d, (d,) * n)
    assert bound_terms(c).d1_power == d ** (n - 1) == multiplicity(c)
