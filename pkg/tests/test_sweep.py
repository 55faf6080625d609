import pytest

from veronese.lattice import Config
from veronese.sweep import (
    CHECK_GROUPS,
    check_config,
    configs,
    reduced,
    run_sweep,
    sample_configs,
    top_omega_dichotomy,
)

# checks that hold on every config; the other three are tied to the
# closed-form regularity, which overshoots when alpha_1 == 1
ALWAYS = set(CHECK_GROUPS) - {"reg_formula_first_lex", "reg_formula_last_lex", "dichotomy", "bounds"}


@pytest.fixture(scope="module")
def small_sweep():
    return run_sweep(configs(max_n=4, max_d=5, max_t=60))


def test_family_is_valid_and_bounded():
    fam = list(configs(max_n=4, max_d=4, max_t=30))
    assert fam and all(3 <= c.n <= 4 and c.d <= 4 for c in fam)
    assert len(set(fam)) == len(fam)


def test_every_check_is_grouped(small_sweep):
    for res in small_sweep.results:
        assert set(res.checks) <= set(CHECK_GROUPS)


def test_small_sweep_has_no_unexpected_failures(small_sweep):
    bad = [(c, name) for c, name in small_sweep.failures() if name in ALWAYS]
    assert bad == []


def test_formula_failures_only_with_unit_first_cap(small_sweep):
    for c, name in small_sweep.failures():
        assert c.alpha[0] == 1, (c, name)


def test_formula_holds_when_first_cap_at_least_two(small_sweep):
    for res in small_sweep.results:
        if res.config.alpha[0] >= 2:
            assert res.ok, (res.config, res.failures())


def test_sampling_is_reproducible():
    fam = list(configs(max_n=4, max_d=5))
    a = sample_configs(fam, 10, seed=3)
    assert a == sample_configs(fam, 10, seed=3)
    assert len(a) == 10 and set(a) <= set(fam)
    assert sample_configs(fam[:4], 10, seed=3) == fam[:4]


def test_reduced_config():
    c = Config(5, 7, (1, 4, 4, 5, 7))
    assert reduced(c) == c
    big = Config(3, 5, (2, 2, 3))
    assert reduced(big) == Config(3, 2, (2, 2, 2))


def test_dichotomy_predicate():
    assert top_omega_dichotomy(Config(3, 3, (2, 2, 3)))
    assert not top_omega_dichotomy(Config(3, 2, (2, 2, 2)))
    res = check_config(Config(3, 3, (2, 2, 3)))
    assert res.max_omega == 2 and res.ok
