"""Batch runner that checks every cross-module invariant over a family of configs.

Each config yields one :class:`ConfigResult` with a dict of named checks.  A
failing check never stops the sweep; the caller decides what to do with it.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Optional

from . import cliques as _cliques
from . import lattice as _lattice
from . import order as _order
from .cliques import (
    brute_force_cliques,
    build_graph,
    enumerate_maximal_cliques,
    equivalence_classes,
    start_tuples,
)
from .invariants import (
    count_bounded,
    count_G,
    count_H,
    count_t,
    h_polynomial,
    multiplicity_bounds,
    regularity,
)
from .lattice import Config, enumerate_points, newton_dual
from .order import TheoremViolation, build_order, omegas, verify_linear_quotients

# check name -> acceptance group it belongs to
CHECK_GROUPS = {
    "cliques_vs_bk": "oracle",
    "clique_size": "oracle",
    "linear_quotients": "linear",
    "omega_bound": "linear",
    "reg_formula_first_lex": "regularity",
    "reg_formula_last_lex": "regularity",
    "top_count_tie_breaks": "regularity",
    "count_t": "counting",
    "count_G": "counting",
    "count_H": "counting",
    "count_G_shifted": "counting",
    "count_H_shifted": "counting",
    "dual_mult": "dual",
    "dual_reg": "dual",
    "dual_t": "dual",
    "bounds": "bounds",
    "bounds_computed_reg": "bounds_computed_reg",
    "dichotomy": "dichotomy",
    "dichotomy_first_cap": "dichotomy_first_cap",
    "h_poly_degree": "hilbert",
    "h_poly_sum": "hilbert",
}


def clear_caches() -> None:
    """Drop every memoised result so timings start cold."""
    for module in (_lattice, _cliques, _order):
        for obj in vars(module).values():
            if callable(getattr(obj, "cache_clear", None)):
                obj.cache_clear()
    _dual_cache.clear()


def configs(max_n: int = 5, max_d: int = 8, max_t: int = 400, min_n: int = 3) -> Iterator[Config]:
    """All valid configs with min_n <= n <= max_n, d <= max_d and t <= max_t."""
    for n in range(min_n, max_n + 1):
        for d in range(1, max_d + 1):
            for alpha in combinations_with_replacement(range(1, d + 1), n):
                if sum(alpha) <= d:
                    continue
                c = Config(n, d, alpha)
                if count_t(c) <= max_t:
                    yield c


def sample_configs(family: Iterable[Config], k: int, seed: int) -> list[Config]:
    pool = list(family)
    if k >= len(pool):
        return pool
    picked = random.Random(seed).sample(range(len(pool)), k)
    return [pool[i] for i in sorted(picked)]


def reduced(config: Config) -> Config:
    """The member of {config, newton_dual(config)} with degree d'."""
    return config if config.d <= config.total - config.d else newton_dual(config)


def top_omega_dichotomy(config: Config) -> bool:
    """Arithmetic side of the max-omega = n-1 criterion, on the d'-reduced config."""
    r = reduced(config)
    return r.n <= r.d and r.d <= sum(a - 1 for a in r.alpha)


@dataclass
class ConfigResult:
    config: Config
    t: int
    multiplicity: int
    reg_formula: int
    max_omega: int
    top_count: int
    seconds: float
    # time spent on points, graph, Bron-Kerbosch and signature enumeration
    clique_seconds: float
    checks: dict[str, bool] = field(default_factory=dict)
    notes: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def to_row(self) -> dict:
        return {
            "n": self.config.n,
            "d": self.config.d,
            "alpha": ",".join(map(str, self.config.alpha)),
            "t": self.t,
            "mult": self.multiplicity,
            "reg_formula": self.reg_formula,
            "max_omega": self.max_omega,
            "top_count": self.top_count,
            "failures": ";".join(self.failures()),
        }


_dual_cache: dict[Config, tuple[int, int]] = {}


def _mult_and_reg(config: Config) -> tuple[int, int]:
    if config not in _dual_cache:
        ws = omegas(build_order(config))
        _dual_cache[config] = (len(ws), max(ws))
    return _dual_cache[config]


def check_config(config: Config, oracle: bool = True) -> ConfigResult:
    """Run every invariant on one config.  ``oracle`` toggles the costly colon check."""
    start = time.perf_counter()
    n = config.n
    checks: dict[str, bool] = {}
    notes: dict[str, str] = {}
    points = enumerate_points(config)
    t = len(points)

    cliques = enumerate_maximal_cliques(config)
    sets = {c.vertices(config) for c in cliques}
    bk = set(brute_force_cliques(build_graph(config)))
    checks["cliques_vs_bk"] = sets == bk and len(sets) == len(cliques)
    checks["clique_size"] = all(len(s) == n for s in bk) and all(len(s) == n for s in sets)
    clique_seconds = time.perf_counter() - start

    first = build_order(config, "first-lex")
    last = build_order(config, "last-lex")
    if oracle:
        try:
            verify_linear_quotients(config, first)
            checks["linear_quotients"] = True
        except TheoremViolation as exc:
            checks["linear_quotients"] = False
            notes["linear_quotients"] = str(exc)
    w_first, w_last = omegas(first), omegas(last)
    checks["omega_bound"] = max(w_first) <= n - 1 and max(w_last) <= n - 1
    top = max(w_first)
    top_first, top_last = (top, w_first.count(top)), (max(w_last), w_last.count(max(w_last)))
    r = regularity(config)
    checks["reg_formula_first_lex"] = top_first[0] == r
    checks["reg_formula_last_lex"] = top_last[0] == r
    checks["top_count_tie_breaks"] = top_first == top_last
    if top_first != top_last:
        notes["top_count_tie_breaks"] = f"first-lex {top_first}, last-lex {top_last}"

    alpha, d = config.alpha, config.d
    classes = equivalence_classes(config)
    checks["count_t"] = count_t(config) == t
    checks["count_G"] = count_G(config) == len(start_tuples(config)) == len(classes)
    checks["count_H"] = count_H(config) == sum(1 for c in classes if c.is_full())
    shifted_g = (alpha[0] - 1,) + alpha[1:-1] + (alpha[-1] - 1,)
    checks["count_G_shifted"] = count_G(config) == count_bounded(d - 1, shifted_g)
    shifted_h = (alpha[0] - 1,) + tuple(a - 2 for a in alpha[1:-1]) + (alpha[-1] - 1,)
    checks["count_H_shifted"] = count_H(config) == count_bounded(d - 1 - (n - 2), shifted_h)

    mult = len(cliques)
    _dual_cache[config] = (mult, top)
    dual = newton_dual(config)
    d_mult, d_reg = _mult_and_reg(dual)
    checks["dual_mult"] = d_mult == mult
    checks["dual_reg"] = d_reg == top and regularity(dual) == r
    checks["dual_t"] = count_t(dual) == t

    if t > n:
        lo, hi = multiplicity_bounds(config)
        checks["bounds"] = lo <= mult <= hi
        if not checks["bounds"]:
            notes["bounds"] = f"{lo} <= {mult} <= {hi} fails"
        # the lower bound reg + t - n with the regularity read off the quotients
        checks["bounds_computed_reg"] = top + t - n <= mult <= hi

    checks["dichotomy"] = (top == n - 1) == top_omega_dichotomy(config)
    # a starting tuple with a_1 >= 2 needs alpha_1 >= 2, which the predicate above omits
    with_cap = top_omega_dichotomy(config) and reduced(config).alpha[0] >= 2
    checks["dichotomy_first_cap"] = (top == n - 1) == with_cap

    h = h_polynomial(config)
    checks["h_poly_degree"] = len(h) - 1 == top
    checks["h_poly_sum"] = sum(h) == mult

    return ConfigResult(
        config, t, mult, r, top, top_first[1], time.perf_counter() - start, clique_seconds, checks, notes
    )


@dataclass
class SweepReport:
    results: list[ConfigResult]
    seconds: float

    @property
    def clique_seconds(self) -> float:
        return sum(r.clique_seconds for r in self.results)

    def failures(self, group: Optional[str] = None) -> list[tuple[Config, str]]:
        out = []
        for res in self.results:
            for name in res.failures():
                if group is None or CHECK_GROUPS[name] == group:
                    out.append((res.config, name))
        return out

    def summary(self) -> dict:
        per_check: dict[str, int] = {name: 0 for name in CHECK_GROUPS}
        for res in self.results:
            for name in res.failures():
                per_check[name] += 1
        return {
            "configs": len(self.results),
            "seconds": round(self.seconds, 2),
            "failures": {k: v for k, v in per_check.items() if v},
        }


def run_sweep(family: Iterable[Config], oracle: bool = True, progress=None) -> SweepReport:
    start = time.perf_counter()
    results = []
    for config in family:
        results.append(check_config(config, oracle=oracle))
        if progress is not None:
            progress(results[-1])
    return SweepReport(results, time.perf_counter() - start)
