"""Closed-form invariants of the Veronese-type algebra and the counting formulas.

Everything is exact integer arithmetic.  ``comb`` follows the convention
C(m, k) = 0 whenever m < k or m < 0, which the inclusion-exclusion sums need.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from itertools import combinations

from .cliques import enumerate_maximal_cliques
from .lattice import Config


class DegenerateConfigError(ValueError):
    """The presentation ideal is zero (t == n), so the bounds do not apply."""


def comb(m: int, k: int) -> int:
    if k < 0 or m < 0 or m < k:
        return 0
    return math.comb(m, k)


def _subsets(items):
    for r in range(len(items) + 1):
        yield from combinations(items, r)


def dimension(config: Config) -> int:
    return config.n


def regularity(config: Config) -> int:
    """floor(n - n/d') = n - ceil(n/d') with d' = min(d, |alpha| - d)."""
    n, dp = config.n, config.d_prime
    return n - (-(-n // dp))


def a_invariant(config: Config) -> int:
    return regularity(config) - dimension(config)


def reduction_number(config: Config) -> int:
    """Reduction number of I_{d,alpha}; equal to reg over an infinite field."""
    return regularity(config)


def count_t(config: Config) -> int:
    n, d, al = config.n, config.d, config.alpha
    total = 0
    for P in _subsets(range(n)):
        total += (-1) ** len(P) * comb(d - sum(al[p] + 1 for p in P) + n - 1, n - 1)
    return total


def count_G(config: Config) -> int:
    n, d, al = config.n, config.d, config.alpha
    total = 0
    for P in _subsets(range(1, n - 1)):
        for Q in _subsets((0, n - 1)):
            m = d - sum(al[p] + 1 for p in P) - sum(al[q] for q in Q) + n - 2
            total += (-1) ** (len(P) + len(Q)) * comb(m, n - 1)
    return total


def count_H(config: Config) -> int:
    n, d, al = config.n, config.d, config.alpha
    total = 0
    for P in _subsets(range(1, n - 1)):
        for Q in _subsets((0, n - 1)):
            m = d - sum(al[p] - 1 for p in P) - sum(al[q] for q in Q)
            total += (-1) ** (len(P) + len(Q)) * comb(m, n - 1)
    return total


def count_bounded(total: int, caps) -> int:
    """Number of c with sum(c) == total and 0 <= c_i <= caps_i.

    Coefficient extraction from prod (1 + x + ... + x^cap_i), one factor at a
    time.  Negative caps admit no solutions.
    """
    if total < 0 or any(c < 0 for c in caps):
        return 0
    ways = [1] + [0] * total
    for cap in caps:
        nxt = [0] * (total + 1)
        run = 0
        for s in range(total + 1):
            run += ways[s]
            if s - cap - 1 >= 0:
                run -= ways[s - cap - 1]
            nxt[s] = run
        ways = nxt
    return ways[total]


def multiplicity(config: Config) -> int:
    """Number of maximal cliques of the sortedness graph."""
    return len(enumerate_maximal_cliques(config))


@dataclass(frozen=True)
class BoundTerms:
    lower: int
    cliques: int
    d1_power: int
    d2_power: int
    binomial: int

    @property
    def upper(self) -> int:
        return min(self.cliques, self.d1_power, self.d2_power, self.binomial)


def bound_terms(config: Config) -> BoundTerms:
    n, d = config.n, config.d
    t = count_t(config)
    if t <= n:
        raise DegenerateConfigError(f"{config}: t = {t} <= n, presentation ideal is zero")
    r = regularity(config)
    G, H = count_G(config), count_H(config)
    f = math.factorial(n - 1)
    return BoundTerms(
        lower=r + t - n,
        cliques=H * f + (G - H) * f // 2,
        d1_power=d ** (n - 1),
        d2_power=(config.total - d) ** (n - 1),
        binomial=comb(r + t - n, t - n) - comb(r - 2 + t - n, t - n),
    )


def multiplicity_bounds(config: Config) -> tuple[int, int]:
    b = bound_terms(config)
    return b.lower, b.upper


def hilbert_function(config: Config, k: int) -> int:
    """dim of the degree-k piece: lattice points of the k-th dilate of the polymatroid."""
    return count_bounded(k * config.d, [k * a for a in config.alpha])


def h_polynomial(config: Config) -> list[int]:
    """Numerator h(t) of the Hilbert series, sum_k H(k) t^k = h(t) / (1 - t)^n.

    For this Cohen-Macaulay algebra deg h = reg, and h(1) = multiplicity.
    deg h <= n - 1, so the first 2n values of H determine h.
    """
    n = config.n
    coeffs = [hilbert_function(config, k) for k in range(2 * n)]
    for _ in range(n):
        coeffs = [c - (coeffs[i - 1] if i else 0) for i, c in enumerate(coeffs)]
    h = coeffs[:n]
    if any(coeffs[n:]):
        raise ArithmeticError(f"{config}: Hilbert series numerator has degree >= n")
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return h


@dataclass(frozen=True)
class InvariantReport:
    dim_A: int
    t_dimKT: int
    reg: int
    a_inv: int
    red_num: int
    mult: int
    G_count: int
    H_count: int
    lower_bound: int
    upper_bound: int
    d_prime: int
    bound_cliques: int
    bound_d1: int
    bound_d2: int
    bound_binomial: int
    reg_computed: int

    def to_json(self) -> dict:
        out = asdict(self)
        out["field_assumption"] = "infinite"
        return out


def invariant_report(config: Config) -> InvariantReport:
    from .order import projective_dimension

    b = bound_terms(config)
    reg = regularity(config)
    return InvariantReport(
        dim_A=dimension(config),
        t_dimKT=count_t(config),
        reg=reg,
        a_inv=a_invariant(config),
        red_num=reduction_number(config),
        mult=multiplicity(config),
        G_count=count_G(config),
        H_count=count_H(config),
        lower_bound=b.lower,
        upper_bound=b.upper,
        d_prime=config.d_prime,
        bound_cliques=b.cliques,
        bound_d1=b.d1_power,
        bound_d2=b.d2_power,
        bound_binomial=b.binomial,
        reg_computed=projective_dimension(config),
    )
