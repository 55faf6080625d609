"""Configurations (n, d, alpha) and the lattice points of a Veronese-type ideal.

A point is a plain tuple of ``n`` non-negative integers summing to ``d`` with
``c[i] <= alpha[i]``.  Points of a configuration are always listed in
lex-descending order; that position is the global vertex index used by every
other module.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

Point = tuple[int, ...]


class ConfigError(ValueError):
    """Raised when (n, d, alpha) violates the standing assumptions."""


@dataclass(frozen=True)
class Config:
    n: int
    d: int
    alpha: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", tuple(int(a) for a in self.alpha))
        n, d, alpha = self.n, self.d, self.alpha
        if n < 3:
            raise ConfigError(f"n must be at least 3, got n={n}")
        if len(alpha) != n:
            raise ConfigError(f"alpha has {len(alpha)} entries, expected {n}")
        if d < 1:
            raise ConfigError(f"d must be positive, got d={d}")
        if alpha[0] < 1:
            raise ConfigError(f"caps must be at least 1, got alpha={alpha}")
        if any(x > y for x, y in zip(alpha, alpha[1:])):
            raise ConfigError(f"alpha must be nondecreasing, got {alpha}")
        if alpha[-1] > d:
            raise ConfigError(f"caps must not exceed d={d}, got alpha={alpha}")
        if d >= sum(alpha):
            # d == |alpha| is the principal case x^alpha; d > |alpha| is empty
            raise ConfigError(f"need d < |alpha| = {sum(alpha)}, got d={d}")

    @property
    def total(self) -> int:
        """|alpha|."""
        return sum(self.alpha)

    @property
    def d_prime(self) -> int:
        return min(self.d, self.total - self.d)

    def to_dict(self) -> dict:
        return {"n": self.n, "d": self.d, "alpha": list(self.alpha)}

    @classmethod
    def from_dict(cls, data: dict) -> "Config":
        return cls(int(data["n"]), int(data["d"]), tuple(data["alpha"]))

    def __str__(self) -> str:
        return f"(n={self.n}, d={self.d}, alpha={self.alpha})"


def _bounded_compositions(total: int, caps: Sequence[int]) -> Iterator[Point]:
    """Yield all c with sum(c) == total and 0 <= c[i] <= caps[i], lex-descending."""
    k = len(caps)
    # suffix capacity decides the smallest feasible value at each slot
    room = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        room[i] = room[i + 1] + caps[i]
    if total < 0 or total > room[0]:
        return
    prefix: list[int] = []

    def rec(i: int, left: int) -> Iterator[Point]:
        if i == k - 1:
            yield tuple(prefix) + (left,)
            return
        hi = min(caps[i], left)
        lo = max(0, left - room[i + 1])
        for c in range(hi, lo - 1, -1):
            prefix.append(c)
            yield from rec(i + 1, left - c)
            prefix.pop()

    yield from rec(0, total)


@lru_cache(maxsize=256)
def enumerate_points(config: Config) -> tuple[Point, ...]:
    """All of V_{n,d}^alpha, strictly lex-descending."""
    return tuple(_bounded_compositions(config.d, config.alpha))


@lru_cache(maxsize=256)
def point_index(config: Config) -> dict[Point, int]:
    """Map each point to its position in :func:`enumerate_points`."""
    return {p: i for i, p in enumerate(enumerate_points(config))}


def is_point(c: Sequence[int], config: Config) -> bool:
    return (
        len(c) == config.n
        and sum(c) == config.d
        and all(0 <= x <= a for x, a in zip(c, config.alpha))
    )


def lex_compare(a: Sequence[int], b: Sequence[int]) -> int:
    """Return 1 if a >_lex b, -1 if a <_lex b, 0 if equal.

    a >_lex b when the leftmost nonzero entry of a - b is positive.
    """
    for x, y in zip(a, b):
        if x != y:
            return 1 if x > y else -1
    return 0


@lru_cache(maxsize=256)
def eta(config: Config) -> Point:
    """The lex-smallest point: fill caps from the right."""
    left = config.d
    out = [0] * config.n
    for i in range(config.n - 1, -1, -1):
        out[i] = min(config.alpha[i], left)
        left -= out[i]
    assert left == 0
    return tuple(out)


def rank(a: Sequence[int], config: Config) -> int:
    """Weighted excess of a over eta: sum_{j<n} (a_j - eta_j)(n - j), 1-based j."""
    e = eta(config)
    n = config.n
    return sum((a[j] - e[j]) * (n - 1 - j) for j in range(n - 1))


def newton_dual(config: Config) -> Config:
    """Configuration whose points are alpha - c for the points c of ``config``.

    The dual degree is |alpha| - d.  Caps larger than the new degree are
    clipped to it, which leaves the point set unchanged but keeps the result
    a valid configuration.
    """
    d2 = config.total - config.d
    alpha = tuple(min(a, d2) for a in config.alpha)
    return Config(config.n, d2, alpha)


def dual_point(c: Sequence[int], config: Config) -> Point:
    return tuple(a - x for a, x in zip(config.alpha, c))


def points_to_json(points: Sequence[Point]) -> str:
    return json.dumps([list(p) for p in points])


def points_from_json(text: str) -> list[Point]:
    return [tuple(int(x) for x in p) for p in json.loads(text)]
