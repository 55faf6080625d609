"""Sturmfels' sorting operator on exponent vectors of equal degree.

For p monomials of degree d, merge their variable indices into one sorted list
i_1 <= ... <= i_{pd}; the k-th output takes positions k, p+k, 2p+k, ...
The functions here never materialise that list.  If P_i is the number of merged
indices that are <= i, the k-th output has (#positions <= P_i congruent to k)
minus (#positions <= P_{i-1} congruent to k) copies of x_i, and the number of
positions j <= P with j = k (mod p) is (P - k + p) // p.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .lattice import Point, lex_compare


def _degree_check(vectors: Sequence[Sequence[int]]) -> int:
    degs = {sum(v) for v in vectors}
    if len(degs) != 1:
        raise ValueError(f"sorting needs monomials of equal degree, got degrees {sorted(degs)}")
    lens = {len(v) for v in vectors}
    if len(lens) != 1:
        raise ValueError("sorting needs vectors of equal length")
    return degs.pop()


def sort_many(vectors: Sequence[Sequence[int]]) -> tuple[Point, ...]:
    """Sort a tuple of p >= 2 exponent vectors."""
    p = len(vectors)
    if p < 2:
        raise ValueError("sort_many needs at least two vectors")
    _degree_check(vectors)
    n = len(vectors[0])
    out = [[0] * n for _ in range(p)]
    prev = 0
    for i in range(n):
        cur = prev + sum(v[i] for v in vectors)
        for k in range(1, p + 1):
            out[k - 1][i] = (cur - k + p) // p - (prev - k + p) // p
        prev = cur
    return tuple(tuple(row) for row in out)


def sort_pair(u: Sequence[int], v: Sequence[int]) -> tuple[Point, Point]:
    _degree_check((u, v))
    a, b = [], []
    prev = 0
    for x, y in zip(u, v):
        cur = prev + x + y
        a.append((cur + 1) // 2 - (prev + 1) // 2)
        b.append(cur // 2 - prev // 2)
        prev = cur
    return tuple(a), tuple(b)


def sort_literal(vectors: Sequence[Sequence[int]]) -> tuple[Point, ...]:
    """Reference implementation that builds the merged index list explicitly."""
    p = len(vectors)
    _degree_check(vectors)
    n = len(vectors[0])
    merged = sorted(i for v in vectors for i in range(n) for _ in range(v[i]))
    out = []
    for k in range(p):
        row = [0] * n
        for i in merged[k::p]:
            row[i] += 1
        out.append(tuple(row))
    return tuple(out)


def is_sorted_pair(a: Sequence[int], b: Sequence[int]) -> bool:
    """True if the pair, arranged lex-larger first, is fixed by sorting."""
    a, b = tuple(a), tuple(b)
    if lex_compare(a, b) < 0:
        a, b = b, a
    return sort_pair(a, b) == (a, b)


@dataclass(frozen=True)
class SortingSignature:
    """Union of disjoint half-open intervals [lo, hi) with 1-based endpoints."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        flat = [x for iv in self.intervals for x in iv]
        if any(x >= y for x, y in zip(flat, flat[1:])):
            raise ValueError(f"intervals must be strictly increasing: {self.intervals}")

    @property
    def length(self) -> int:
        return sum(hi - lo for lo, hi in self.intervals)

    def cells(self) -> frozenset[int]:
        """Integer cells s covered by [s, s+1) pieces."""
        return frozenset(s for lo, hi in self.intervals for s in range(lo, hi))

    @classmethod
    def from_cells(cls, cells) -> "SortingSignature":
        cells = sorted(cells)
        ivs: list[list[int]] = []
        for s in cells:
            if ivs and ivs[-1][1] == s:
                ivs[-1][1] = s + 1
            else:
                ivs.append([s, s + 1])
        return cls(tuple((lo, hi) for lo, hi in ivs))

    def to_json(self) -> list[list[int]]:
        return [[lo, hi] for lo, hi in self.intervals]


def delta(a: Sequence[int], b: Sequence[int]) -> Optional[SortingSignature]:
    """Sorting signature set of a >_lex b, or None when the pair is unsorted.

    The pair is sorted exactly when b - a has entries in {-1, 0, +1} whose
    nonzero entries alternate -1, +1, -1, +1, ... and end on +1.
    """
    if len(a) != len(b):
        raise ValueError("points of different length")
    if sum(a) != sum(b):
        raise ValueError("points of different degree")
    if lex_compare(a, b) <= 0:
        raise ValueError(f"delta needs a >_lex b, got {tuple(a)} and {tuple(b)}")
    marks: list[int] = []
    expect = -1
    for i, (x, y) in enumerate(zip(a, b), start=1):
        step = y - x
        if step == 0:
            continue
        if step != expect:
            return None
        marks.append(i)
        expect = -expect
    if expect != -1:
        return None
    return SortingSignature(tuple(zip(marks[0::2], marks[1::2])))
