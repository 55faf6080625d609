"""Sortedness graph, its maximal cliques, and the per-class bookkeeping.

Every maximal clique (a^1 >_lex ... >_lex a^n) is determined by its first
point and its signature (s_1, ..., s_{n-1}): a^{i+1} is a^i after an s_i-jump
(move one unit from coordinate s_i to s_i + 1).  Cliques sharing a^1 form an
equivalence class.  The signatures realised in a class are exactly the linear
extensions of the class's poset of obstructions, so enumeration never has to
search the graph.  :func:`brute_force_cliques` is a plain Bron-Kerbosch that
knows nothing of this and serves as the oracle.

Signatures and poset elements use the 1-based jump indices 1..n-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .lattice import Config, Point, enumerate_points, is_point, point_index, rank
from .sorting import delta, is_sorted_pair

Signature = tuple[int, ...]


class InvariantError(AssertionError):
    """An internal invariant guaranteed by the theory failed to hold."""


# --------------------------------------------------------------------------
# graph
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    vertices: tuple[Point, ...]
    # adjacency[i] is a bitmask over vertex indices
    adjacency: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        return _bits(self.adjacency[i])

    def edges(self) -> Iterator[tuple[int, int]]:
        for i, mask in enumerate(self.adjacency):
            for j in _bits(mask >> (i + 1)):
                yield i, i + 1 + j

    def edge_count(self) -> int:
        return sum(bin(m).count("1") for m in self.adjacency) // 2

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.adjacent(u, v) for k, u in enumerate(vs) for v in vs[k + 1:])


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def sorted_pair_matrix(points: Sequence[Point]) -> np.ndarray:
    """Boolean matrix S with S[i, j] true iff (points[i], points[j]) is fixed by sorting.

    Batched form of :func:`sort_pair`: with P the prefix sums of the merged
    exponent vector, the first factor of the sorted pair has coordinates
    ceil(P_k / 2) - ceil(P_{k-1} / 2).  Only i < j is meaningful when the points
    are lex-descending.
    """
    pts = np.asarray(points, dtype=np.int64)
    merged = np.cumsum(pts[:, None, :] + pts[None, :, :], axis=2)
    upper = (merged + 1) // 2
    first = np.diff(upper, axis=2, prepend=0)
    return np.all(first == pts[:, None, :], axis=2)


@lru_cache(maxsize=64)
def build_graph(config: Config) -> Graph:
    """Sortedness graph on the points of ``config``, lex-descending vertex order."""
    pts = enumerate_points(config)
    fixed = sorted_pair_matrix(pts)
    upper = np.triu(fixed, k=1)
    sym = upper | upper.T
    adj = []
    for row in sym:
        mask = 0
        for j in np.flatnonzero(row).tolist():
            mask |= 1 << j
        adj.append(mask)
    return Graph(pts, tuple(adj))


def brute_force_cliques(graph: Graph) -> list[frozenset[int]]:
    """All inclusion-maximal cliques, by Bron-Kerbosch with Tomita pivoting."""
    adj = graph.adjacency
    out: list[frozenset[int]] = []

    def expand(r: list[int], p: int, x: int) -> None:
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(_bits(p | x), key=lambda u: bin(p & adj[u]).count("1"))
        for v in _bits(p & ~adj[pivot]):
            r.append(v)
            expand(r, p & adj[v], x & adj[v])
            r.pop()
            p &= ~(1 << v)
            x |= 1 << v

    expand([], (1 << len(adj)) - 1, 0)
    return out


# --------------------------------------------------------------------------
# jumps and start tuples
# --------------------------------------------------------------------------

def apply_jump(a: Sequence[int], s: int, config: Config) -> Optional[Point]:
    """a - e_s + e_{s+1} if it stays inside the caps, else None."""
    n = config.n
    if not 1 <= s <= n - 1:
        raise ValueError(f"jump index must lie in 1..{n - 1}, got {s}")
    if a[s - 1] > 0 and a[s] < config.alpha[s]:
        b = list(a)
        b[s - 1] -= 1
        b[s] += 1
        return tuple(b)
    return None


def start_tuples(config: Config) -> list[Point]:
    """Points with a_1 >= 1 and a_n <= alpha_n - 1, lex-descending."""
    an = config.alpha[-1]
    return [p for p in enumerate_points(config) if p[0] >= 1 and p[-1] <= an - 1]


def end_of_class(first: Sequence[int]) -> Point:
    last = list(first)
    last[0] -= 1
    last[-1] += 1
    return tuple(last)


# --------------------------------------------------------------------------
# poset of obstructions and linear extensions
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ObstructionPoset:
    """Strict partial order on {1, ..., size}; (p, q) in relations means p before q."""

    size: int
    covers: frozenset[tuple[int, int]]
    relations: frozenset[tuple[int, int]] = field(default=frozenset())

    def __post_init__(self) -> None:
        if not self.relations and self.covers:
            object.__setattr__(self, "relations", _transitive_closure(self.covers))
        for p, q in self.relations:
            if (q, p) in self.relations or p == q:
                raise InvariantError(f"obstruction relation is not antisymmetric at {p}, {q}")

    def precedes(self, p: int, q: int) -> bool:
        return (p, q) in self.relations

    def is_trivial(self) -> bool:
        return not self.relations

    def predecessors(self, q: int) -> frozenset[int]:
        return frozenset(p for p, r in self.relations if r == q)

    def restricted(self, values: Iterable[int]) -> dict[int, frozenset[int]]:
        vs = set(values)
        return {q: frozenset(p for p, r in self.relations if r == q and p in vs) for q in vs}

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in sorted(self.covers)]


def _transitive_closure(pairs: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    rel = set(pairs)
    while True:
        extra = {(p, s) for p, q in rel for r, s in rel if q == r} - rel
        if not extra:
            return frozenset(rel)
        rel |= extra


def obstruction_poset(first: Sequence[int], config: Config) -> ObstructionPoset:
    n, alpha = config.n, config.alpha
    covers = set()
    for i in range(1, n):
        # 1-based coordinate k lives at first[k - 1]
        if i > 1 and first[i - 1] == 0:
            covers.add((i - 1, i))
        if i + 1 < n and first[i] == alpha[i]:
            covers.add((i + 1, i))
    return ObstructionPoset(n - 1, frozenset(covers))


def _extensions(preds: dict[int, frozenset[int]]) -> Iterator[tuple[int, ...]]:
    values = sorted(preds)
    placed: list[int] = []
    used: set[int] = set()

    def rec() -> Iterator[tuple[int, ...]]:
        if len(placed) == len(values):
            yield tuple(placed)
            return
        for v in values:
            if v not in used and preds[v] <= used:
                used.add(v)
                placed.append(v)
                yield from rec()
                placed.pop()
                used.discard(v)

    yield from rec()


def linear_extensions(poset: ObstructionPoset) -> Iterator[Signature]:
    """Linear extensions as one-line permutations, in lexicographic order."""
    return _extensions({q: poset.predecessors(q) for q in range(1, poset.size + 1)})


def count_linear_extensions(poset: ObstructionPoset) -> int:
    """Count linear extensions by dynamic programming over down-sets."""
    m = poset.size
    need = [0] * (m + 1)
    for p, q in poset.relations:
        need[q] |= 1 << (p - 1)
    ways = [0] * (1 << m)
    ways[0] = 1
    for placed in range(1 << m):
        if not ways[placed]:
            continue
        for v in range(1, m + 1):
            bit = 1 << (v - 1)
            if not placed & bit and need[v] & placed == need[v]:
                ways[placed | bit] += ways[placed]
    return ways[-1]


def is_legitimate_signature(sig: Sequence[int], poset: ObstructionPoset) -> bool:
    if sorted(sig) != list(range(1, poset.size + 1)):
        return False
    pos = {v: i for i, v in enumerate(sig)}
    return all(pos[p] < pos[q] for p, q in poset.relations)


# --------------------------------------------------------------------------
# maximal cliques
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class MaximalClique:
    chain: tuple[Point, ...]
    signature: Signature

    @property
    def first(self) -> Point:
        return self.chain[0]

    @property
    def last(self) -> Point:
        return self.chain[-1]

    def vertices(self, config: Config) -> frozenset[int]:
        idx = point_index(config)
        return frozenset(idx[p] for p in self.chain)

    def to_json(self) -> dict:
        return {"chain": [list(p) for p in self.chain], "signature": list(self.signature)}


def clique_from_signature(
    first: Sequence[int], sig: Sequence[int], config: Config
) -> Optional[MaximalClique]:
    """Apply the jumps of ``sig`` to ``first``; None as soon as one is blocked."""
    chain = [tuple(first)]
    for s in sig:
        nxt = apply_jump(chain[-1], s, config)
        if nxt is None:
            return None
        chain.append(nxt)
    return MaximalClique(tuple(chain), tuple(sig))


def signature_of(chain: Sequence[Point]) -> Optional[Signature]:
    """Read the signature off a lex-descending chain, or None if it has none."""
    sig = []
    for a, b in zip(chain, chain[1:]):
        dl = delta(a, b)
        if dl is None or len(dl.intervals) != 1 or dl.length != 1:
            return None
        sig.append(dl.intervals[0][0])
    if sorted(sig) != list(range(1, len(chain))):
        return None
    return tuple(sig)


def kappas(first: Sequence[int], config: Config) -> tuple[int, int]:
    """(kappa1, kappa2) for the class starting at ``first``; sentinels 0 and n+1."""
    n, alpha = config.n, config.alpha
    if first[0] == 1:
        k1 = 1
        while k1 + 1 <= n - 1 and first[k1] == 0:
            k1 += 1
    else:
        k1 = 0
    if first[-1] == alpha[-1] - 1:
        k2 = n
        while k2 - 1 >= 2 and first[k2 - 2] == alpha[k2 - 2]:
            k2 -= 1
    else:
        k2 = n + 1
    return k1, k2


def _marked_signature(poset: ObstructionPoset, k1: int, k2: int, n: int) -> Signature:
    if k1 == k2 - 1:
        sig = tuple(range(n - 1, k2 - 1, -1)) + tuple(range(1, k1 + 1))
    else:
        window = range(k1 + 1, k2 - 1)
        # greedy lexicographically smallest extension of the window
        prefix = next(_extensions(poset.restricted(window)))
        sig = prefix + tuple(range(n - 1, k2 - 2, -1)) + tuple(range(1, k1 + 1))
    if not is_legitimate_signature(sig, poset):
        raise InvariantError(f"marked signature {sig} is not legitimate")
    return sig


def relative_signature(sig: Sequence[int], tau: Sequence[int]) -> Signature:
    """Positions (1-based) of the entries of ``sig`` inside ``tau``."""
    pos = {v: i for i, v in enumerate(tau, start=1)}
    try:
        return tuple(pos[k] for k in sig)
    except KeyError as exc:
        raise ValueError(f"value {exc.args[0]} of {tuple(sig)} not found in {tuple(tau)}") from None


@dataclass(frozen=True)
class EquivalenceClass:
    first: Point
    last: Point
    poset: ObstructionPoset
    kappa1: int
    kappa2: int
    marked_L: Signature
    rank: int
    # legitimate signatures, ascending by relative signature w.r.t. marked_L
    signatures: tuple[Signature, ...]

    @property
    def size(self) -> int:
        return len(self.signatures)

    def is_full(self) -> bool:
        return self.poset.is_trivial()

    def cliques(self, config: Config) -> list[MaximalClique]:
        return list(_class_cliques(self, config))

    def to_json(self) -> dict:
        return {
            "first": list(self.first),
            "last": list(self.last),
            "kappa": [self.kappa1, self.kappa2],
            "L": list(self.marked_L),
            "rank": self.rank,
            "size": self.size,
        }


@lru_cache(maxsize=4096)
def _class_cliques(cls: EquivalenceClass, config: Config) -> tuple[MaximalClique, ...]:
    out = []
    for sig in cls.signatures:
        c = clique_from_signature(cls.first, sig, config)
        if c is None:
            raise InvariantError(f"legitimate signature {sig} failed from {cls.first}")
        out.append(c)
    return tuple(out)


def marked_L(cls: EquivalenceClass) -> Signature:
    """Marked representative's signature for a populated class."""
    return _marked_signature(cls.poset, cls.kappa1, cls.kappa2, cls.poset.size + 1)


def build_class(first: Sequence[int], config: Config) -> EquivalenceClass:
    first = tuple(first)
    poset = obstruction_poset(first, config)
    k1, k2 = kappas(first, config)
    tau = _marked_signature(poset, k1, k2, config.n)
    sigs = sorted(linear_extensions(poset), key=lambda s: relative_signature(s, tau))
    last = end_of_class(first)
    return EquivalenceClass(first, last, poset, k1, k2, tau, rank(last, config), tuple(sigs))


@lru_cache(maxsize=64)
def equivalence_classes(config: Config) -> tuple[EquivalenceClass, ...]:
    """One class per start tuple, lex-descending by first point."""
    return tuple(build_class(a, config) for a in start_tuples(config))


@lru_cache(maxsize=64)
def enumerate_maximal_cliques(config: Config) -> tuple[MaximalClique, ...]:
    out: list[MaximalClique] = []
    for cls in equivalence_classes(config):
        out.extend(cls.cliques(config))
    return tuple(out)


def root(clique: MaximalClique, config: Config) -> Optional[MaximalClique]:
    """The clique (a^2, ..., a^n, a^{n+1}) when it exists.

    a^{n+1} is forced to be a^2 - e_1 + e_n; the shifted chain is then checked
    for membership and pairwise sortedness directly.
    """
    nxt = end_of_class(clique.chain[1])
    if not is_point(nxt, config):
        return None
    chain = clique.chain[1:] + (nxt,)
    if not all(is_sorted_pair(a, b) for k, a in enumerate(chain) for b in chain[k + 1:]):
        return None
    sig = signature_of(chain)
    if sig is None:
        return None
    return MaximalClique(chain, sig)
