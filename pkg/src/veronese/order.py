"""Total order on maximal cliques and the linear-quotient check.

Generators of the Alexander dual of ini(J) are the complements of maximal
cliques, so for cliques B before A the colon ideal (T_{B^c}) : T_{A^c} is the
squarefree monomial prod_{v in A \\ B} T_v.  The order used here:

* lower class rank first;
* equal rank: whole classes as blocks, broken by a declared tie-break rule;
* inside a class: ascending relative signature w.r.t. the marked clique L.

``omega(A)`` is computed from an index of (n-1)-subsets, and independently by
:func:`colon_generators`, which builds every colon generator with monomial
arithmetic and minimalises by divisibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import numpy as np

from .cliques import (
    EquivalenceClass,
    MaximalClique,
    equivalence_classes,
)
from .lattice import Config, point_index

TIE_BREAKS = ("first-lex", "last-lex")


class TheoremViolation(RuntimeError):
    """A colon ideal was not linear, or the two omega routes disagreed."""


@dataclass(frozen=True)
class CliqueOrder:
    config: Config
    tie_break: str
    sequence: tuple[MaximalClique, ...]
    # class position of each clique in ``sequence``
    class_of: tuple[int, ...]
    classes: tuple[EquivalenceClass, ...]

    def __len__(self) -> int:
        return len(self.sequence)

    @property
    def vertex_sets(self) -> tuple[frozenset[int], ...]:
        return _vertex_sets(self)

    def position(self, clique: MaximalClique) -> int:
        return _positions(self)[clique.chain]


@lru_cache(maxsize=16)
def _vertex_sets(order: CliqueOrder) -> tuple[frozenset[int], ...]:
    return tuple(c.vertices(order.config) for c in order.sequence)


@lru_cache(maxsize=16)
def _positions(order: CliqueOrder) -> dict:
    return {c.chain: i for i, c in enumerate(order.sequence)}


def _class_key(cls: EquivalenceClass, tie_break: str):
    if tie_break == "first-lex":
        # lex-descending first tuple
        return (cls.rank, tuple(-x for x in cls.first))
    if tie_break == "last-lex":
        return (cls.rank, cls.last)
    raise ValueError(f"unknown tie-break {tie_break!r}; expected one of {TIE_BREAKS}")


@lru_cache(maxsize=32)
def build_order(config: Config, tie_break: str = "first-lex") -> CliqueOrder:
    classes = sorted(equivalence_classes(config), key=lambda c: _class_key(c, tie_break))
    seq: list[MaximalClique] = []
    owner: list[int] = []
    for k, cls in enumerate(classes):
        members = cls.cliques(config)
        seq.extend(members)
        owner.extend([k] * len(members))
    return CliqueOrder(config, tie_break, tuple(seq), tuple(owner), tuple(classes))


# --------------------------------------------------------------------------
# omega by predecessor scan
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class OmegaRecord:
    predecessors: tuple[int, ...]  # positions B < A with #(A \ B) == 1
    witnesses: tuple[int, ...]     # 1-based chain positions i with {a^i} = A \ B


@lru_cache(maxsize=16)
def member_matrix(order: CliqueOrder) -> np.ndarray:
    """Row k lists the point indices of the k-th clique, in chain order (ascending)."""
    idx = point_index(order.config)
    return np.array([[idx[p] for p in c.chain] for c in order.sequence], dtype=np.int64)


@lru_cache(maxsize=16)
def omega_records(order: CliqueOrder) -> tuple[OmegaRecord, ...]:
    members = member_matrix(order)
    m, n = members.shape
    # one row per (clique, dropped chain position); the rest is the facet
    facets = np.concatenate([np.delete(members, i, axis=1) for i in range(n)])
    pos = np.tile(np.arange(m), n)
    dropped = np.repeat(np.arange(1, n + 1), m)
    perm = np.lexsort((pos,) + tuple(facets[:, j] for j in reversed(range(n - 1))))
    fs = facets[perm]
    new_group = np.ones(len(perm), dtype=bool)
    new_group[1:] = np.any(fs[1:] != fs[:-1], axis=1)
    starts = np.maximum.accumulate(np.where(new_group, np.arange(len(perm)), 0))
    preds: list[list[int]] = [[] for _ in range(m)]
    wits: list[list[int]] = [[] for _ in range(m)]
    sorted_pos = pos[perm]
    for k in np.flatnonzero(~new_group).tolist():
        a = int(sorted_pos[k])
        wits[a].append(int(dropped[perm[k]]))
        preds[a].extend(sorted_pos[starts[k]:k].tolist())
    out = []
    for a in range(m):
        if len(preds[a]) != len(wits[a]):
            raise TheoremViolation(
                f"clique {a}: {len(preds[a])} singleton predecessors but "
                f"{len(wits[a])} witness vertices"
            )
        out.append(OmegaRecord(tuple(sorted(preds[a])), tuple(sorted(wits[a]))))
    return tuple(out)


def omega(clique: MaximalClique, order: CliqueOrder) -> int:
    return len(omega_records(order)[order.position(clique)].witnesses)


def omegas(order: CliqueOrder) -> list[int]:
    return [len(r.witnesses) for r in omega_records(order)]


# --------------------------------------------------------------------------
# colon-ideal oracle
# --------------------------------------------------------------------------

def colon_generators(order: CliqueOrder) -> list[list[int]]:
    """Minimal generators of (T_{B^c} : B before A) : T_{A^c}, for each A.

    A generator prod_{v in A \\ B} T_v is encoded as a bitmask over A's chain
    positions (bit i-1 stands for T_{a^i}).
    """
    config = order.config
    t, n, m = len(point_index(config)), config.n, len(order)
    members = member_matrix(order)
    incidence = np.zeros((m, t), dtype=bool)
    incidence[np.repeat(np.arange(m), n), members.ravel()] = True
    weights = 1 << np.arange(n, dtype=np.int64)
    present = np.zeros((m, 1 << n), dtype=bool)
    for pos in range(1, m):
        missing = ~incidence[:pos][:, members[pos]]
        present[pos, missing.astype(np.int64) @ weights] = True
    # submask[s, g] is true when s is a proper submask of g
    codes = np.arange(1 << n)
    submask = ((codes[:, None] & codes[None, :]) == codes[:, None]) & (codes[:, None] != codes[None, :])
    shadowed = (present.astype(np.int64) @ submask.astype(np.int64)) > 0
    minimal = present & ~shadowed
    return [np.flatnonzero(row).tolist() for row in minimal]


@dataclass(frozen=True)
class QuotientRecord:
    clique: int
    omega: int
    witnesses: tuple[tuple[int, ...], ...]  # the chain members a^i
    linear: bool

    def to_json(self) -> dict:
        return {"clique": self.clique, "omega": self.omega, "linear": self.linear}


@dataclass(frozen=True)
class QuotientReport:
    records: tuple[QuotientRecord, ...]

    @property
    def linear(self) -> bool:
        return all(r.linear for r in self.records)

    def top_betti(self) -> tuple[int, int]:
        ws = [r.omega for r in self.records]
        p = max(ws)
        return p, ws.count(p)

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.records]


def verify_linear_quotients(config: Config, order: CliqueOrder | None = None) -> QuotientReport:
    """Check every successive colon ideal is generated by variables.

    Raises TheoremViolation on a non-linear quotient or when the oracle's
    generator count differs from the predecessor-scan omega.
    """
    if order is None:
        order = build_order(config)
    scan = omega_records(order)
    gens = colon_generators(order)
    n = config.n
    records = []
    for pos, (clique, rec, g) in enumerate(zip(order.sequence, scan, gens)):
        linear = all(bin(m).count("1") == 1 for m in g)
        if not linear:
            raise TheoremViolation(
                f"{config}: colon ideal at clique {pos} {clique.chain} has minimal generators "
                f"of degrees {sorted(bin(m).count('1') for m in g)}"
            )
        oracle_wit = tuple(sorted(m.bit_length() for m in g))
        if oracle_wit != rec.witnesses:
            raise TheoremViolation(
                f"{config}: clique {pos}: oracle witnesses {oracle_wit} != scan {rec.witnesses}"
            )
        if len(oracle_wit) > n - 1 or n in oracle_wit:
            raise TheoremViolation(f"{config}: clique {pos} has omega witnesses {oracle_wit}")
        wit_pts = tuple(clique.chain[i - 1] for i in oracle_wit)
        records.append(QuotientRecord(pos, len(oracle_wit), wit_pts, True))
    return QuotientReport(tuple(records))


def projective_dimension(config: Config, tie_break: str = "first-lex") -> int:
    return max(omegas(build_order(config, tie_break)))


def top_betti(config: Config, tie_break: str = "first-lex") -> tuple[int, int]:
    """(p, beta_p): projective dimension of ini(J)^dual and its top total Betti number."""
    ws = omegas(build_order(config, tie_break))
    p = max(ws)
    return p, ws.count(p)


def singleton_swaps_agree(cls: EquivalenceClass) -> bool:
    """Within one class: diff(A, B) == {k+1} iff sgn(B) swaps s_k, s_{k+1} of sgn(A).

    diff compares chains position by position.  Checked over all member pairs.
    """
    chains = {}
    for s in cls.signatures:
        chain = [cls.first]
        for j in s:
            b = list(chain[-1])
            b[j - 1] -= 1
            b[j] += 1
            chain.append(tuple(b))
        chains[s] = chain
    for s in cls.signatures:
        for t in cls.signatures:
            if s == t:
                continue
            diff = [i for i, (a, b) in enumerate(zip(chains[s], chains[t]), start=1) if a != b]
            swapped = [
                k for k in range(1, len(s))
                if s[:k - 1] + (s[k], s[k - 1]) + s[k + 1:] == t
            ]
            if (len(diff) == 1) != bool(swapped):
                return False
            if swapped and diff != [swapped[0] + 1]:
                return False
    return True
