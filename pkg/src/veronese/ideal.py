"""Algebraic artifacts: generators of I_{d,alpha}, quadratic Groebner binomials,
the Alexander dual generators, and plain-text exports for a computer-algebra system.

Presentation variables are T_i where i is the global (lex-descending) index of
the point.  Exports carry a comment line mapping each index to its exponent
tuple, so a script can be read back without recomputing anything.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import combinations

from .cliques import build_graph, enumerate_maximal_cliques
from .lattice import Config, Point, enumerate_points, point_index
from .sorting import is_sorted_pair, sort_pair

EXPORT_KINDS = ("ideal", "groebner", "dual")
INDEX_MAP_PREFIX = "-- index map: "


@dataclass(frozen=True)
class BinomialPair:
    """T_lead[0] T_lead[1] - T_trail[0] T_trail[1]; the lead pair is unsorted."""

    lead: tuple[int, int]
    trail: tuple[int, int]

    def to_json(self) -> dict:
        return {"lead": list(self.lead), "trail": list(self.trail)}


@dataclass(frozen=True)
class DualGenerator:
    support: frozenset[int]

    @property
    def degree(self) -> int:
        return len(self.support)

    def to_json(self) -> list[int]:
        return sorted(self.support)


def generators_I(config: Config) -> list[Point]:
    """Exponent tuples of the minimal monomial generators of I_{d,alpha}."""
    return list(enumerate_points(config))


def groebner_pairs(config: Config) -> list[BinomialPair]:
    """One binomial per unsorted pair of generators, leading term first.

    The trail of a pair is its sort, which always lands on a sorted pair
    (possibly a repeated point, giving T_b^2).
    """
    pts = enumerate_points(config)
    idx = point_index(config)
    graph = build_graph(config)
    out = []
    for i, j in combinations(range(len(pts)), 2):
        if graph.adjacent(i, j):
            continue
        b1, b2 = sort_pair(pts[i], pts[j])
        out.append(BinomialPair((i, j), tuple(sorted((idx[b1], idx[b2])))))
    return out


def binomial_holds(pair: BinomialPair, config: Config) -> bool:
    """x^{a1} x^{a2} == x^{b1} x^{b2} under T_c -> x^c."""
    pts = enumerate_points(config)
    (i, j), (k, l) = pair.lead, pair.trail
    lhs = tuple(x + y for x, y in zip(pts[i], pts[j]))
    rhs = tuple(x + y for x, y in zip(pts[k], pts[l]))
    return lhs == rhs and is_sorted_pair(pts[k], pts[l])


def alexander_dual_generators(config: Config) -> list[DualGenerator]:
    """Complements of the maximal cliques, in clique enumeration order."""
    t = len(enumerate_points(config))
    everything = frozenset(range(t))
    return [DualGenerator(everything - c.vertices(config)) for c in enumerate_maximal_cliques(config)]


def is_vertex_cover(support, edges) -> bool:
    return all(u in support or v in support for u, v in edges)


# --------------------------------------------------------------------------
# exports
# --------------------------------------------------------------------------

def _monomial(exps, name: str) -> str:
    parts = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            parts.append(f"{name}_{i}")
        elif e > 1:
            parts.append(f"{name}_{i}^{e}")
    return "*".join(parts) if parts else "1"


def _header(config: Config) -> list[str]:
    pts = enumerate_points(config)
    mapping = {str(i): list(p) for i, p in enumerate(pts)}
    alpha = ",".join(map(str, config.alpha))
    return [
        f"-- Veronese-type config n={config.n} d={config.d} alpha={alpha}",
        INDEX_MAP_PREFIX + json.dumps(mapping, separators=(",", ":")),
    ]


def export_cas(config: Config, what: str) -> str:
    """Plain-text script in Macaulay2-style syntax for the requested object."""
    if what not in EXPORT_KINDS:
        raise ValueError(f"unknown export {what!r}; expected one of {EXPORT_KINDS}")
    lines = _header(config)
    t = len(enumerate_points(config))
    if what == "ideal":
        gens = ", ".join(_monomial(p, "x") for p in generators_I(config))
        lines.append(f"S = QQ[x_1..x_{config.n}];")
        lines.append(f"I = ideal({gens});")
    elif what == "groebner":
        lines.append(f"R = QQ[T_0..T_{t - 1}];")
        body = [
            f"  T_{p.lead[0]}*T_{p.lead[1]} - T_{p.trail[0]}*T_{p.trail[1]}"
            for p in groebner_pairs(config)
        ]
        lines.append("G = {" + (",\n".join(body).lstrip() if body else "") + "};")
    else:
        lines.append(f"R = QQ[T_0..T_{t - 1}];")
        body = ["  " + "*".join(f"T_{v}" for v in g.to_json()) for g in alexander_dual_generators(config)]
        lines.append("D = monomialIdeal(" + (",\n".join(body).lstrip()) + ");")
    return "\n".join(lines) + "\n"


def read_index_map(text: str) -> dict[int, Point]:
    for line in text.splitlines():
        if line.startswith(INDEX_MAP_PREFIX):
            raw = json.loads(line[len(INDEX_MAP_PREFIX):])
            return {int(k): tuple(v) for k, v in raw.items()}
    raise ValueError("no index map line in export")


_MONO = re.compile(r"x_(\d+)(?:\^(\d+))?")


def read_ideal_export(text: str, n: int) -> list[Point]:
    """Exponent tuples from the ``I = ideal(...)`` line of an ideal export."""
    match = re.search(r"I = ideal\((.*)\);", text)
    if match is None:
        raise ValueError("no ideal line in export")
    out = []
    for term in match.group(1).split(","):
        exps = [0] * n
        for var, power in _MONO.findall(term):
            exps[int(var) - 1] += int(power or 1)
        out.append(tuple(exps))
    return out


def ideal_to_json(config: Config) -> dict:
    return {"config": config.to_dict(), "generators": [list(p) for p in generators_I(config)]}


def ideal_from_json(doc: dict) -> tuple[Config, list[Point]]:
    return Config.from_dict(doc["config"]), [tuple(p) for p in doc["generators"]]


def groebner_to_json(config: Config) -> list[dict]:
    return [p.to_json() for p in groebner_pairs(config)]


def dual_to_json(config: Config) -> list[list[int]]:
    return [g.to_json() for g in alexander_dual_generators(config)]
