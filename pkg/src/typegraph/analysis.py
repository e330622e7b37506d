"""Metrics and structural checks across ranges of n: connectivity,
diameters, totient bounds, the degree-6 triangle structure, the
isolated-vertex census and the TMC-connectivity scan.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .colors import Card, canonical_k4, is_tmc
from .graphs import UGraph, totient
from .hexagons import hexagons_at
from .k3graph import build_g3
from .k4graph import (
    K4Graph,
    build_g_n4,
    cts_of,
    phi_reduce,
    tmc_subgraph,
)


def components(g: UGraph) -> list[list[int]]:
    if g.n == 0:
        raise ValueError("empty graph")
    return g.components()


def diameter(g: UGraph, mode: str = "exact") -> int | tuple[int, int]:
    """Exact diameter, or (lower, upper) bounds from a double sweep plus a
    center eccentricity."""
    if g.n == 0:
        raise ValueError("empty graph")
    if mode == "exact":
        return g.diameter_exact()
    if mode == "bounds":
        return g.diameter_bounds()
    raise ValueError(f"unknown mode {mode!r}")


@dataclass
class MetricsRow:
    n: int
    v3: int                 # |V(G_{n,3})|
    v4: int                 # |V(G_{n,4})|
    v6: int                 # degree-6 vertices of G_{n,4}
    tmc: int
    tmc_components: int
    diam4: int
    phi: int
    diam3: int

    @property
    def diam_over_n(self) -> float:
        return self.diam4 / self.n

    @property
    def diam_over_v13(self) -> float:
        return self.diam4 / self.v4 ** (1 / 3)

    @property
    def v6_share(self) -> float:
        return self.v6 / self.v4

    def csv(self) -> str:
        return (
            f"{self.n},{self.v3},{self.v4},{self.v6},{self.tmc},"
            f"{self.tmc_components},{self.diam4},{self.diam3},{self.phi},"
            f"{self.diam_over_n:.4f},{self.diam_over_v13:.4f},{self.v6_share:.4f}"
        )


CSV_HEADER = (
    "n,V3,V4,V6,tmc,tmc_components,diam4,diam3,phi,"
    "diam4_over_n,diam4_over_V4_cuberoot,V6_share"
)


def metrics_row(n: int, g4: K4Graph | None = None) -> MetricsRow:
    g4 = g4 or build_g_n4(n)
    u4 = UGraph.from_adjacency(g4.adjacency)
    t = tmc_subgraph(g4)
    tcomps = (
        len(UGraph.from_adjacency(t.adjacency).components()) if t.vertices else 0
    )
    b3 = build_g3(n)
    u3 = b3.g_n3.ugraph()
    return MetricsRow(
        n=n,
        v3=len(b3.g_n3.vertices),
        v4=len(g4.vertices),
        v6=sum(1 for i in range(len(g4.vertices)) if g4.degree(i) == 6),
        tmc=len(t.vertices),
        tmc_components=tcomps,
        diam4=u4.diameter_exact(),
        phi=totient(n),
        diam3=u3.diameter_exact(),
    )


@dataclass
class Theorem1Report:
    n: int
    v6_count: int
    v4_count: int
    checked: int
    counterexamples: list[str] = field(default_factory=list)
    hexagon_type_counts: dict[int, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def theorem1_check(g: K4Graph) -> Theorem1Report:
    """Every degree-6 vertex carries exactly three CTs meeting pairwise only
    in the vertex; its CT pairs span six butterflies and its hexagon traces
    are counted (four generically, fewer with degeneracies)."""
    rep = Theorem1Report(
        n=g.n or 0,
        v6_count=0,
        v4_count=len(g.vertices),
        checked=0,
    )
    for i, card in enumerate(g.vertices):
        if g.degree(i) != 6:
            continue
        rep.v6_count += 1
        rep.checked += 1
        cts = cts_of(card, g.n)
        quads = [ct.quadruple for ct in cts]
        if len(set(quads)) != 3:
            rep.counterexamples.append(f"{card}: CT quadruples {quads}")
            continue
        members = [set(ct.members) for ct in cts]
        me = canonical_k4(card)
        for a in range(3):
            for b in range(a + 1, 3):
                inter = members[a] & members[b]
                if inter != {me}:
                    rep.counterexamples.append(
                        f"{card}: CTs {a},{b} share {sorted(inter)}"
                    )
        # butterflies: each CT pair shares the vertex; two center choices
        for a in range(3):
            for b in range(a + 1, 3):
                qa, qb = list(quads[a]), list(quads[b])
                common = []
                rest = list(qb)
                for x in qa:
                    if x in rest:
                        rest.remove(x)
                        common.append(x)
                if len(common) != 2:
                    rep.counterexamples.append(
                        f"{card}: CT pair {a},{b} shares {common}"
                    )
        n_hex = len(
            {
                (h.anchor_color, h.edge_type, frozenset(h.cards))
                for h in hexagons_at(card, g.n)
            }
        )
        rep.hexagon_type_counts[n_hex] = rep.hexagon_type_counts.get(n_hex, 0) + 1
    return rep


@dataclass
class DiameterScalingRow:
    n: int
    v4: int
    diam: int
    witness_distance: int | None   # to the reduced 112(n-1)nn class
    witness_valid: bool

    @property
    def diam_over_n(self) -> float:
        return self.diam / self.n

    @property
    def diam_over_v13(self) -> float:
        return self.diam / self.v4 ** (1 / 3)


def diameter_scaling(n_range, graphs: dict[int, K4Graph] | None = None):
    """Exact diameters over a range, with the distance from 110110's class
    to the reduction of 112(n-1)nn when that reduction is a vertex (its
    faces are not valid mod n, which is reported, not patched)."""
    rows = []
    for n in n_range:
        g = (graphs or {}).get(n) or build_g_n4(n)
        u = UGraph.from_adjacency(g.adjacency)
        d = u.diameter_exact()
        base = canonical_k4((1, 1, 0, 1, 1, 0))
        target, valid = phi_reduce((1, 1, 2, n - 1, n, n), n)
        wd = None
        if valid and base in g.index and target in g.index:
            dist = u.bfs(g.index[base])
            wd = int(dist[g.index[target]])
        rows.append(
            DiameterScalingRow(
                n=n,
                v4=len(g.vertices),
                diam=d,
                witness_distance=wd,
                witness_valid=valid,
            )
        )
    return rows


def conjecture_scan(n_range, graphs: dict[int, K4Graph] | None = None):
    """Connectivity verdicts for the TMC subgraphs: per n, connected or the
    component-size histogram."""
    out = []
    for n in n_range:
        g = (graphs or {}).get(n) or build_g_n4(n)
        t = tmc_subgraph(g)
        if not t.vertices:
            out.append({"n": n, "verdict": "empty", "components": []})
            continue
        comps = UGraph.from_adjacency(t.adjacency).components()
        sizes = sorted((len(c) for c in comps), reverse=True)
        out.append(
            {
                "n": n,
                "verdict": "connected" if len(comps) == 1 else "disconnected",
                "components": sizes,
            }
        )
    return out


def fit_band(values) -> tuple[float, float, float]:
    """(min, max, max/min) of a positive sequence."""
    lo, hi = min(values), max(values)
    return lo, hi, hi / lo


def loglog_slope(xs, ys) -> float:
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])
