"""K3-type graphs: the modular graphs G_n with their TMC restriction and
distinguished component G_{n,3}, and finite windows of the graph over Z.

Two K3-types are adjacent exactly when they share two objects (possibly one
object twice); the shared 2-multiset is the edge color.  No multiple edges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .colors import (
    DomainError,
    Triple,
    all_k3_types_mod,
    k3_window,
    mod_reduce,
    nu,
)
from .graphs import UGraph


def k3_adjacent(u: Triple, v: Triple) -> bool:
    """Distinct 3-multisets sharing exactly two objects."""
    if u == v:
        return False
    shared = _shared_pair(u, v)
    return shared is not None


def _shared_pair(u: Triple, v: Triple):
    rest = list(v)
    shared = []
    for x in u:
        if x in rest:
            rest.remove(x)
            shared.append(x)
    return tuple(sorted(shared)) if len(shared) == 2 else None


def is_tmc3(t: Triple) -> bool:
    return len(set(t)) == 3


@dataclass
class K3Graph:
    """A K3-type graph over Z_n (n set) or a window over Z (n is None)."""

    n: int | None
    vertices: list[Triple]                    # sorted triples, sorted
    index: dict[Triple, int]
    adjacency: list[set[int]]
    edge_colors: dict[tuple[int, int], tuple[int, int]]
    diagnostics: dict = field(default_factory=dict)

    def subgraph(self, keep) -> "K3Graph":
        keep = sorted(keep)
        keep_set = set(keep)
        remap = {i: j for j, i in enumerate(keep)}
        return K3Graph(
            n=self.n,
            vertices=[self.vertices[i] for i in keep],
            index={self.vertices[i]: remap[i] for i in keep},
            adjacency=[
                {remap[j] for j in self.adjacency[i] if j in keep_set}
                for i in keep
            ],
            edge_colors={
                (remap[i], remap[j]): c
                for (i, j), c in self.edge_colors.items()
                if i in keep_set and j in keep_set
            },
        )

    def ugraph(self) -> UGraph:
        return UGraph.from_adjacency(self.adjacency)

    def components(self) -> list[list[int]]:
        return self.ugraph().components()


def _graph_from_vertices(vertices: list[Triple], n: int | None) -> K3Graph:
    """Edges by replacing one element of each kept pair via nu-completion."""
    vertices = sorted(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    adjacency: list[set[int]] = [set() for _ in vertices]
    colors: dict[tuple[int, int], tuple[int, int]] = {}
    for i, t in enumerate(vertices):
        for drop in range(3):
            kept = tuple(t[q] for q in range(3) if q != drop)
            for z in set(nu(kept[0], kept[1], n)):
                s = tuple(sorted((*kept, z)))
                if s == t:
                    continue
                j = index.get(s)
                if j is None:
                    continue
                adjacency[i].add(j)
                adjacency[j].add(i)
                colors[(min(i, j), max(i, j))] = tuple(sorted(kept))
    return K3Graph(n, vertices, index, adjacency, colors)


@dataclass
class G3Build:
    """Result of building the modular K3-type graphs for one n."""

    n: int
    g_n: K3Graph              # all K3-types of Z_n
    gcd1_vertices: list[Triple]
    g_prime: K3Graph          # induced on TMC types
    g_n3: K3Graph             # component of 123 inside the TMC subgraph
    components: list[list[Triple]]   # TMC gcd(.,n)=1 components, as triples


def build_g3(n: int) -> G3Build:
    """Build G_n, its TMC restriction, and the component of 123."""
    if n < 7 or n % 2 == 0:
        raise DomainError(f"n must be odd >= 7, got {n}")
    all_types = all_k3_types_mod(n)
    g_n = _graph_from_vertices(all_types, n)
    gcd1 = [t for t in all_types if math.gcd(*t) == 1]
    tmc_idx = [i for i, t in enumerate(g_n.vertices) if is_tmc3(t)]
    g_prime = g_n.subgraph(tmc_idx)
    base = (1, 2, 3)
    if base not in g_prime.index:
        raise DomainError(f"123 is not a TMC K3-type mod {n}")
    comps = g_prime.components()
    comp_of_123 = next(
        c for c in comps if g_prime.index[base] in c
    )
    g_n3 = g_prime.subgraph(comp_of_123)
    report_idx = {
        i for i, t in enumerate(g_prime.vertices) if math.gcd(*t, n) == 1
    }
    report_comps = [
        sorted(g_prime.vertices[i] for i in c)
        for c in comps
        if set(c) <= report_idx
    ]
    build = G3Build(
        n=n,
        g_n=g_n,
        gcd1_vertices=gcd1,
        g_prime=g_prime,
        g_n3=g_n3,
        components=report_comps,
    )
    return build


def g3_window(cap: int) -> K3Graph:
    """gcd-1 K3-types over Z with top color <= cap, with window edges."""
    if cap < 2:
        raise DomainError("cap must be >= 2")
    return _graph_from_vertices(k3_window(cap), None)


def reduce_identify(window: K3Graph, n: int) -> K3Graph:
    """Reduce all window colors mod n and identify equal images: the
    modular graph a large enough window projects onto."""
    reduced = [
        tuple(sorted(mod_reduce(c, n) for c in t)) for t in window.vertices
    ]
    verts_sorted = sorted(set(reduced))
    vid = {v: i for i, v in enumerate(verts_sorted)}
    adjacency: list[set[int]] = [set() for _ in verts_sorted]
    colors: dict[tuple[int, int], tuple[int, int]] = {}
    for i in range(len(window.vertices)):
        ri = vid[reduced[i]]
        for j in window.adjacency[i]:
            rj = vid[reduced[j]]
            if ri == rj:
                continue
            adjacency[ri].add(rj)
            adjacency[rj].add(ri)
            key = (min(i, j), max(i, j))
            ckey = (min(ri, rj), max(ri, rj))
            col = window.edge_colors[key]
            colors[ckey] = tuple(sorted(mod_reduce(c, n) for c in col))
    return K3Graph(
        n=n,
        vertices=verts_sorted,
        index={v: i for i, v in enumerate(verts_sorted)},
        adjacency=adjacency,
        edge_colors=colors,
    )


def to_dot(g: K3Graph) -> str:
    """Deterministic DOT export; vertex labels are the sorted triples."""
    def name(t):
        return '"' + "".join(str(c) for c in t) + '"' if max(t) < 10 else '"' + ".".join(map(str, t)) + '"'

    lines = ["graph k3 {"]
    for t in g.vertices:
        lines.append(f"  {name(t)};")
    for (i, j) in sorted(g.edge_colors):
        col = g.edge_colors[(i, j)]
        label = ".".join(str(c) for c in col)
        lines.append(f'  {name(g.vertices[i])} -- {name(g.vertices[j])} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_jsonl(g: K3Graph) -> str:
    """One vertex record per line: colors, degree, component id."""
    import json

    comp_of = {}
    for cid, comp in enumerate(g.components()):
        for i in comp:
            comp_of[i] = cid
    lines = []
    for i, t in enumerate(g.vertices):
        lines.append(
            json.dumps(
                {
                    "colors": list(t),
                    "degree": len(g.adjacency[i]),
                    "component": comp_of.get(i, -1),
                },
                separators=(",", ":"),
            )
        )
    return "\n".join(lines) + "\n"
