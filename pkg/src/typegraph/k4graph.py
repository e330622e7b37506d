"""K4-type graphs: neighbor generation, canonical triangles, windows of the
infinite graph and the modular graphs G_{n,4}.

Two K4-types are adjacent when they share exactly two K3-faces.  The
constructive form of that adjacency: pick a position p of a card and its
opposite position; of the two faces avoiding p (both contain the opposite
color), swap the two non-opposite entries of one face in place and recompute
the color at p as the common completion of the two faces through p.  Each
opposite pair of positions contributes one canonical triangle (CT): the
vertex itself plus the results at p and at its opposite, all three sharing
the 4-multiset left after deleting the pair.

The completion is unique except at vertices whose two faces through p are
equal multisets (the 011011 family); there the two candidates jointly
describe the degenerate CT (an edge plus a loop), and the single-result
`neighbor` picks the candidate consistent with the opposite position.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field

from .colors import (
    Card,
    DomainError,
    FACE_POSITIONS,
    OPPOSITE,
    canonical_k4,
    faces,
    is_positive_doubled,
    is_tmc,
    is_valid_card,
    nu,
    phi_reduce_card,
)

# For each position p, the indices (into FACE_POSITIONS) of the two faces
# not containing p, in face order: these are the swap candidates.
FACES_AVOIDING = tuple(
    tuple(i for i, pos in enumerate(FACE_POSITIONS) if p not in pos)
    for p in range(6)
)
# ... and the two faces through p, whose closure determines the new color.
FACES_THROUGH = tuple(
    tuple(i for i, pos in enumerate(FACE_POSITIONS) if p in pos)
    for p in range(6)
)

LOOP_EXEMPT: Card = (0, 1, 1, 0, 1, 1)  # the one type allowed to repeat opposites


class AmbiguousNeighborError(DomainError):
    """The recomputed color cannot be resolved to a single neighbor."""


class NoNeighborError(DomainError):
    """No color completes both faces; the input card was invalid."""


@dataclass(frozen=True)
class NeighborResult:
    card: Card          # raw result card (aligned with the input positions)
    h: int              # recomputed color at the changed position
    is_self: bool       # result represents the same K4-type as the input


def _vertex_ok(card: Card) -> bool:
    """Doubled types with zero-free repeated triple are never vertices,
    over Z or mod n; the 0cc0cc family survives (gcd filters trim it)."""
    return not is_positive_doubled(card)


def _swap_candidates(card: Card, p: int, which: int, n: int | None):
    """Swapped working card and candidate colors for position p."""
    opp = OPPOSITE[p]
    face = FACE_POSITIONS[FACES_AVOIDING[p][which]]
    i, j = [q for q in face if q != opp]
    work = list(card)
    work[i], work[j] = work[j], work[i]
    f1, f2 = FACES_THROUGH[p]
    x, y = [work[q] for q in FACE_POSITIONS[f1] if q != p]
    u, v = [work[q] for q in FACE_POSITIONS[f2] if q != p]
    cand = set(nu(x, y, n)) & set(nu(u, v, n))
    return work, tuple(sorted(cand))


def neighbor_candidates(
    card: Card, p: int, which: int, n: int | None
) -> list[tuple[Card, int]]:
    """All candidate result cards of a move; candidates that are not
    vertices (doubled with zero-free repeated triple) are dropped."""
    work, cand = _swap_candidates(card, p, which, n)
    outs = []
    for h in cand:
        work[p] = h
        out = tuple(work)
        if not _vertex_ok(out):
            continue
        outs.append((out, h))
    return outs


def neighbor(card: Card, p: int, which: int = 0, n: int | None = None) -> NeighborResult:
    """Apply the neighbor move at position p (0..5), swapping inside the
    `which`-th (0 or 1) of the two faces avoiding p.

    Returns the raw result card, the recomputed color h, and whether the
    result is the same K4-type (a loop).  Resolution of two-valued
    completions: at the type 011011 the move reproducing the input is
    discarded; elsewhere the candidate whose color agrees with the unique
    completion at the opposite position wins, and a remaining tie is broken
    toward the non-loop result (the loop is carried by the opposite
    position).
    """
    cands = neighbor_candidates(card, p, which, n)
    if not cands:
        raise NoNeighborError(f"no completion at position {p} of {card}")
    self_canon = canonical_k4(card)
    if len(cands) > 1:
        if self_canon == LOOP_EXEMPT:
            cands = [
                (out, h) for out, h in cands if canonical_k4(out) != self_canon
            ]
        else:
            opp_cands = neighbor_candidates(card, OPPOSITE[p], 0, n)
            if len(opp_cands) == 1:
                hs = {h for _, h in cands}
                if opp_cands[0][1] in hs:
                    cands = [c for c in cands if c[1] == opp_cands[0][1]]
            if len(cands) > 1:
                nonself = [
                    c for c in cands if canonical_k4(c[0]) != self_canon
                ]
                if len(nonself) == 1:
                    cands = nonself
    if len(cands) != 1:
        raise AmbiguousNeighborError(f"{card} at {p}: {cands}")
    out, h = cands[0]
    return NeighborResult(out, h, canonical_k4(out) == self_canon)


PAIR_POSITIONS = ((0, 3), (1, 4), (2, 5))


@dataclass(frozen=True)
class CanonicalTriangle:
    pair: int                   # 0: (a,d), 1: (b,e), 2: (c,f)
    quadruple: tuple[int, int, int, int]
    members: tuple[Card, ...]   # distinct canonical member types, sorted
    member_cards: tuple[Card, Card, Card]   # (t, t', t'') raw
    degeneracy: int             # number of distinct members: 3, 2 or 1
    has_loop: bool              # some move returned the vertex itself

    def edges(self) -> set[tuple[Card, Card]]:
        """Undirected edges of the triangle after identifying coincident
        members; a coincidence turns the third side into a loop."""
        t, t1, t2 = (canonical_k4(c) for c in self.member_cards)
        if self.degeneracy == 1:
            return {(t, t)}
        if self.degeneracy == 2:
            rep = t1 if t1 == t2 else t
            other = ({t, t1, t2} - {rep}).pop()
            return {tuple(sorted((rep, other))), (rep, rep)}
        return {
            tuple(sorted(p)) for p in ((t, t1), (t, t2), (t1, t2))
        }


def cts_of(card: Card, n: int | None = None) -> list[CanonicalTriangle]:
    """The three canonical triangles at a K4-type, one per opposite pair.

    Deleting pair (a,d), (b,e) or (c,f) leaves the shared 4-multiset; the
    other two members are the neighbor moves at the two positions of the
    pair.  Coinciding members classify the degeneracy.
    """
    out = []
    for pair, (p, q) in enumerate(PAIR_POSITIONS):
        quad = tuple(sorted(card[r] for r in range(6) if r not in (p, q)))
        r1 = neighbor(card, p, 0, n)
        r2 = neighbor(card, q, 0, n)
        cards = (card, r1.card, r2.card)
        members = tuple(sorted({canonical_k4(c) for c in cards}))
        out.append(
            CanonicalTriangle(
                pair=pair,
                quadruple=quad,  # type: ignore[arg-type]
                members=members,
                member_cards=cards,
                degeneracy=len(members),
                has_loop=r1.is_self or r2.is_self,
            )
        )
    return out


def ct_quadruple_valid(quad, n: int | None = None) -> bool:
    """True iff some pairing of the 4-multiset has a common completion and
    the gcd of its members is 1 (the CT existence test)."""
    a, b, c, d = quad
    g = math.gcd(a, b, c, d)
    if (g != 1) if n is None else (math.gcd(g, n) != 1):
        return False
    pairings = (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c)))
    return any(set(nu(*u, n)) & set(nu(*v, n)) for u, v in pairings)


def shared_face_count(u: Card, v: Card) -> int:
    """Number of K3-faces (as a multiset) shared by two cards."""
    fu = list(faces(u))
    shared = 0
    for f in faces(v):
        if f in fu:
            fu.remove(f)
            shared += 1
    return shared


def oracle_adjacent(u: Card, v: Card) -> bool:
    """Definitional adjacency: distinct types sharing exactly two faces."""
    return u != v and shared_face_count(u, v) == 2


# ---------------------------------------------------------------------------
# Graph containers


@dataclass
class TypeEdge:
    u: Card
    v: Card
    weak: int                        # color fixed at the opposite position
    strong: frozenset                # the two shared K3-faces
    is_loop: bool = False


@dataclass
class K4Graph:
    """A finite K4-type graph: a window of the infinite graph (n is None)
    or a full modular graph over Z_n.

    Loops are stored once per (vertex, CT quadruple); a vertex is incident
    to at most three canonical triangles, each contributing two incidences
    (two edges, or an edge plus a loop, or a single loop), so the degree
    counts a loop once and is bounded by 6.
    """

    n: int | None
    vertices: list[Card]                       # canonical cards, sorted
    index: dict[Card, int]
    adjacency: list[set[int]]                  # proper edges
    loops: dict[int, set[tuple]]               # vertex -> loop quadruples
    edge_labels: dict[tuple[int, int], TypeEdge]
    edge_quads: dict[tuple[int, int], set[tuple]] = field(default_factory=dict)
    boundary: set[int] = field(default_factory=set)   # windows only
    diagnostics: dict = field(default_factory=dict)

    def degree(self, i: int) -> int:
        return len(self.adjacency[i]) + len(self.loops.get(i, ()))

    def edge_set(self) -> set[tuple[int, int]]:
        out = {
            (min(i, j), max(i, j))
            for i in range(len(self.vertices))
            for j in self.adjacency[i]
        }
        out |= {(i, i) for i in self.loops}
        return out

    def interior(self) -> list[int]:
        return [i for i in range(len(self.vertices)) if i not in self.boundary]


def _strong_color(card: Card, out: Card, p: int, which: int) -> frozenset:
    fixed = FACE_POSITIONS[FACES_AVOIDING[p][1 - which]]
    swapped = FACE_POSITIONS[FACES_AVOIDING[p][which]]
    return frozenset(
        (
            tuple(sorted(card[q] for q in fixed)),
            tuple(sorted(out[q] for q in swapped)),
        )
    )


def move_quadruple(card: Card, p: int) -> tuple:
    """The 4-multiset shared along any move at position p: the colors off
    the opposite pair through p."""
    q = OPPOSITE[p]
    return tuple(sorted(card[r] for r in range(6) if r not in (p, q)))


def _assemble(n: int | None, vertex_cards: list[Card], cap: int | None) -> K4Graph:
    """Run all neighbor moves from every vertex, canonicalize targets and
    record labels, loops, boundary marks and diagnostics."""
    vertices = sorted(vertex_cards)
    index = {v: i for i, v in enumerate(vertices)}
    adjacency: list[set[int]] = [set() for _ in vertices]
    loops: dict[int, set[tuple]] = {}
    labels: dict[tuple[int, int], TypeEdge] = {}
    edge_quads: dict[tuple[int, int], set[tuple]] = {}
    boundary: set[int] = set()
    ambiguous = 0
    dropped = 0
    multi_proper = 0
    for i, card in enumerate(vertices):
        for p in range(6):
            for which in (0, 1):
                results = neighbor_candidates(card, p, which, n)
                if len(results) > 1:
                    ambiguous += 1
                    if sum(1 for out, _ in results if canonical_k4(out) != card) > 1:
                        multi_proper += 1
                quad = move_quadruple(card, p)
                for out, h in results:
                    if cap is not None and max(out) > cap:
                        boundary.add(i)
                        continue
                    tgt = canonical_k4(out)
                    if tgt == card and card == LOOP_EXEMPT:
                        continue
                    if tgt == card:
                        loops.setdefault(i, set()).add(quad)
                        key = (i, i)
                    else:
                        j = index.get(tgt)
                        if j is None:
                            # can only happen mod n if reduction raised the
                            # gcd, which valid faces rule out; keep a counter
                            dropped += 1
                            continue
                        adjacency[i].add(j)
                        adjacency[j].add(i)
                        key = (min(i, j), max(i, j))
                    edge_quads.setdefault(key, set()).add(quad)
                    if key not in labels:
                        labels[key] = TypeEdge(
                            vertices[key[0]],
                            vertices[key[1]],
                            card[OPPOSITE[p]],
                            _strong_color(card, out, p, which),
                            is_loop=key[0] == key[1],
                        )
    g = K4Graph(
        n=n,
        vertices=vertices,
        index=index,
        adjacency=adjacency,
        loops=loops,
        edge_labels=labels,
        edge_quads=edge_quads,
        boundary=boundary,
    )
    g.diagnostics["ambiguous_moves"] = ambiguous
    g.diagnostics["multi_proper_moves"] = multi_proper
    g.diagnostics["dropped_targets"] = dropped
    if cap is not None:
        g.diagnostics["cap"] = cap
    return g


def window_cards(cap: int) -> list[Card]:
    """Canonical gcd-1 K4-types over Z with all colors <= cap satisfying the
    opposite-pair vertex constraints."""
    if cap < 1:
        raise DomainError("cap must be >= 1")
    seen: set[Card] = set()
    for a in range(cap + 1):
        for b in range(cap + 1):
            for c in set(nu(a, b)):
                if c > cap:
                    continue
                for d in range(cap + 1):
                    for e in set(nu(c, d)):
                        if e > cap:
                            continue
                        for f in set(nu(a, e)) & set(nu(b, d)):
                            if f > cap:
                                continue
                            card = (a, b, c, d, e, f)
                            if math.gcd(*card) != 1:
                                continue
                            if not _vertex_ok(card):
                                continue
                            seen.add(canonical_k4(card))
    return sorted(seen)


def g4_window(cap: int) -> K4Graph:
    """Finite window of the infinite K4-type graph: all valid gcd-1 types
    with colors <= cap; moves whose result exceeds the cap mark the source
    as boundary.  Interior vertices carry their full neighborhoods."""
    return _assemble(None, window_cards(cap), cap)


def modular_cards(n: int) -> list[Card]:
    """Canonical face-valid cards over Z_n with colors in 0..(n-1)/2 and
    gcd(colors, n) = 1."""
    k = (n - 1) // 2
    seen: set[Card] = set()
    for a in range(k + 1):
        for b in range(k + 1):
            for c in set(nu(a, b, n)):
                for d in range(k + 1):
                    for e in set(nu(c, d, n)):
                        for f in set(nu(a, e, n)) & set(nu(b, d, n)):
                            card = (a, b, c, d, e, f)
                            if math.gcd(*card, n) != 1:
                                continue
                            if not _vertex_ok(card):
                                continue
                            seen.add(canonical_k4(card))
    return sorted(seen)


def build_g_n4(n: int) -> K4Graph:
    """The modular K4-type graph over Z_n by direct enumeration, with edges
    from the modular neighbor rule."""
    if n < 5 or n % 2 == 0:
        raise DomainError(f"n must be odd >= 5, got {n}")
    return _assemble(n, modular_cards(n), None)


def phi_reduce(card: Card, n: int) -> tuple[Card, bool]:
    """Reduce a card over Z mod n and canonicalize; the flag reports whether
    the reduced faces are all valid mod n."""
    red = phi_reduce_card(card, n)
    return canonical_k4(red), is_valid_card(red, n)


def tmc_subgraph(g: K4Graph) -> K4Graph:
    """Induced subgraph on the totally multicolored vertices; loops at
    non-TMC endpoints disappear with their vertices."""
    keep = [i for i, v in enumerate(g.vertices) if is_tmc(v)]
    keep_set = set(keep)
    remap = {i: j for j, i in enumerate(keep)}
    vertices = [g.vertices[i] for i in keep]
    adjacency = [
        {remap[j] for j in g.adjacency[i] if j in keep_set} for i in keep
    ]
    loops = {remap[i]: set(q) for i, q in g.loops.items() if i in keep_set}
    labels = {}
    for (i, j), e in g.edge_labels.items():
        if i in keep_set and j in keep_set:
            labels[(remap[i], remap[j])] = e
    return K4Graph(
        n=g.n,
        vertices=vertices,
        index={v: i for i, v in enumerate(vertices)},
        adjacency=adjacency,
        loops=loops,
        edge_labels=labels,
        edge_quads={
            (remap[i], remap[j]): set(q)
            for (i, j), q in g.edge_quads.items()
            if i in keep_set and j in keep_set
        },
        boundary={remap[i] for i in g.boundary if i in keep_set},
    )


def ct_partition_report(g: K4Graph) -> dict:
    """Check that the edges of the graph are an edge-disjoint union of
    canonical triangles (possibly degenerate), at most three incident to
    each vertex, with degree at most 6.

    A CT unit is a connected component of the subgraph formed by the edges
    and loops sharing one generating quadruple.  Edge-disjointness fails
    exactly when some edge carries two distinct quadruples.
    """
    violations: list[str] = []
    by_quad: dict[tuple, list[tuple[int, int]]] = defaultdict(list)
    for e, quads in g.edge_quads.items():
        # loops live once per (vertex, quadruple): one per incident CT
        if len(quads) > 1 and e[0] != e[1]:
            violations.append(f"edge {e} generated by {len(quads)} quadruples")
        for q in quads:
            by_quad[q].append(e)
    # CT units: components within one quadruple class
    ct_units: list[tuple[tuple, frozenset]] = []
    units_per_vertex: dict[int, set[int]] = defaultdict(set)
    for q, es in sorted(by_quad.items()):
        parent: dict[int, int] = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in es:
            parent.setdefault(u, u)
            parent.setdefault(v, v)
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        groups: dict[int, set[int]] = defaultdict(set)
        for x in parent:
            groups[find(x)].add(x)
        for members in groups.values():
            uid = len(ct_units)
            ct_units.append((q, frozenset(members)))
            if len(members) > 3:
                violations.append(f"CT {q} with {len(members)} members")
            if len(members) == 3:
                need = {
                    (min(a, b), max(a, b))
                    for a in members
                    for b in members
                    if a < b
                }
                have = {e for e in es if set(e) <= members and e[0] != e[1]}
                if need != have:
                    violations.append(f"CT {q} on {sorted(members)} not a triangle")
            for m in members:
                units_per_vertex[m].add(uid)
    # every edge covered (edge_quads holds all edges by construction; check)
    for e in sorted(g.edge_set()):
        if e not in g.edge_quads:
            violations.append(f"edge {e} not covered by any CT")
    max_ct = max((len(s) for s in units_per_vertex.values()), default=0)
    max_deg = max((g.degree(i) for i in range(len(g.vertices))), default=0)
    if max_ct > 3:
        violations.append(f"vertex with {max_ct} CTs")
    if max_deg > 6:
        violations.append(f"vertex with degree {max_deg}")
    return {
        "violations": violations,
        "max_cts_per_vertex": max_ct,
        "max_degree": max_deg,
        "n_cts": len(ct_units),
    }
