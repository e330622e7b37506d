"""Planar charts: coverings of butterfly unions by windows of the
(3,6,3,6) kagome pattern, with exact-integer symmetry-axis detection and
folding.

Geometry lives on the triangular lattice with axial coordinates (q, r).
Faces of the lattice are the placed CTs; lattice edges are the sites, each
carrying one K4-type occurrence; lattice vertices are the canonical
hexagons.  A site's card is reconstructed from either incident face: with
the face playing the acdf role, the corner colors give d, c, f and the two
sides at the site give b and e.  Expanding across a site mirrors the face:
old sides become new corners and vice versa, and the far side of the new
face is the changed color of the neighbor move at position c.

All symmetry work uses integer coordinates: a lattice vertex (q, r) sits
at (4q + 2r, 2r) and a site at the average of its endpoints, so every
candidate mirror of the pattern is an integer affine reflection under the
inner product <u, v> = ux*vx + 3*uy*vy.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from .colors import (
    Card,
    DomainError,
    canonical_k4,
    format_colorset,
    is_tmc,
    k3_sort_key,
    nu,
    orbit,
)
from .k4graph import neighbor

Vertex = tuple[int, int]            # axial (q, r)
Site = tuple[Vertex, Vertex]        # sorted endpoint pair
FaceKey = tuple[str, int, int]      # ("u"|"d", q, r)


def face_vertices(key: FaceKey) -> tuple[Vertex, Vertex, Vertex]:
    o, q, r = key
    if o == "u":
        return ((q, r), (q + 1, r), (q, r + 1))
    return ((q + 1, r), (q, r + 1), (q + 1, r + 1))


def face_sites(key: FaceKey) -> tuple[Site, Site, Site]:
    a, b, c = face_vertices(key)
    return (
        tuple(sorted((a, b))),
        tuple(sorted((a, c))),
        tuple(sorted((b, c))),
    )  # type: ignore[return-value]


def faces_of_site(site: Site) -> tuple[FaceKey, FaceKey]:
    """The two lattice faces containing an edge-site."""
    (q1, r1), (q2, r2) = site
    dq, dr = q2 - q1, r2 - r1
    if (dq, dr) == (1, 0):
        return (("u", q1, r1), ("d", q1, r1 - 1))
    if (dq, dr) == (0, 1):
        return (("u", q1, r1), ("d", q1 - 1, r1))
    if (dq, dr) == (1, -1):    # diagonal: {(q, r+1), (q+1, r)} sorts this way
        return (("u", q1, r2), ("d", q1, r2))
    raise DomainError(f"not a lattice edge: {site}")


def other_face(key: FaceKey, site: Site) -> FaceKey:
    f1, f2 = faces_of_site(site)
    return f2 if key == f1 else f1


def vertex_coord(v: Vertex) -> tuple[int, int]:
    q, r = v
    return (4 * q + 2 * r, 2 * r)


def site_coord(site: Site) -> tuple[int, int]:
    (x1, y1), (x2, y2) = (vertex_coord(v) for v in site)
    return ((x1 + x2) // 2, (y1 + y2) // 2)


def euclid(p: tuple[int, int]) -> tuple[float, float]:
    return (p[0] / 4.0, p[1] * math.sqrt(3) / 4.0)


# Mirror directions: three edge-parallel, three perpendicular families,
# with their angles in degrees and perpendicular partners.
DIRECTIONS: tuple[tuple[int, int], ...] = (
    (2, 0), (1, 1), (-1, 1), (0, 1), (-3, 1), (3, 1),
)
ANGLE = {(2, 0): 0, (1, 1): 60, (-1, 1): 120, (0, 1): 90, (-3, 1): 150, (3, 1): 30}
PERP = {
    (2, 0): (0, 1), (1, 1): (-3, 1), (-1, 1): (3, 1),
    (0, 1): (2, 0), (-3, 1): (1, 1), (3, 1): (-1, 1),
}


def _dot(u, v) -> int:
    return u[0] * v[0] + 3 * u[1] * v[1]


@dataclass(frozen=True)
class Mirror:
    """Reflection across the line through anchor with the given direction."""

    anchor: tuple[int, int]
    direction: tuple[int, int]

    def reflect(self, p: tuple[int, int]) -> tuple[int, int]:
        d = self.direction
        w = (p[0] - self.anchor[0], p[1] - self.anchor[1])
        t = 2 * _dot(w, d)
        dd = _dot(d, d)
        if t % dd:
            # not a pattern-compatible point for this family
            raise DomainError(f"non-lattice reflection of {p}")
        s = t // dd
        return (
            self.anchor[0] + s * d[0] - w[0],
            self.anchor[1] + s * d[1] - w[1],
        )

    def offset(self) -> int:
        return _dot(self.anchor, PERP[self.direction])

    @property
    def angle(self) -> int:
        return ANGLE[self.direction]

    def contains(self, p: tuple[int, int]) -> bool:
        return _dot(p, PERP[self.direction]) == self.offset()


def ct_edge_color(a: int, f: int, g: int, h: int, n: int | None = None) -> int:
    """Color of the side between the corners colored f and g of a placed CT
    with center a and third corner h: the unique common completion."""
    cand = set(nu(a, h, n)) & set(nu(f, g, n))
    if len(cand) != 1:
        raise DomainError(
            f"side color of center {a}, corners {f},{g}, third {h}: {sorted(cand)}"
        )
    return cand.pop()


@dataclass
class PlacedCT:
    key: FaceKey
    center: int
    corners: dict[Site, int]
    sides: dict[frozenset, int]

    @property
    def quadruple(self) -> tuple[int, ...]:
        return tuple(sorted((self.center, *self.corners.values())))


class Chart:
    """A radius-limited window of the chart generated by a seed butterfly.

    The seed card (a, b, c, d, e, f) is placed with its acdf-CT on the
    up-face at the origin and its abde-CT across the seed site; `a` is the
    center color of every placed CT and `d` the seed's butterfly color.
    """

    def __init__(self, card: Card, radius: int, n: int | None = None):
        self.n = n
        self.seed_card = card
        self.center_color = card[0]
        self.radius = radius
        self.faces: dict[FaceKey, PlacedCT] = {}
        self.site_corner: dict[Site, int] = {}
        self.side_color: dict[frozenset, int] = {}
        self.failures: list[str] = []
        self.seed_site: Site = tuple(sorted(((0, 0), (1, 0))))  # type: ignore
        self._build()

    # -- construction -----------------------------------------------------

    def _third_side(self, card: Card) -> int:
        """Far side of the abde-face of `card`: the changed color of the
        neighbor move at position c (equal to the move at position f)."""
        return neighbor(card, 2, 0, self.n).h

    def _seed_face(self) -> PlacedCT:
        a, b, c, d, e, f = self.seed_card
        key: FaceKey = ("u", 0, 0)
        u = self.seed_site
        sA, sB = self._flank(key, u)
        corners = {u: d, sA: f, sB: c}
        third = neighbor(self.seed_card, 1, 0, self.n).h
        sides = {
            frozenset((u, sA)): b,
            frozenset((u, sB)): e,
            frozenset((sA, sB)): third,
        }
        return PlacedCT(key, self.center_color, corners, sides)

    @staticmethod
    def _flank(key: FaceKey, u: Site) -> tuple[Site, Site]:
        """The other two sites of the face, first the one sharing the lex
        lesser endpoint of u."""
        A, B = u
        rest = [s for s in face_sites(key) if s != u]
        sA = next(s for s in rest if A in s)
        sB = next(s for s in rest if B in s)
        return sA, sB

    def card_at(self, key: FaceKey, u: Site) -> Card:
        """Site card with the given face in the acdf role."""
        f_ct = self.faces[key]
        sA, sB = self._flank(key, u)
        return (
            self.center_color,
            f_ct.sides[frozenset((u, sA))],
            f_ct.corners[sB],
            f_ct.corners[u],
            f_ct.sides[frozenset((u, sB))],
            f_ct.corners[sA],
        )

    def _expand(self, key: FaceKey, u: Site) -> PlacedCT | None:
        card = self.card_at(key, u)
        a, b, c, d, e, f = card
        nkey = other_face(key, u)
        sA, sB = self._flank(nkey, u)
        try:
            third = self._third_side(card)
        except DomainError as exc:
            self.failures.append(f"{nkey}: {exc}")
            return None
        corners = {u: d, sA: b, sB: e}
        sides = {
            frozenset((u, sA)): f,
            frozenset((u, sB)): c,
            frozenset((sA, sB)): third,
        }
        return PlacedCT(nkey, self.center_color, corners, sides)

    def _install(self, ct: PlacedCT) -> None:
        self.faces[ct.key] = ct
        for s, col in ct.corners.items():
            old = self.site_corner.setdefault(s, col)
            if old != col:
                raise DomainError(
                    f"inconsistent site color at {s}: {old} vs {col}"
                )
        for pair, col in ct.sides.items():
            old = self.side_color.setdefault(pair, col)
            if old != col:
                raise DomainError(
                    f"inconsistent side color at {sorted(pair)}: {old} vs {col}"
                )

    def _build(self) -> None:
        seed = self._seed_face()
        self._install(seed)
        depth = {seed.key: 0}
        queue = deque([seed.key])
        while queue:
            key = queue.popleft()
            if depth[key] >= self.radius:
                continue
            for u in face_sites(key):
                nkey = other_face(key, u)
                if nkey in depth:
                    nct = self._expand(key, u)
                    if nct is not None:
                        for s, col in nct.corners.items():
                            assert self.site_corner[s] == col, (nkey, s)
                        for pair, col in nct.sides.items():
                            assert self.side_color[pair] == col, (nkey, pair)
                    continue
                nct = self._expand(key, u)
                if nct is None:
                    continue
                self._install(nct)
                depth[nkey] = depth[key] + 1
                queue.append(nkey)
        self.depth = depth

    # -- structure --------------------------------------------------------

    def site_card(self, s: Site) -> Card:
        for key in faces_of_site(s):
            if key in self.faces:
                return self.card_at(key, s)
        raise DomainError(f"site {s} not in chart")

    def site_type(self, s: Site) -> Card:
        return canonical_k4(self.site_card(s))

    def interior_sites(self) -> list[Site]:
        """Sites with both faces present (full local data)."""
        return sorted(
            s
            for s in self.site_corner
            if all(k in self.faces for k in faces_of_site(s))
        )

    def hexagons(self) -> dict[Vertex, tuple[int, ...]]:
        """For each lattice vertex with all six faces built: the K3-type
        coloring its surrounding hexagon."""
        out = {}
        incident: dict[Vertex, list[frozenset]] = {}
        for pair in self.side_color:
            s1, s2 = tuple(pair)
            shared = set(s1) & set(s2)
            if len(shared) == 1:
                incident.setdefault(shared.pop(), []).append(pair)
        for v, pairs in incident.items():
            if len(pairs) != 6:
                continue
            colors = sorted(self.side_color[p] for p in pairs)
            # each hexagon color appears on two opposite edges
            if colors[0::2] != colors[1::2]:
                raise DomainError(f"hexagon at {v} is not doubled: {colors}")
            out[v] = tuple(colors[0::2])
        return out

    def name(self) -> str:
        """Chart name a(s): center color and the minimal nonzero hexagon
        type in the window."""
        hexes = [s for s in self.hexagons().values() if any(s)]
        if not hexes:
            return f"{self.center_color}(?)"
        best = min(hexes, key=k3_sort_key)
        return f"{self.center_color}({format_colorset(best)})"

    def graph_edges(self) -> set[tuple[Card, Card]]:
        """Type-level edges covered by the chart window."""
        out = set()
        for pair in self.side_color:
            s1, s2 = tuple(pair)
            out.add(tuple(sorted((self.site_type(s1), self.site_type(s2)))))
        return out

    # -- symmetry ---------------------------------------------------------

    def detect_sas(self, min_matches: int = 12) -> list[Mirror]:
        """Exact mirror lines of the window coloring, lattice-aligned.

        A candidate line is accepted when every site and side tests
        mirror-consistent and at least `min_matches` off-line site pairs
        were actually compared.
        """
        coords = {s: site_coord(s) for s in self.site_corner}
        by_coord = {c: s for s, c in coords.items()}
        vcoords = [vertex_coord(v) for f in self.faces for v in face_vertices(f)]
        mirrors: list[Mirror] = []
        for d in DIRECTIONS:
            perp = PERP[d]
            offsets: dict[int, tuple[int, int]] = {}
            for c in list(by_coord) + vcoords:
                offsets.setdefault(_dot(c, perp), c)
            for off, anchor in sorted(offsets.items()):
                m = Mirror(anchor, d)
                matched = 0
                ok = True
                for s, c in coords.items():
                    try:
                        c2 = m.reflect(c)
                    except DomainError:
                        ok = False
                        break
                    s2 = by_coord.get(c2)
                    if s2 is None:
                        continue
                    if self.site_corner[s2] != self.site_corner[s]:
                        ok = False
                        break
                    if c2 != c:
                        matched += 1
                if not ok or matched < min_matches:
                    continue
                for pair, col in self.side_color.items():
                    p1, p2 = (coords[s] for s in tuple(pair))
                    q1, q2 = m.reflect(p1), m.reflect(p2)
                    s1, s2 = by_coord.get(q1), by_coord.get(q2)
                    if s1 is None or s2 is None:
                        continue
                    mpair = frozenset(
                        (by_coord[q1], by_coord[q2])
                    )
                    other = self.side_color.get(mpair)
                    if other is not None and other != col:
                        ok = False
                        break
                if ok:
                    mirrors.append(m)
        return mirrors


@dataclass
class FoldResult:
    chart: Chart
    mirrors: list[Mirror]
    wedge_deg: int | None          # minimal angle between crossing SAs
    k: int | None                  # 360 / wedge
    site_orbit: dict[Site, Site]   # site -> representative
    loops: list[frozenset]         # sides whose endpoints fold together
    half_edges: list[frozenset]    # loops halved perpendicularly by an SA
    half_cts: list[FaceKey]        # faces fixed by exactly one SA
    sixth_cts: list[FaceKey]       # faces fixed by crossing SAs

    @property
    def n_classes(self) -> int:
        return len(set(self.site_orbit.values()))


def fold(chart: Chart, mirrors: list[Mirror] | None = None) -> FoldResult:
    """Quotient of the chart window by the reflections of its detected
    symmetry axes."""
    if mirrors is None:
        mirrors = chart.detect_sas()
    coords = {s: site_coord(s) for s in chart.site_corner}
    by_coord = {c: s for s, c in coords.items()}
    parent: dict[Site, Site] = {s: s for s in chart.site_corner}

    def find(x: Site) -> Site:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: Site, y: Site) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for m in mirrors:
        for s, c in coords.items():
            s2 = by_coord.get(m.reflect(c))
            if s2 is not None:
                union(s, s2)
    orbit_map = {s: find(s) for s in chart.site_corner}

    loops = []
    half_edges = []
    for pair in chart.side_color:
        s1, s2 = tuple(pair)
        if orbit_map[s1] == orbit_map[s2] and s1 != s2:
            loops.append(pair)
            mid = (
                (coords[s1][0] + coords[s2][0]),
                (coords[s1][1] + coords[s2][1]),
            )
            for m in mirrors:
                if m.reflect(coords[s1]) == coords[s2] and _dot(
                    mid, PERP[m.direction]
                ) == 2 * m.offset():
                    half_edges.append(pair)
                    break

    half_cts: list[FaceKey] = []
    sixth_cts: list[FaceKey] = []
    for key in chart.faces:
        csites = [coords[s] for s in face_sites(key)]
        stab = []
        for m in mirrors:
            try:
                imgs = {m.reflect(c) for c in csites}
            except DomainError:
                continue
            if imgs == set(csites) and any(
                m.reflect(c) != c for c in csites
            ):
                stab.append(m)
        if len(stab) == 1:
            half_cts.append(key)
        elif len(stab) >= 2:
            sixth_cts.append(key)

    wedge = None
    crossing_angles = []
    for i, m1 in enumerate(mirrors):
        for m2 in mirrors[i + 1:]:
            diff = (m1.angle - m2.angle) % 180
            diff = min(diff, 180 - diff)
            if diff:
                crossing_angles.append(diff)
    if crossing_angles:
        wedge = min(crossing_angles)
    k = (360 // wedge) if wedge else None
    return FoldResult(
        chart=chart,
        mirrors=mirrors,
        wedge_deg=wedge,
        k=k,
        site_orbit=orbit_map,
        loops=loops,
        half_edges=half_edges,
        half_cts=half_cts,
        sixth_cts=sixth_cts,
    )


def recard_for_butterfly(t: Card, a: int, d: int) -> Card:
    """A card of t with color a at position 0 and d at position 3; the
    butterfly B(t, a, d) requires a and d on an opposite pair."""
    cands = sorted(q for q in orbit(t) if q[0] == a and q[3] == d)
    if not cands:
        raise DomainError(f"{t} has no carding with {a} opposite {d}")
    return cands[0]


def build_chart(t: Card, a: int, d: int, radius: int, n: int | None = None) -> Chart:
    """Chart generated from the butterfly B(t, a, d)."""
    return Chart(recard_for_butterfly(t, a, d), radius, n)


def dual_chart_check(t: Card, a: int, d: int, radius: int = 3,
                     n: int | None = None) -> dict:
    """Build the role-swapped chart H'' = H'(t, d, a) and verify that the
    CTs at t have quadruples {d,c,a,f} and {d,b,a,e}; H'' equals the
    original chart exactly when f = c and e = b."""
    card = recard_for_butterfly(t, a, d)
    _, b, c, _, e, f = card
    swapped = recard_for_butterfly(t, d, a)
    hh = Chart(swapped, radius, n)
    seed = hh.seed_site
    got = sorted(
        tuple(sorted(hh.faces[key].quadruple))
        for key in faces_of_site(seed)
        if key in hh.faces
    )
    want = sorted(
        (tuple(sorted((d, c, a, f))), tuple(sorted((d, b, a, e))))
    )
    return {
        "ct_quadruples_ok": got == want,
        "equal_charts": f == c and e == b,
        "got": got,
        "want": want,
    }


def line_path(f: int, g: int, a: int, length: int) -> list[int]:
    """Edge colors along a straight lattice line: alternating f, g with
    |f-g| = a, or f+g = a when both are at most a."""
    if not (abs(f - g) == a or (f + g == a and f <= a and g <= a)):
        raise DomainError(f"L({f},{g},{a}) violates the alternation rule")
    if a % 2 == 0 and (f == a // 2 or g == a // 2) and f != g:
        raise DomainError(f"L({f},{g},{a}): colors must coincide at a/2")
    return [f if i % 2 == 0 else g for i in range(length)]


def chart_line_paths(chart: Chart) -> list[dict]:
    """Maximal straight side-color sequences of the window, one per lattice
    line, with their alternation parameters."""
    coords = {s: site_coord(s) for s in chart.site_corner}
    segments: dict[tuple, list[tuple]] = {}
    for pair in chart.side_color:
        s1, s2 = tuple(pair)
        c1, c2 = coords[s1], coords[s2]
        d = (c2[0] - c1[0], c2[1] - c1[1])
        # sides lie on lattice lines in the edge-parallel directions
        for dd in ((2, 0), (1, 1), (-1, 1)):
            if d[0] * dd[1] == d[1] * dd[0]:
                off = _dot(c1, PERP[dd])
                segments.setdefault((dd, off), []).append(
                    (min(c1, c2), chart.side_color[pair])
                )
                break
    out = []
    for (dd, off), items in sorted(segments.items()):
        items.sort()
        colors = [col for _, col in items]
        if len(colors) < 2:
            continue
        f, g = colors[0], colors[1]
        alternates = all(
            col == (f if i % 2 == 0 else g) for i, col in enumerate(colors)
        )
        out.append(
            {
                "direction": dd,
                "offset": off,
                "colors": colors,
                "f": f,
                "g": g,
                "alternates": alternates,
            }
        )
    return out


def partner_vertex(chart: Chart, v: Site) -> tuple[Site | None, str]:
    """The unique other site whose incident side colors match v's multiset;
    None with a reason when the preconditions fail."""
    a = chart.center_color
    incident: dict[Site, list[int]] = {}
    for pair in chart.side_color:
        s1, s2 = tuple(pair)
        incident.setdefault(s1, []).append(chart.side_color[pair])
        incident.setdefault(s2, []).append(chart.side_color[pair])
    if v not in incident or len(incident[v]) != 4:
        return None, "site is not interior to the window"
    sig = sorted(incident[v])
    if a % 2 == 0 and sig.count(a // 2) >= 2:
        return None, "even center color on an L(a/2,a/2,a) line"
    matches = [
        s
        for s, cols in incident.items()
        if len(cols) == 4 and sorted(cols) == sig and s != v
    ]
    # fold away mirror copies: compare by K4-type occurrence
    distinct = {chart.site_type(s) for s in matches}
    if not matches:
        return None, "no partner in window"
    if len(distinct) > 1:
        return None, f"ambiguous partners: {len(distinct)} types"
    return matches[0], ""
