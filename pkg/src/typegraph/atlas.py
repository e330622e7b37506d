"""Atlases: the modular charts rho_n(i) with their TMC restriction
sigma_n(i) and hexagon-grid representation tau_n(i).

rho_n(1) is the chart of center color 1 over Z_n, generated from the seed
butterfly of 110001 with modular arithmetic; it folds into a 30-60-90
triangle T(n,1).  rho_n(i) replaces every color x by the reduction of x*i.
In tau_n(i) every TMC site becomes a hexagon labeled with its corner color,
non-TMC sites become bullets, and canonical hexagons stay empty.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .colors import (
    Card,
    DomainError,
    canonical_k4,
    is_tmc,
    mod_reduce,
    parse_card,
)
from .charts import (
    Chart,
    FoldResult,
    Mirror,
    Site,
    build_chart,
    chart_line_paths,
    face_sites,
    fold,
    site_coord,
    vertex_coord,
)

ATLAS_SEED: Card = (1, 1, 0, 0, 0, 1)


def default_radius(n: int) -> int:
    """Big enough to cover T(n,1) with margin (its legs are O(n))."""
    return 2 * n + 6


@dataclass
class Atlas:
    n: int
    i: int
    chart: Chart
    folded: FoldResult
    scale: dict[int, int] = field(default_factory=dict)

    def site_types(self) -> dict[Site, Card]:
        return {s: self.chart.site_type(s) for s in self.chart.site_corner}

    def tmc_sites(self) -> dict[Site, Card]:
        return {
            s: t for s, t in self.site_types().items() if is_tmc(t)
        }

    def type_adjacency(self) -> dict[Card, set[Card]]:
        """Type-level adjacency of the chart subgraph (sigma support)."""
        adj: dict[Card, set[Card]] = {}
        types = self.site_types()
        for pair in self.chart.side_color:
            s1, s2 = tuple(pair)
            t1, t2 = types[s1], types[s2]
            adj.setdefault(t1, set()).add(t2)
            adj.setdefault(t2, set()).add(t1)
        return adj

    def isolated_tmc(self) -> list[Card]:
        """TMC types of sigma_n(i) with no TMC neighbor (loops included:
        a TMC type adjacent to itself is not isolated)."""
        adj = self.type_adjacency()
        out = []
        for t, nbrs in sorted(adj.items()):
            if not is_tmc(t):
                continue
            if any(is_tmc(u) for u in nbrs):
                continue
            out.append(t)
        return out


def atlas(n: int, i: int = 1, radius: int | None = None) -> Atlas:
    """Build the i-atlas of Z_n.

    rho_n(1) is generated inside T(n,1); rho_n(i) is its color-scaled copy,
    built directly from the scaled seed (the scaling commutes with the
    expansion rules, which a test checks)."""
    if n < 7 or n % 2 == 0:
        raise DomainError(f"n must be odd >= 7, got {n}")
    if math.gcd(i, n) != 1 or not (1 <= i <= (n - 1) // 2):
        raise DomainError(f"i must be a unit of Z_n in 1..{(n-1)//2}, got {i}")
    if radius is None:
        radius = default_radius(n)
    scale = {x: mod_reduce(x * i, n) for x in range(n)}
    seed = tuple(scale[c] for c in ATLAS_SEED)
    chart = Chart(seed, radius, n)
    folded = fold(chart)
    return Atlas(n=n, i=i, chart=chart, folded=folded, scale=scale)


def scale_chart_colors(a: Atlas, i: int) -> dict:
    """Color-scaled copy of an atlas chart's data (site and side colors),
    for the isomorphism check against the directly built i-atlas."""
    sc = {x: mod_reduce(x * i, a.n) for x in range(a.n)}
    return {
        "sites": {s: sc[c] for s, c in a.chart.site_corner.items()},
        "sides": {p: sc[c] for p, c in a.chart.side_color.items()},
    }


@dataclass
class CornerReport:
    n: int
    ch_000_vertices: list           # lattice vertices of hexagon type 000
    right_angle_site: Site | None   # the 0jj1jj site (90 degrees)
    right_angle_card: Card | None
    sixth_ct_faces: list            # faces of quadruple 1hhh (60 degrees)
    line_path_j: dict | None        # the maximal path through 0jj1jj
    sa_angles: list[int]


def triangle_corners(n: int, radius: int | None = None) -> CornerReport:
    """Locate the three corners of T(n,1) in the 1-atlas: the center of CH
    1.000 (30 degrees), the vertex 0jj1jj with j=(n-1)/2 (90 degrees) and
    the CT 1hhh with h=(n-5)/2 (60 degrees)."""
    if n < 13:
        raise DomainError("corner report needs n >= 13")
    a = atlas(n, 1, radius)
    j = (n - 1) // 2
    h = (n - 5) // 2
    hexes = a.chart.hexagons()
    ch000 = sorted(v for v, s in hexes.items() if s == (0, 0, 0))
    target = canonical_k4((0, j, j, 1, j, j))
    right_site = None
    right_card = None
    for s in sorted(a.chart.site_corner):
        if a.chart.site_type(s) == target:
            right_site = s
            right_card = a.chart.site_card(s)
            break
    quad = tuple(sorted((1, h, h, h)))
    sixth = sorted(
        key for key, ct in a.chart.faces.items() if ct.quadruple == quad
    )
    line_j = None
    if right_site is not None:
        sc = site_coord(right_site)
        for rec in chart_line_paths(a.chart):
            if {rec["f"], rec["g"]} == {j} and len(rec["colors"]) >= 3:
                line_j = {
                    "direction": rec["direction"],
                    "length": len(rec["colors"]),
                }
                break
    return CornerReport(
        n=n,
        ch_000_vertices=ch000,
        right_angle_site=right_site,
        right_angle_card=right_card,
        sixth_ct_faces=sixth,
        line_path_j=line_j,
        sa_angles=sorted({m.angle for m in a.folded.mirrors}),
    )


ISOLATED_IDENTITIES = """134265 and 123k(k-2)(k-1); for n divisible by 3 also
1(k-2)(k-1)k(k+1)(k+2), whose reduced faces can fail validity (reported)."""


@dataclass
class IsolatedCensus:
    n: int
    isolated: list[Card]            # canonical types, sorted
    labels: dict[Card, int]         # hexagon label (site corner color)
    expected: list[Card]            # identity types that are valid mod n
    warnings: list[str]

    @property
    def matches_expected(self) -> bool:
        return set(self.isolated) == set(self.expected)


def isolated_census(n: int, radius: int | None = None) -> IsolatedCensus:
    """Isolated vertices of sigma_n(1), compared against the stated
    identities; mismatches are reported, never silently corrected."""
    if n < 13 or n % 2 == 0:
        raise DomainError(f"census needs odd n >= 13, got {n}")
    a = atlas(n, 1, radius)
    iso = a.isolated_tmc()
    labels = {}
    types = a.site_types()
    for s, t in types.items():
        if t in set(iso) and t not in labels:
            labels[t] = a.chart.site_corner[s]
    k = (n - 1) // 2
    warnings = []
    expected = []
    for name, card in (
        ("134265", (1, 3, 4, 2, 6, 5)),
        ("123k(k-2)(k-1)", (1, 2, 3, k, k - 2, k - 1)),
    ):
        expected.append(canonical_k4(card))
    if n % 3 == 0:
        card = tuple(mod_reduce(c, n) for c in (1, k - 2, k - 1, k, k + 1, k + 2))
        from .colors import is_valid_card

        if is_valid_card(card, n) and is_tmc(card):
            expected.append(canonical_k4(card))
        else:
            warnings.append(
                f"identity 1(k-2)(k-1)k(k+1)(k+2) reduces to {card}, "
                "not a valid TMC card mod n; counted from the chart instead"
            )
    got, want = set(iso), set(expected)
    if got != want:
        warnings.append(
            f"census mismatch: computed {sorted(got)} vs identities {sorted(want)}"
        )
    return IsolatedCensus(
        n=n,
        isolated=sorted(iso),
        labels=labels,
        expected=sorted(expected),
        warnings=warnings,
    )


@dataclass
class TauGrid:
    """Hexagon-grid data for rendering tau_n(i): one cell per site (labeled
    integer or bullet) and per canonical hexagon (empty)."""

    n: int
    i: int
    cells: list[tuple]          # (x, y, kind, label) sorted; kind in
                                # {"site-tmc", "site", "hexagon"}
    headings: list[tuple]       # (x, y, pair) boundary heading pairs


def tau_grid(a: Atlas) -> TauGrid:
    cells = []
    types = a.site_types()
    reps = set(a.folded.site_orbit.values()) if a.folded.mirrors else set(
        a.chart.site_corner
    )
    for s in sorted(a.chart.site_corner):
        if s not in reps:
            continue
        x, y = site_coord(s)
        t = types[s]
        if is_tmc(t):
            cells.append((x, y, "site-tmc", a.chart.site_corner[s]))
        else:
            cells.append((x, y, "site", None))
    for v, styp in sorted(a.chart.hexagons().items()):
        x, y = vertex_coord(v)
        cells.append((x, y, "hexagon", None))
    headings = []
    for s in sorted(a.chart.site_corner):
        t = types[s]
        if not is_tmc(t):
            continue
        card = a.chart.site_card(s)
        x, y = site_coord(s)
        headings.append((x, y, (tuple(sorted(card[1:3])), tuple(sorted(card[4:6])))))
    return TauGrid(n=a.n, i=a.i, cells=sorted(cells), headings=headings)
