"""Canonical hexagons: the two 6-cycles through a K4-type for a fixed
anchor color.

Every vertex of a chart lies on two hexagons whose edges are colored by a
K3-type s; the cycle is traced purely on cards by alternating two neighbor
moves that keep the anchor color fixed in place.  With the anchor at
position a, variant ``bdf`` alternates [swap(d,f), recompute e] with
[swap(b,d), recompute c]; variant ``cde`` alternates [swap(c,d), recompute
b] with [swap(d,e), recompute f].  Anchors at other positions are handled
by recarding with a fixed symmetry and mapping the traced cards back, so
the output cards stay aligned with the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colors import Card, DomainError, canonical_k4, format_colorset, nu

# Index permutation bringing each anchor position to position 0, chosen
# inside the 24-card symmetry group.  RECARD[p][i] = source index of the
# recarded card's entry i.
RECARD = {
    0: (0, 1, 2, 3, 4, 5),
    1: (1, 2, 0, 4, 5, 3),
    2: (2, 1, 0, 5, 4, 3),
    3: (3, 1, 5, 0, 4, 2),
    4: (4, 3, 2, 1, 0, 5),
    5: (5, 3, 1, 2, 0, 4),
}

# Trace steps in recarded coordinates: (swap positions, recomputed position,
# the two position pairs whose faces the new color must complete).
_STEP = {
    "bdf": (
        ((3, 5), 4, ((2, 3), (0, 5))),   # swap d,f; e from nu(c,d) & nu(a,f)
        ((1, 3), 2, ((0, 1), (3, 4))),   # swap b,d; c from nu(a,b) & nu(d,e)
    ),
    "cde": (
        ((2, 3), 1, ((0, 2), (3, 5))),   # swap c,d; b from nu(a,c) & nu(d,f)
        ((3, 4), 5, ((0, 4), (1, 3))),   # swap d,e; f from nu(a,e) & nu(b,d)
    ),
}

VARIANTS = ("bdf", "cde")


def _invert(p):
    inv = [0] * 6
    for i, s in enumerate(p):
        inv[s] = i
    return tuple(inv)


def _apply(card: Card, p) -> Card:
    return tuple(card[p[i]] for i in range(6))  # type: ignore[return-value]


@dataclass(frozen=True)
class HexagonTrace:
    cards: tuple[Card, ...]        # the six cards, starting at the input
    anchor_color: int
    edge_type: tuple[int, int, int]   # K3-type coloring the cycle edges

    @property
    def name(self) -> str:
        return f"{self.anchor_color}.{format_colorset(self.edge_type, 'hex')}"


def trace_hexagon(
    card: Card, anchor: int, variant: str, n: int | None = None
) -> HexagonTrace:
    """Trace the canonical hexagon through `card` keeping the color at the
    anchor position (0..5) fixed.

    variant selects which of the two faces avoiding the anchor colors the
    cycle: in recarded coordinates ``bdf`` or ``cde``.  The trace must close
    after exactly six steps; failure to close means the card was invalid.
    """
    if variant not in VARIANTS:
        raise DomainError(f"variant must be one of {VARIANTS}")
    if anchor not in RECARD:
        raise DomainError("anchor must be a position 0..5")
    rho = RECARD[anchor]
    rho_inv = _invert(rho)
    work = list(_apply(card, rho))
    steps = _STEP[variant]
    seq: list[Card] = [card]
    for i in range(6):
        (si, sj), tpos, ((u1, u2), (v1, v2)) = steps[i % 2]
        work[si], work[sj] = work[sj], work[si]
        cand = set(nu(work[u1], work[u2], n)) & set(nu(work[v1], work[v2], n))
        if len(cand) != 1:
            raise DomainError(
                f"hexagon step {i} of {card} is not uniquely determined: {cand}"
            )
        work[tpos] = cand.pop()
        seq.append(_apply(tuple(work), rho_inv))
    if seq[6] != seq[0]:
        raise DomainError(f"hexagon through {card} did not close: {seq}")
    face = FACE_OF_VARIANT[variant]
    edge_type = tuple(sorted(card[rho[i]] for i in face))
    return HexagonTrace(
        cards=tuple(seq[:6]),
        anchor_color=card[anchor],
        edge_type=edge_type,  # type: ignore[arg-type]
    )


# Positions (in recarded coordinates) of the face coloring the cycle.
FACE_OF_VARIANT = {"bdf": (1, 3, 5), "cde": (2, 3, 4)}


def hexagons_at(card: Card, n: int | None = None) -> list[HexagonTrace]:
    """The four hexagons through a type: anchors at positions a and d with
    both variants each."""
    out = []
    for anchor in (0, 3):
        for variant in VARIANTS:
            out.append(trace_hexagon(card, anchor, variant, n))
    return out


def hexagon_closes(card: Card, anchor: int, variant: str, n: int | None = None) -> bool:
    try:
        trace_hexagon(card, anchor, variant, n)
        return True
    except DomainError:
        return False
