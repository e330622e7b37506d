"""Color arithmetic, K3-types, cards and canonical K4-types.

Colors are nonnegative integers.  Working over Z the color set is all of N;
working over Z_n (n odd) every color lives in {0, ..., (n-1)/2} and x, -x
share a color.  A K3-type is a 3-multiset whose two least members sum to the
greatest (exactly over Z, up to sign mod n).  A card is a 6-tuple
(a, b, c, d, e, f) whose four faces abc, cde, aef, bdf are K3-types; a
K4-type is the orbit class of a card under the 24 symmetries induced by
vertex swaps of K4, stored by its lexicographically least card.

The modulus is passed around as ``None`` (over Z) or an odd integer n; bulk
structures carry it once instead of per color.
"""

from __future__ import annotations

import math
from itertools import permutations

Card = tuple[int, int, int, int, int, int]
Triple = tuple[int, int, int]

# Face p of a card occupies these positions; order is (abc, cde, aef, bdf).
FACE_POSITIONS = ((0, 1, 2), (2, 3, 4), (0, 4, 5), (1, 3, 5))

# Opposite position pairs (a,d), (b,e), (c,f): disjoint edge pairs of K4.
OPPOSITE = (3, 4, 5, 0, 1, 2)

POSITION_NAMES = "abcdef"

# Index permutations induced by the K4 vertex swaps (0 1), (1 2), (2 3)
# under the fixed edge assignment 01=a, 12=b, 02=c, 23=d, 03=e, 13=f.
_GENERATORS = (
    (0, 2, 1, 3, 5, 4),
    (2, 1, 0, 5, 4, 3),
    (0, 5, 4, 3, 2, 1),
)


class DomainError(ValueError):
    """A precondition on colors, cards or moduli was violated."""


def _check_modulus(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise DomainError(f"modulus must be an odd integer >= 3, got {n}")


def mod_reduce(m: int, n: int) -> int:
    """Reduce m to the color set {0, ..., (n-1)/2} of Z_n.

    m is first taken mod n; values above n/2 fold down to n - m so that x
    and -x receive the same color.
    """
    _check_modulus(n)
    m2 = m % n
    return n - m2 if 2 * m2 > n else m2


def nu(a: int, b: int, n: int | None = None) -> tuple[int, ...]:
    """The set {|a-b|, a+b} of third colors completing {a, b} to a K3-type.

    Over Z_n both values are reduced and duplicates collapse; the result is
    a sorted tuple of size 1 or 2.
    """
    if a < 0 or b < 0:
        raise DomainError("colors must be nonnegative")
    lo, hi = abs(a - b), a + b
    if n is not None:
        lo, hi = mod_reduce(lo, n), mod_reduce(hi, n)
    return (lo,) if lo == hi else tuple(sorted((lo, hi)))


def is_k3_type(colors, n: int | None = None) -> bool:
    """True iff the 3-multiset of colors is a K3-type.

    Over Z: the two least elements sum to the greatest.  Over Z_n: some
    signing +-x +-y +-z is divisible by n (equivalently a+b is c or -c for
    some ordering).
    """
    x, y, z = sorted(colors)
    if x < 0:
        raise DomainError("colors must be nonnegative")
    if n is None:
        return x + y == z
    if any(2 * c > n for c in (x, y, z)):
        raise DomainError(f"colors must lie in 0..{(n - 1) // 2} mod {n}")
    return any((x + sy * y + sz * z) % n == 0 for sy in (1, -1) for sz in (1, -1))


class IncomparableK3Error(DomainError):
    """The K3-type order cannot decide between the two operands."""


def k3_less(s: Triple, t: Triple) -> bool:
    """Order on K3-types bcd < bc'd' given by c+d < c'+d'.

    Types with different least colors but equal c+d sums are incomparable.
    """
    b, c, d = sorted(s)
    b2, c2, d2 = sorted(t)
    if c + d != c2 + d2:
        return c + d < c2 + d2
    if b == b2:
        return False
    raise IncomparableK3Error(f"{s} and {t} have incomparable first coordinates")


def k3_sort_key(s) -> tuple[int, int, tuple[int, ...]]:
    """Total order refining k3_less, used to pick minimal hexagon types."""
    b, c, d = sorted(s)
    return (c + d, b, (c, d))


def faces(card: Card) -> tuple[Triple, Triple, Triple, Triple]:
    """The four K3-faces (abc, cde, aef, bdf) of a card, each sorted."""
    return tuple(
        tuple(sorted(card[p] for p in pos)) for pos in FACE_POSITIONS
    )  # type: ignore[return-value]


def is_valid_card(card: Card, n: int | None = None) -> bool:
    """True iff all four faces of the card are K3-types."""
    return all(is_k3_type(f, n) for f in faces(card))


def is_doubled_type(card: Card) -> bool:
    """True iff some card of the type has the doubled form abcabc.

    Such types are degenerate doubled triangles.  (Partial coincidences
    like a = d alone are fine: they occur in genuine vertices.)
    """
    return any(q[:3] == q[3:] for q in orbit(card))


def is_positive_doubled(card: Card) -> bool:
    """Doubled form abcabc with a zero-free repeated triple.

    These types are never vertices: over Z they are excluded outright, and
    over Z_n they have no gcd-1 preimage under reduction (unlike the 0cc0cc
    family, whose members lift to cards like (0,c,c,n,n-c,n-c)).
    """
    return any(q[:3] == q[3:] and 0 not in q[:3] for q in orbit(card))


def opposite_pairs_ok(card: Card) -> bool:
    """Vertex constraint: not a doubled type with zero-free repeated
    triple.  Over Z the gcd-1 filter additionally reduces the allowed
    doubled family to 011011 alone."""
    return not is_positive_doubled(card)


def gcd_of_card(card: Card, n: int | None = None) -> int:
    g = math.gcd(*card)
    return g if n is None else math.gcd(g, n)


def is_tmc(card: Card) -> bool:
    """Totally multicolored: the six colors are pairwise distinct."""
    return len(set(card)) == 6


def _close_generators() -> tuple[tuple[int, ...], ...]:
    perms = {tuple(range(6))}
    frontier = list(perms)
    while frontier:
        p = frontier.pop()
        for g in _GENERATORS:
            q = tuple(p[g[i]] for i in range(6))
            if q not in perms:
                perms.add(q)
                frontier.append(q)
    return tuple(sorted(perms))


# All 24 index permutations of the card symmetry group.
SYMMETRIES = _close_generators()
assert len(SYMMETRIES) == 24


def orbit(card: Card) -> set[Card]:
    """All cards of the K4-type of `card` (at most 24)."""
    return {tuple(card[p[i]] for i in range(6)) for p in SYMMETRIES}


def canonical_k4(card: Card) -> Card:
    """Lexicographically least card in the orbit; the K4-type identifier."""
    return min(orbit(card))


def scale_card(card: Card, i: int, n: int) -> Card:
    """Multiply every color by i and reduce mod n (atlas color scaling)."""
    return tuple(mod_reduce(c * i, n) for c in card)  # type: ignore[return-value]


def phi_reduce_card(card: Card, n: int) -> Card:
    """Entrywise reduction mod n of a card over Z (not canonicalized)."""
    return tuple(mod_reduce(c, n) for c in card)  # type: ignore[return-value]


def is_realizable_k4(card: Card, n: int) -> bool:
    """Diagnostic: can the card be realized as an actual K4 in the Cayley
    graph of Z_n, i.e. do sign choices exist making all six edge differences
    consistent?  Face validity alone does not promise this.
    """
    a, b, c, d, e, f = card
    for sa in (1, -1):
        for sc in (1, -1):
            for se in (1, -1):
                x1, x2, x3 = sa * a % n, sc * c % n, se * e % n
                if (x2 - x1) % n not in (b % n, -b % n):
                    continue
                if (x3 - x2) % n not in (d % n, -d % n):
                    continue
                if (x3 - x1) % n in (f % n, -f % n):
                    return True
    return False


_HEX_DIGITS = "0123456789abcdef"


def parse_card(text: str) -> Card:
    """Parse a card from compact digits (hex a-f allowed) or dotted form.

    ``123745`` and ``1bc754`` are compact; ``1.11.12.7.5.4`` is dotted and
    required once any color exceeds 15.
    """
    text = text.strip()
    if "." in text:
        parts = text.split(".")
        if len(parts) != 6:
            raise DomainError(f"card needs 6 colors, got {len(parts)}: {text!r}")
        try:
            card = tuple(int(p) for p in parts)
        except ValueError as exc:
            raise DomainError(f"bad card {text!r}") from exc
    else:
        if len(text) != 6:
            raise DomainError(f"compact card needs 6 digits, got {text!r}")
        try:
            card = tuple(_HEX_DIGITS.index(ch) for ch in text.lower())
        except ValueError as exc:
            raise DomainError(f"bad card digit in {text!r}") from exc
    if any(c < 0 for c in card):
        raise DomainError("colors must be nonnegative")
    return card  # type: ignore[return-value]


def format_card(card, style: str = "plain") -> str:
    """Render a card as text.

    plain: compact decimal when all colors < 10, else dotted.
    hex:   compact with lowercase hex digits when all colors < 16 (the
           style hexagon listings use), else dotted.
    """
    limit = 16 if style == "hex" else 10
    if all(0 <= c < limit for c in card):
        return "".join(_HEX_DIGITS[c] for c in card)
    return ".".join(str(c) for c in card)


def format_colorset(colors, style: str = "plain") -> str:
    """Render a sorted color multiset (K3-types, CT quadruples) as text."""
    cs = sorted(colors)
    limit = 16 if style == "hex" else 10
    if all(c < limit for c in cs):
        return "".join(_HEX_DIGITS[c] for c in cs)
    return ".".join(str(c) for c in cs)


def parse_colorset(text: str) -> tuple[int, ...]:
    """Parse a sorted color multiset in the same syntax as cards."""
    text = text.strip()
    if "." in text:
        return tuple(sorted(int(p) for p in text.split(".")))
    return tuple(sorted(_HEX_DIGITS.index(ch) for ch in text.lower()))


def all_k3_types_mod(n: int, gcd_one: bool = False) -> list[Triple]:
    """All K3-types of Z_n as sorted triples, optionally gcd(a,b,c)=1 only."""
    _check_modulus(n)
    k = (n - 1) // 2
    out = []
    for x in range(k + 1):
        for y in range(x, k + 1):
            for z in set(nu(x, y, n)):
                if z < y:
                    continue
                t = (x, y, z)
                if gcd_one and math.gcd(*t) != 1:
                    continue
                out.append(t)
    return sorted(set(out))


def k3_window(cap: int) -> list[Triple]:
    """gcd-1 K3-types of Z with greatest color <= cap, sorted."""
    out = []
    for a in range(cap + 1):
        for b in range(a, cap + 1):
            c = a + b
            if c > cap:
                break
            if math.gcd(a, b, c) == 1:
                out.append((a, b, c))
    return sorted(out)
