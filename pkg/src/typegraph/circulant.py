"""The circulant comparison family: Cayley graphs of Z_n with generators
+-1 and the nearest integers of n^(i/m), i = 1..m-1.  For m = 3 these are
6-regular vertex-transitive graphs whose diameter sits between n^(1/3)/2
and 3*n^(1/3); greedy routing descends through the generators largest
first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class DegenerateGraphError(ValueError):
    """Generators collide mod n: the construction assumes n large enough."""


def nearest_root(n: int, num: int, den: int) -> int:
    """Round-half-up nearest integer to n^(num/den), computed exactly.

    Ties cannot occur: 2^den * n^num is even while (2r+1)^den is odd.
    """
    target = n ** num
    r = round(target ** (1.0 / den))
    while (r + 1) ** den <= target:
        r += 1
    while r ** den > target:
        r -= 1
    # r = floor(n^(num/den)); round up when the fractional part >= 1/2
    if (2 * r + 1) ** den < 2 ** den * target:
        r += 1
    return r


@dataclass
class LambdaGraph:
    n: int
    m: int
    generators: tuple[int, ...]     # positive representatives, ascending

    @property
    def degree(self) -> int:
        return 2 * self.m


def build_lambda(m: int, n: int) -> LambdaGraph:
    """Generators 1 and the nearest integers of n^(i/m); collisions mod n
    (after sign identification) are an error carrying the pair."""
    if m < 3:
        raise ValueError("m must be >= 3")
    gens = [1] + [nearest_root(n, i, m) for i in range(1, m)]
    residues = {}
    for g in gens:
        for r in (g % n, (-g) % n):
            if r in residues and residues[r] != g:
                raise DegenerateGraphError(
                    f"generators {residues[r]} and {g} collide mod {n}"
                )
            residues[r] = g
    if 0 in residues:
        raise DegenerateGraphError(f"generator divisible by n={n}")
    if len(set(g % n for g in gens)) != m:
        raise DegenerateGraphError(f"duplicate generators {gens} mod {n}")
    return LambdaGraph(n=n, m=m, generators=tuple(sorted(gens)))


def distances_from_zero(g: LambdaGraph) -> np.ndarray:
    """BFS over Z_n with a flat distance array (n int32 entries)."""
    n = g.n
    dist = np.full(n, -1, dtype=np.int32)
    dist[0] = 0
    frontier = np.array([0], dtype=np.int64)
    steps = np.array(
        [s for gen in g.generators for s in (gen, n - gen)], dtype=np.int64
    )
    d = 0
    while frontier.size:
        cand = (frontier[:, None] + steps[None, :]).ravel() % n
        cand = np.unique(cand)
        cand = cand[dist[cand] < 0]
        if cand.size == 0:
            break
        d += 1
        dist[cand] = d
        frontier = cand
    return dist


def lambda_diameter(g: LambdaGraph) -> int:
    """Exact diameter: the graph is vertex-transitive, so the eccentricity
    of 0 is the diameter."""
    dist = distances_from_zero(g)
    if (dist < 0).any():
        raise DegenerateGraphError(f"graph on Z_{g.n} is disconnected")
    return int(dist.max())


def signed_residue(x: int, n: int) -> int:
    """Representative of x mod n in (-n/2, n/2]."""
    r = x % n
    return r - n if 2 * r > n else r


def greedy_path(g: LambdaGraph, x: int, y: int) -> list[int]:
    """Walk from x to y descending through the generators, largest first:
    each stage divides out one generator and leaves a residual of at most
    half of it for the next stage.  Returns the full vertex list."""
    n = g.n
    path = [x % n]
    pos = x % n
    delta = signed_residue(y - x, n)
    for gen in sorted(g.generators, reverse=True):
        q = round(delta / gen)
        step = gen if q >= 0 else -gen
        for _ in range(abs(q)):
            pos = (pos + step) % n
            path.append(pos)
            delta -= step
    assert delta == 0 and pos == y % n, (delta, pos, y)
    return path


def greedy_length_bound(g: LambdaGraph) -> int:
    """Worst-case greedy length: m stages of at most ceil(n^(1/m)) + 2."""
    root = nearest_root(g.n, 1, g.m)
    return g.m * (root + 2)


@dataclass
class SweepRow:
    n: int
    m: int
    diameter: int
    root: float          # n^(1/m)
    ratio: float         # diameter / n^(1/m)


def bound_sweep(m: int, n_list) -> tuple[list[SweepRow], float | None]:
    """Exact diameters over a list of n, with the log-log slope of
    diameter against n (None for fewer than two points)."""
    rows = []
    for n in n_list:
        g = build_lambda(m, n)
        d = lambda_diameter(g)
        root = n ** (1.0 / m)
        rows.append(SweepRow(n=n, m=m, diameter=d, root=root, ratio=d / root))
    if len(rows) < 2:
        return rows, None
    xs = np.log([r.n for r in rows])
    ys = np.log([r.diameter for r in rows])
    slope = float(np.polyfit(xs, ys, 1)[0])
    return rows, slope
