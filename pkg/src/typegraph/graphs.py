"""Small undirected-graph utilities shared by the type-graph builders:
CSR adjacency, BFS, components, and exact diameters via the iFUB scheme
(double sweep for bounds, then eccentricity refinement), which is exact
but far cheaper than all-sources BFS on these graph sizes.
"""

from __future__ import annotations

from collections import deque

import numpy as np


class UGraph:
    """Undirected graph over vertices 0..n-1 with CSR adjacency."""

    def __init__(self, n: int, edges):
        self.n = n
        deg = np.zeros(n, dtype=np.int64)
        es = [(u, v) for u, v in edges if u != v]
        for u, v in es:
            deg[u] += 1
            deg[v] += 1
        self.indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(deg, out=self.indptr[1:])
        self.indices = np.zeros(int(self.indptr[-1]), dtype=np.int64)
        fill = self.indptr[:-1].copy()
        for u, v in es:
            self.indices[fill[u]] = v
            fill[u] += 1
            self.indices[fill[v]] = u
            fill[v] += 1
        self.m = len(es)

    @classmethod
    def from_adjacency(cls, adjacency) -> "UGraph":
        edges = [
            (i, j) for i, nbrs in enumerate(adjacency) for j in nbrs if i < j
        ]
        return cls(len(adjacency), edges)

    def bfs(self, src: int) -> np.ndarray:
        """Distance array from src; unreachable vertices get -1."""
        dist = np.full(self.n, -1, dtype=np.int64)
        dist[src] = 0
        frontier = np.array([src], dtype=np.int64)
        d = 0
        while frontier.size:
            nxt = []
            for u in frontier:
                nbrs = self.indices[self.indptr[u]:self.indptr[u + 1]]
                nxt.append(nbrs)
            if not nxt:
                break
            cand = np.concatenate(nxt)
            cand = cand[dist[cand] < 0]
            if cand.size == 0:
                break
            cand = np.unique(cand)
            d += 1
            dist[cand] = d
            frontier = cand
        return dist

    def components(self) -> list[list[int]]:
        seen = np.zeros(self.n, dtype=bool)
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            dq = deque([s])
            while dq:
                u = dq.popleft()
                for v in self.indices[self.indptr[u]:self.indptr[u + 1]]:
                    if not seen[v]:
                        seen[v] = True
                        comp.append(int(v))
                        dq.append(int(v))
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return bool((self.bfs(0) >= 0).all())

    def eccentricity(self, src: int) -> int:
        return int(self.bfs(src).max())

    def double_sweep(self, src: int = 0) -> tuple[int, int]:
        """(lower bound, far vertex) by two BFS sweeps from src."""
        d1 = self.bfs(src)
        a = int(d1.argmax())
        d2 = self.bfs(a)
        b = int(d2.argmax())
        return int(d2[b]), a

    def diameter_exact(self) -> int:
        """Exact diameter of a connected graph via iFUB."""
        if self.n == 0:
            raise ValueError("empty graph")
        if self.n == 1:
            return 0
        lb, far = self.double_sweep(0)
        # mid vertex of the double-sweep path approximates a center
        dfar = self.bfs(far)
        order = np.argsort(dfar)
        center = int(order[len(order) // 2])
        dcen = self.bfs(center)
        ub = 2 * int(dcen.max())
        # iFUB: scan vertices by decreasing distance from the center
        by_depth = np.argsort(-dcen)
        best = lb
        for u in by_depth:
            du = int(dcen[u])
            if 2 * du <= best:
                break
            ecc = self.eccentricity(int(u))
            if ecc > best:
                best = ecc
        return best

    def diameter_bounds(self) -> tuple[int, int]:
        """(lower, upper) without full refinement."""
        lb, far = self.double_sweep(0)
        dfar = self.bfs(far)
        order = np.argsort(dfar)
        center = int(order[len(order) // 2])
        ub = 2 * self.eccentricity(center)
        return lb, max(lb, ub)


def totient(n: int) -> int:
    """Euler's totient."""
    if n < 1:
        raise ValueError("totient needs n >= 1")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result
