"""Simple undirected graphs, colorings, derived matrices and generators."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .linalg import BlockPartition, SymmetricMatrix


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are stored as sorted ``(u, v)`` pairs with ``u < v``.  Duplicates in
    the input collapse; loops and out-of-range endpoints raise ``ValueError``.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"a graph needs at least one vertex, got n={self.n}")
        norm = set()
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.sorted_edges():
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def complement(self) -> "Graph":
        return Graph(self.n, frozenset(e for e in combinations(range(self.n), 2) if e not in self.edges))

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = (min(u, v), max(u, v))
        if e not in self.edges:
            raise ValueError(f"no edge {e}")
        return Graph(self.n, self.edges - {e})


@dataclass(frozen=True)
class Coloring:
    """Vertex coloring using every color id in [0, k)."""

    color_of: tuple[int, ...]

    def __post_init__(self):
        colors = tuple(int(c) for c in self.color_of)
        object.__setattr__(self, "color_of", colors)
        used = set(colors)
        if used != set(range(len(used))):
            raise ValueError(f"color ids must be exactly 0..k-1, got {sorted(used)}")

    @property
    def n(self) -> int:
        return len(self.color_of)

    @property
    def k(self) -> int:
        return len(set(self.color_of))

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.color_of):
            out[c].append(v)
        return out

    def conflict(self, g: Graph) -> tuple[int, int] | None:
        """First monochromatic edge, or None when the coloring is proper."""
        if self.n != g.n:
            raise ValueError(f"coloring has {self.n} vertices, graph has {g.n}")
        for u, v in g.sorted_edges():
            if self.color_of[u] == self.color_of[v]:
                return (u, v)
        return None

    def is_proper(self, g: Graph) -> bool:
        return self.conflict(g) is None

    @classmethod
    def normalized(cls, colors) -> "Coloring":
        """Relabel arbitrary color ids to 0..k-1 in order of first appearance."""
        remap: dict[int, int] = {}
        return cls(tuple(remap.setdefault(c, len(remap)) for c in colors))


# derived matrices


def adjacency_array(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return a


def adjacency_matrix(g: Graph) -> SymmetricMatrix:
    return SymmetricMatrix(adjacency_array(g))


def degree_matrix(g: Graph) -> SymmetricMatrix:
    return SymmetricMatrix.diagonal(g.degrees())


def laplacian(g: Graph) -> SymmetricMatrix:
    a = adjacency_array(g)
    return SymmetricMatrix(np.diag(a.sum(axis=1)) - a)


def signless_laplacian(g: Graph) -> SymmetricMatrix:
    a = adjacency_array(g)
    return SymmetricMatrix(np.diag(a.sum(axis=1)) + a)


# generators


def empty(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def complete_minus_edge(n: int) -> Graph:
    """K_n with the edge {0, 1} removed."""
    if n < 2:
        raise ValueError("complete_minus_edge needs n >= 2")
    return complete(n).remove_edge(0, 1)


def path(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def wheel(n: int) -> Graph:
    """Hub (vertex n) joined to every vertex of the cycle 0..n-1."""
    if n < 3:
        raise ValueError(f"wheel needs a cycle of length >= 3, got {n}")
    rim = cycle(n).edges
    return Graph(n + 1, rim | {(i, n) for i in range(n)})


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def complete_multipartite(part_sizes) -> Graph:
    sizes = [int(s) for s in part_sizes]
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError(f"part sizes must be positive, got {sizes}")
    part = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(part)
    return Graph(n, frozenset((u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]))


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def petersen() -> Graph:
    outer = {(i, (i + 1) % 5) for i in range(5)}
    spokes = {(i, i + 5) for i in range(5)}
    inner = {(5 + i, 5 + (i + 2) % 5) for i in range(5)}
    return Graph(10, frozenset(outer | spokes | inner))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = {(u + g.n, v + g.n) for u, v in h.edges}
    return Graph(g.n + h.n, g.edges | shifted)


_MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def pair_uniform(seed: int, i: int, j: int) -> float:
    """Uniform [0, 1) value determined only by (seed, i, j)."""
    h = splitmix64(splitmix64(splitmix64(seed & _MASK64) ^ i) ^ j)
    return (h >> 11) * 2.0**-53


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); each pair's coin is keyed by (seed, i, j)."""
    if n < 1:
        raise ValueError(f"gnp needs n >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    return Graph(n, frozenset((i, j) for i, j in combinations(range(n), 2) if pair_uniform(seed, i, j) < p))


def from_edge_mask(n: int, mask: int) -> Graph:
    """Labeled graph whose edge set is bit i of ``mask`` over pairs in graph6 order."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    return Graph(n, frozenset(pairs[b] for b in range(len(pairs)) if mask >> b & 1))


def all_labeled_graphs(n: int):
    """Every labeled graph on n vertices (2^(n choose 2) of them), in mask order."""
    for mask in range(1 << (n * (n - 1) // 2)):
        yield from_edge_mask(n, mask)


# predicates


def components(g: Graph) -> list[list[int]]:
    adj = g.neighbors()
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


@dataclass(frozen=True)
class BipartiteCheck:
    """Outcome of a bipartiteness test: a 2-coloring or an odd closed walk witness."""

    bipartite: bool
    side: tuple[int, ...] | None = None
    odd_cycle: tuple[int, ...] | None = None

    def __bool__(self):
        return self.bipartite


def is_bipartite(g: Graph) -> BipartiteCheck:
    adj = g.neighbors()
    side = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if side[v] == -1:
                    side[v] = 1 - side[u]
                    parent[v] = u
                    queue.append(v)
                elif side[v] == side[u]:
                    return BipartiteCheck(False, odd_cycle=_odd_cycle(parent, u, v))
    return BipartiteCheck(True, side=tuple(side))


def _odd_cycle(parent: list[int], u: int, v: int) -> tuple[int, ...]:
    # u and v share a BFS layer and are adjacent: join their tree paths at the common ancestor
    up = [u]
    while parent[up[-1]] != -1:
        up.append(parent[up[-1]])
    vp = [v]
    while parent[vp[-1]] != -1:
        vp.append(parent[vp[-1]])
    common = set(up) & set(vp)
    up = up[: next(i for i, x in enumerate(up) if x in common) + 1]
    vp = vp[: vp.index(up[-1])]
    return tuple(up + vp[::-1])


def is_regular(g: Graph) -> tuple[bool, int | None]:
    deg = g.degrees()
    if len(set(deg)) == 1:
        return True, deg[0]
    return False, None


def coloring_partition(g: Graph, coloring: Coloring) -> BlockPartition:
    """Block partition of the vertex set into the color classes."""
    bad = coloring.conflict(g)
    if bad is not None:
        raise ValueError(f"coloring is not proper: edge {bad} is monochromatic")
    if coloring.k < 2:
        raise ValueError("a block partition needs at least 2 color classes")
    return BlockPartition(coloring.color_of, coloring.k)
