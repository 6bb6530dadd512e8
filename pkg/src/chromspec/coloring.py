"""Exact chromatic and independence numbers, DSATUR, and the class-pair regularity witness.

The exact solvers are the ground truth the spectral bounds are checked
against, so their lower bounds come from cliques only, never from spectra.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Coloring, Graph
from .linalg import Spectrum

DEFAULT_BUDGET = 10**7
TAU_TOL = 1e-6


class BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class ChromaticResult:
    """Outcome of the exact search; ``chi`` is None when the budget ran out."""

    chi: int | None
    coloring: Coloring
    lower: int
    upper: int
    nodes: int

    @property
    def exact(self) -> bool:
        return self.chi is not None

    def to_dict(self) -> dict:
        return {
            "status": "exact" if self.exact else "unknown",
            "value": self.chi,
            "lower": self.lower,
            "upper": self.upper,
            "nodes": self.nodes,
            "witness": list(self.coloring.color_of),
        }


@dataclass(frozen=True)
class IndependenceResult:
    alpha: int | None
    witness: tuple[int, ...]
    lower: int
    upper: int
    nodes: int

    @property
    def exact(self) -> bool:
        return self.alpha is not None

    def to_dict(self) -> dict:
        return {
            "status": "exact" if self.exact else "unknown",
            "value": self.alpha,
            "lower": self.lower,
            "upper": self.upper,
            "nodes": self.nodes,
            "witness": list(self.witness),
        }


def _masks(g: Graph) -> list[int]:
    nb = [0] * g.n
    for u, v in g.edges:
        nb[u] |= 1 << v
        nb[v] |= 1 << u
    return nb


def greedy_upper(g: Graph) -> tuple[int, Coloring]:
    """DSATUR greedy coloring; ties broken by degree, then lowest index."""
    adj = g.neighbors()
    deg = [len(a) for a in adj]
    color = [-1] * g.n
    seen: list[set[int]] = [set() for _ in range(g.n)]
    for _ in range(g.n):
        v = max((u for u in range(g.n) if color[u] < 0), key=lambda u: (len(seen[u]), deg[u], -u))
        c = 0
        while c in seen[v]:
            c += 1
        color[v] = c
        for w in adj[v]:
            seen[w].add(c)
    col = Coloring.normalized(color)
    return col.k, col


def greedy_clique(g: Graph) -> list[int]:
    """Largest clique found by greedy extension from each vertex."""
    nb = _masks(g)
    deg = [bin(m).count("1") for m in nb]
    best: list[int] = [0]
    for s in range(g.n):
        clique = [s]
        cand = nb[s]
        while cand:
            v = max((u for u in range(g.n) if cand >> u & 1), key=lambda u: (bin(nb[u] & cand).count("1"), deg[u], -u))
            clique.append(v)
            cand &= nb[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


class _KColor:
    def __init__(self, g: Graph, k: int, budget: int, nodes: int):
        self.adj = g.neighbors()
        self.deg = [len(a) for a in self.adj]
        self.n = g.n
        self.k = k
        self.budget = budget
        self.nodes = nodes
        self.color = [-1] * g.n
        self.count = [[0] * k for _ in range(g.n)]
        self.sat = [0] * g.n

    def _pick(self) -> int:
        best, key = -1, None
        for u in range(self.n):
            if self.color[u] < 0:
                kk = (self.sat[u], self.deg[u], -u)
                if key is None or kk > key:
                    best, key = u, kk
        return best

    def _assign(self, v: int, c: int) -> bool:
        self.color[v] = c
        ok = True
        for w in self.adj[v]:
            row = self.count[w]
            row[c] += 1
            if row[c] == 1:
                self.sat[w] += 1
                if self.color[w] < 0 and self.sat[w] == self.k:
                    ok = False
        return ok

    def _unassign(self, v: int, c: int) -> None:
        self.color[v] = -1
        for w in self.adj[v]:
            row = self.count[w]
            row[c] -= 1
            if row[c] == 0:
                self.sat[w] -= 1

    def solve(self, depth: int = 0, used: int = 0) -> bool:
        if depth == self.n:
            return True
        v = self._pick()
        # a fresh color is only opened in index order (symmetry breaking)
        for c in range(min(self.k, used + 1)):
            if self.count[v][c]:
                continue
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded
            ok = self._assign(v, c)
            if ok and self.solve(depth + 1, max(used, c + 1)):
                return True
            self._unassign(v, c)
        return False


def chromatic_number_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> ChromaticResult:
    """Exact chi(G) with a witness coloring.

    Tries k = clique lower bound, +1, ... below the DSATUR upper bound with
    DSATUR-ordered backtracking.  ``budget`` caps the total number of search
    nodes; when it is hit the result carries ``chi=None`` and the best bounds.
    """
    upper, best = greedy_upper(g)
    lower = len(greedy_clique(g)) if g.m else 1
    nodes = 0
    k = lower
    while k < upper:
        search = _KColor(g, k, budget, nodes)
        try:
            found = search.solve()
        except BudgetExceeded:
            return ChromaticResult(None, best, k, upper, search.nodes)
        nodes = search.nodes
        if found:
            best = Coloring.normalized(search.color)
            upper = k
            break
        k += 1
        lower = k
    return ChromaticResult(upper, best, upper, upper, nodes)


def _clique_search(nb: list[int], n: int, budget: int):
    best: list[int] = []
    nodes = 0

    def color_order(p: int):
        # greedy sequential coloring of the candidate set gives the pruning bound
        order, bounds = [], []
        color = 0
        rest = p
        while rest:
            color += 1
            q = rest
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~low
                q &= ~nb[v]
                rest &= ~low
                order.append(v)
                bounds.append(color)
        return order, bounds

    def expand(r: list[int], p: int):
        nonlocal best, nodes
        order, bounds = color_order(p)
        for i in range(len(order) - 1, -1, -1):
            if len(r) + bounds[i] <= len(best):
                return
            v = order[i]
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded
            r.append(v)
            np_ = p & nb[v]
            if np_:
                expand(r, np_)
            elif len(r) > len(best):
                best = list(r)
            r.pop()
            p &= ~(1 << v)

    try:
        expand([], (1 << n) - 1)
    except BudgetExceeded:
        return best, nodes, False
    return best, nodes, True


def independence_number_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> IndependenceResult:
    """Exact alpha(G) as a maximum clique of the complement (colour-bounded branch and bound)."""
    full = (1 << g.n) - 1
    nb = [~m & full & ~(1 << v) for v, m in enumerate(_masks(g))]
    best, nodes, done = _clique_search(nb, g.n, budget)
    witness = tuple(sorted(best))
    if done:
        return IndependenceResult(len(witness), witness, len(witness), len(witness), nodes)
    k, _ = greedy_upper(g.complement())
    return IndependenceResult(None, witness, len(witness), k, nodes)


@dataclass(frozen=True)
class PairResult:
    classes: tuple[int, int]
    regular: bool
    target_degree: float
    violating_vertex: int | None = None

    def to_dict(self) -> dict:
        return {
            "classes": list(self.classes),
            "regular": self.regular,
            "target_degree": self.target_degree,
            "violating_vertex": self.violating_vertex,
        }


@dataclass(frozen=True)
class EqualityReport:
    tau: float
    tau_is_integer: bool
    pair_results: tuple[PairResult, ...] = field(default_factory=tuple)

    @property
    def characterization_holds(self) -> bool:
        return self.tau_is_integer and all(p.regular for p in self.pair_results)

    def to_dict(self) -> dict:
        return {
            "tau": self.tau,
            "tau_is_integer": self.tau_is_integer,
            "characterization_holds": self.characterization_holds,
            "pair_results": [p.to_dict() for p in self.pair_results],
        }


def equality_witness(g: Graph, coloring: Coloring, spectrum_a: Spectrum, tol: float = TAU_TOL) -> EqualityReport:
    """Check whether every two color classes induce a |mu_min(A)|-regular bipartite graph."""
    bad = coloring.conflict(g)
    if bad is not None:
        raise ValueError(f"coloring is not proper: edge {bad} is monochromatic")
    if len(spectrum_a) != g.n:
        raise ValueError("spectrum length does not match the graph order")
    tau = abs(spectrum_a.mu_min)
    target = round(tau)
    classes = coloring.classes()
    adj = g.neighbors()
    cls = coloring.color_of
    pairs = []
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            violator = None
            for v in classes[i] + classes[j]:
                other = j if cls[v] == i else i
                if sum(1 for w in adj[v] if cls[w] == other) != target:
                    violator = v
                    break
            pairs.append(PairResult((i, j), violator is None, float(target), violator))
    return EqualityReport(tau, abs(tau - target) <= tol, tuple(pairs))
