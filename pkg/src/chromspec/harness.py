"""Seeded random instances and fuzz campaigns for the matrix inequalities.

Every trial draws its randomness from ``trial_rng(seed, trial, stream)``, a
pure function of the campaign seed and the trial index, so any record can be
re-materialised on its own (see the ``*_instance`` functions) and summaries are
bitwise reproducible.
"""

from __future__ import annotations

import hashlib
from dataclasses import asdict, dataclass, field
from itertools import combinations

import numpy as np

from .bounds import _lemma1_gaps, ceil_bound, hoffman_value, nikiforov_value
from .coloring import DEFAULT_BUDGET, TAU_TOL, chromatic_number_exact, equality_witness
from .formats import emit_graph6
from .graph import (
    Graph,
    adjacency_array,
    all_labeled_graphs,
    complete,
    gnp,
    is_bipartite,
    is_connected,
    is_regular,
)
from .linalg import (
    BlockPartition,
    HermitianMatrix,
    Spectrum,
    SymmetricMatrix,
    hermitian_eigenvalues,
    symmetric_eigenvalues,
)

MASK64 = (1 << 64) - 1
STRICT_TOL = 1e-6
SIGNLESS_TOL = 1e-9
EQUALITY_TOL = 1e-6
TAG_KEYS = ("family", "r", "block_sizes", "b_zero", "b_rowsum", "support_bipartite")

# independent random streams per campaign
_T1, _L1, _L1_EQ, _BVC, _SGN, _EXP = range(6)


def trial_rng(seed: int, trial: int, stream: int = 0) -> np.random.Generator:
    return np.random.default_rng([seed & MASK64, trial, stream])


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(int(seed) & MASK64)


@dataclass(frozen=True)
class FuzzConfig:
    trials: int = 10_000
    seed: int = 1
    n_range: tuple[int, int] = (2, 24)
    r_range: tuple[int, int] = (2, 6)
    entry_scale: float = 1.0
    diag_scale: float = 1.0
    tolerance: float = 1e-8
    complex_entries: bool = True
    density: float = 0.3

    def __post_init__(self):
        object.__setattr__(self, "n_range", tuple(int(x) for x in self.n_range))
        object.__setattr__(self, "r_range", tuple(int(x) for x in self.r_range))
        if self.trials < 0:
            raise ValueError("trials must be >= 0")
        lo, hi = self.n_range
        rlo, rhi = self.r_range
        if not 1 <= lo <= hi:
            raise ValueError(f"bad n_range {self.n_range}")
        if not 2 <= rlo <= rhi:
            raise ValueError(f"bad r_range {self.r_range}")
        if lo < rlo:
            raise ValueError("n_range minimum must be at least r_range minimum")
        if self.entry_scale < 0 or self.diag_scale < 0 or self.tolerance < 0:
            raise ValueError("scales and tolerance must be nonnegative")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError("density must lie in [0, 1]")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["n_range"] = list(self.n_range)
        d["r_range"] = list(self.r_range)
        return d


@dataclass(frozen=True)
class FuzzRecord:
    trial: int
    kind: str
    gap: float
    scale: float
    digest: str
    tags: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"trial": self.trial, "kind": self.kind, "gap": self.gap, "scale": self.scale,
                "digest": self.digest, "tags": self.tags}


@dataclass
class FuzzSummary:
    campaign: str
    config: FuzzConfig
    trials_run: int = 0
    min_gap: float | None = None
    violations: list[FuzzRecord] = field(default_factory=list)
    near_equality: list[FuzzRecord] = field(default_factory=list)
    counters: dict = field(default_factory=dict)

    @property
    def violation_count(self) -> int:
        return len(self.violations)

    @property
    def passed(self) -> bool:
        return not self.violations

    def _observe(self, gap: float) -> None:
        self.min_gap = gap if self.min_gap is None else min(self.min_gap, gap)

    def bump(self, key: str, by: int = 1) -> None:
        self.counters[key] = self.counters.get(key, 0) + by

    def finish(self) -> "FuzzSummary":
        key = lambda r: (r.trial, r.kind, r.digest)
        self.violations.sort(key=key)
        self.near_equality.sort(key=key)
        self.counters = dict(sorted(self.counters.items()))
        return self

    def to_dict(self) -> dict:
        return {
            "campaign": self.campaign,
            "config": self.config.to_dict(),
            "trials_run": self.trials_run,
            "violations": self.violation_count,
            "passed": self.passed,
            "min_gap": self.min_gap,
            "counters": self.counters,
            "violation_records": [r.to_dict() for r in self.violations],
            "near_equality": [r.to_dict() for r in self.near_equality],
        }


def digest(*arrays) -> str:
    h = hashlib.sha256()
    for a in arrays:
        a = np.ascontiguousarray(a)
        h.update(str(a.shape).encode())
        h.update(a.tobytes())
    return h.hexdigest()[:16]


# instance generators


def random_partition(n: int, r: int, rng: np.random.Generator) -> BlockPartition:
    """Uniform part per index, then empty parts are filled from the largest part."""
    if not 2 <= r <= n:
        raise ValueError(f"need 2 <= r <= n, got r={r}, n={n}")
    part = rng.integers(0, r, size=n)
    for p in range(r):
        if not np.any(part == p):
            counts = np.bincount(part, minlength=r)
            donor = int(np.argmax(counts))
            members = np.flatnonzero(part == donor)
            part[members[rng.integers(0, members.size)]] = p
    return BlockPartition(tuple(part.tolist()), r)


def random_hermitian_blocked(n: int, r: int, entry_scale: float, seed, complex_entries: bool = True):
    """Random Hermitian matrix vanishing on the diagonal blocks of a random r-partition."""
    if r > n:
        raise ValueError(f"cannot split {n} indices into {r} non-empty parts")
    rng = _rng(seed)
    part = random_partition(n, r, rng)
    re = rng.uniform(-entry_scale, entry_scale, size=(n, n))
    im = rng.uniform(-entry_scale, entry_scale, size=(n, n)) if complex_entries else np.zeros((n, n))
    p = np.asarray(part.part_of)
    keep = np.triu(p[:, None] != p[None, :], k=1)
    upper = np.where(keep, re + 1j * im, 0.0)
    return HermitianMatrix(upper + upper.conj().T), part


def random_diagonal(n: int, diag_scale: float, seed) -> SymmetricMatrix:
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = _rng(seed)
    return SymmetricMatrix.diagonal(rng.uniform(-diag_scale, diag_scale, size=n) if diag_scale else np.zeros(n))


def random_tree_edges(n: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    """Uniform random labeled spanning tree via a random Pruefer sequence."""
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = rng.integers(0, n, size=n - 2).tolist()
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(i for i in range(n) if degree[i] == 1)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return edges


def random_connected_nonneg_symmetric(n: int, density: float, entry_scale: float, seed) -> SymmetricMatrix:
    """Nonnegative symmetric matrix whose support contains a random spanning tree."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = _rng(seed)
    support = np.zeros((n, n), dtype=bool)
    for u, v in random_tree_edges(n, rng):
        support[u, v] = True
    extra = np.triu(rng.random((n, n)) < density, k=1)
    support |= extra
    # (0, scale]: 1 - U with U in [0, 1)
    values = entry_scale * (1.0 - rng.random((n, n)))
    upper = np.where(support, values, 0.0)
    a = upper + upper.T
    a[np.diag_indices(n)] = rng.uniform(0.0, entry_scale, size=n)
    return SymmetricMatrix(a)


def constant_rowsum_symmetric(n: int, entry_scale: float, seed) -> SymmetricMatrix:
    """Permuted symmetric circulant: symmetric, irreducible, every row sum equal."""
    rng = _rng(seed)
    c = rng.uniform(0.0, entry_scale, size=n)
    for k in range(1, n):
        if k > n - k:
            c[k] = c[n - k]
    if n > 1:
        # the +-1 offsets form a Hamiltonian cycle, so the support is connected
        c[1] = c[n - 1] = entry_scale * (1.0 - rng.random())
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    circ = c[idx]
    perm = rng.permutation(n)
    return SymmetricMatrix(circ[np.ix_(perm, perm)])


def random_connected_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    edges = set(random_tree_edges(n, rng))
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    return Graph(n, frozenset(edges))


def random_connected_bipartite(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Connected bipartite graph: tree across a random bipartition plus extra cross edges."""
    if n < 2:
        raise ValueError("a connected bipartite graph with an edge needs n >= 2")
    side = rng.integers(0, 2, size=n)
    side[0], side[1] = 0, 1
    left = [v for v in range(n) if side[v] == 0]
    right = [v for v in range(n) if side[v] == 1]
    order = [int(v) for v in rng.permutation(n)]
    placed = {order[0]}
    edges = set()
    for v in order[1:]:
        opposite = [u for u in placed if side[u] != side[v]]
        if not opposite:
            # nothing across yet; hang v on any vertex of the other side later
            continue
        u = opposite[rng.integers(0, len(opposite))]
        edges.add((min(u, v), max(u, v)))
        placed.add(v)
    for v in order:
        if v not in placed:
            opposite = right if side[v] == 0 else left
            u = opposite[rng.integers(0, len(opposite))]
            edges.add((min(u, v), max(u, v)))
            placed.add(v)
    for u in left:
        for v in right:
            if rng.random() < p:
                edges.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(edges))


# block-inequality campaign


def _draw_n_r(cfg: FuzzConfig, rng: np.random.Generator) -> tuple[int, int]:
    n = int(rng.integers(cfg.n_range[0], cfg.n_range[1] + 1))
    r = int(rng.integers(cfg.r_range[0], min(cfg.r_range[1], n) + 1))
    return n, r


def theorem1_instance(cfg: FuzzConfig, trial: int):
    """(A, partition, B) of trial ``trial``; identical to what the campaign evaluated."""
    rng = trial_rng(cfg.seed, trial, _T1)
    n, r = _draw_n_r(cfg, rng)
    a, part = random_hermitian_blocked(n, r, cfg.entry_scale, rng, cfg.complex_entries)
    b = random_diagonal(n, cfg.diag_scale, rng)
    return a, part, b


def _support_bipartite(a: np.ndarray) -> bool:
    n = a.shape[0]
    edges = {(i, j) for i, j in zip(*np.nonzero(np.triu(a != 0, k=1)))}
    return bool(is_bipartite(Graph(n, frozenset(edges))))


def _theorem1_tags(family: str, a: np.ndarray, part: BlockPartition, b: np.ndarray) -> dict:
    bdiag = np.diag(b)
    rowsum = np.abs(a).sum(axis=1)
    return {
        "family": family,
        "r": part.r,
        "block_sizes": part.sizes(),
        "b_zero": bool(not np.any(bdiag)),
        "b_rowsum": bool(np.allclose(bdiag, rowsum, rtol=0, atol=1e-12)),
        "support_bipartite": _support_bipartite(a),
    }


def _theorem1_gaps(instances) -> list[float]:
    """Batched mu(B - A) - mu(B + A/(r-1)) over (A, partition, B) triples, grouped by size."""
    gaps = [0.0] * len(instances)
    by_n: dict[int, list[int]] = {}
    for i, (a, _, _) in enumerate(instances):
        by_n.setdefault(a.n, []).append(i)
    for n, idx in sorted(by_n.items()):
        left = np.stack([instances[i][2].entries - instances[i][0].entries for i in idx])
        right = np.stack([instances[i][2].entries + instances[i][0].entries / (instances[i][1].r - 1) for i in idx])
        lv, _ = hermitian_eigenvalues(left)
        rv, _ = hermitian_eigenvalues(right)
        for k, i in enumerate(idx):
            gaps[i] = float(lv[k, 0] - rv[k, 0])
    return gaps


def _scale(a, b) -> float:
    return 1.0 + float(np.linalg.norm(a)) + float(np.linalg.norm(b))


def fuzz_theorem1(cfg: FuzzConfig, chunk: int = 2000) -> FuzzSummary:
    """Check mu(B - A) >= mu(B + A/(r-1)) on ``cfg.trials`` random blocked instances."""
    summary = FuzzSummary("theorem1", cfg)
    for start in range(0, cfg.trials, chunk):
        trials = range(start, min(cfg.trials, start + chunk))
        instances = [theorem1_instance(cfg, t) for t in trials]
        for t, inst, gap in zip(trials, instances, _theorem1_gaps(instances)):
            a, part, b = inst
            _classify(summary, t, gap, _scale(a.entries, b.entries), cfg.tolerance,
                      lambda: digest(a.entries, b.entries, np.asarray(part.part_of)),
                      lambda: _theorem1_tags("random", a.entries, part, b.entries))
    summary.bump("inequality_checks", cfg.trials)
    return summary.finish()


def _classify(summary, trial, gap, scale, tol, make_digest, make_tags, kind="inequality"):
    summary.trials_run += kind == "inequality"
    summary._observe(gap)
    if gap < -tol * scale:
        summary.violations.append(FuzzRecord(trial, kind, gap, scale, make_digest(), make_tags()))
    elif gap <= tol * scale:
        summary.near_equality.append(FuzzRecord(trial, kind, gap, scale, make_digest(), make_tags()))


# row-sum inequality campaign


def lemma1_instance(cfg: FuzzConfig, trial: int) -> tuple[SymmetricMatrix, int]:
    rng = trial_rng(cfg.seed, trial, _L1)
    n, r = _draw_n_r(cfg, rng)
    return random_connected_nonneg_symmetric(n, cfg.density, cfg.entry_scale, rng), r


def lemma1_equality_instance(cfg: FuzzConfig, trial: int) -> tuple[SymmetricMatrix, int]:
    rng = trial_rng(cfg.seed, trial, _L1_EQ)
    n, r = _draw_n_r(cfg, rng)
    return constant_rowsum_symmetric(n, cfg.entry_scale, rng), r


def _batched_lemma1(instances) -> list[float]:
    gaps = [0.0] * len(instances)
    by_n: dict[int, list[int]] = {}
    for i, (a, _) in enumerate(instances):
        by_n.setdefault(a.n, []).append(i)
    for n, idx in sorted(by_n.items()):
        stack = np.stack([instances[i][0].entries for i in idx])
        r = np.array([instances[i][1] for i in idx], dtype=np.float64)
        for k, g in zip(idx, _lemma1_gaps(stack, r)):
            gaps[k] = float(g)
    return gaps


def _lemma_tags(a: np.ndarray, r: int) -> dict:
    rs = a.sum(axis=1)
    return {"r": r, "n": a.shape[0], "rowsum_spread": float(rs.max() - rs.min())}


def fuzz_lemma1(cfg: FuzzConfig, chunk: int = 2000) -> FuzzSummary:
    """Inequality, equality (constant row sums) and strictness (spread row sums) checks.

    Violation kinds: ``inequality`` (gap below -tol*scale), ``equality``
    (constant-rowsum instance with |gap| > tol*scale) and ``strictness``
    (row-sum spread >= entry_scale/2 but gap <= 1e-6*scale).
    """
    summary = FuzzSummary("lemma1", cfg)
    tol = cfg.tolerance
    spread_margin = 0.5 * cfg.entry_scale
    for start in range(0, cfg.trials, chunk):
        trials = range(start, min(cfg.trials, start + chunk))
        main = [lemma1_instance(cfg, t) for t in trials]
        for t, (a, r), gap in zip(trials, main, _batched_lemma1(main)):
            x = a.entries
            scale = 1.0 + float(np.linalg.norm(x))
            _classify(summary, t, gap, scale, tol, lambda: digest(x, np.array([r])), lambda: _lemma_tags(x, r))
            rs = x.sum(axis=1)
            if cfg.entry_scale > 0 and rs.max() - rs.min() >= spread_margin:
                summary.bump("strict_checks")
                if not gap > STRICT_TOL * scale:
                    summary.violations.append(FuzzRecord(t, "strictness", gap, scale, digest(x, np.array([r])), _lemma_tags(x, r)))
        eq = [lemma1_equality_instance(cfg, t) for t in trials]
        for t, (a, r), gap in zip(trials, eq, _batched_lemma1(eq)):
            x = a.entries
            scale = 1.0 + float(np.linalg.norm(x))
            summary.bump("equality_checks")
            summary._observe(gap)
            if abs(gap) > tol * scale:
                summary.violations.append(FuzzRecord(t, "equality", gap, scale, digest(x, np.array([r])), _lemma_tags(x, r)))
    summary.bump("inequality_checks", cfg.trials)
    return summary.finish()


# bounds versus exact chromatic number


def _graph_spectra(graphs: list[Graph]) -> tuple[list[Spectrum], list[Spectrum]]:
    """Adjacency and Laplacian spectra of many graphs, batched by order."""
    sa: list[Spectrum | None] = [None] * len(graphs)
    sl: list[Spectrum | None] = [None] * len(graphs)
    by_n: dict[int, list[int]] = {}
    for i, g in enumerate(graphs):
        by_n.setdefault(g.n, []).append(i)
    for n, idx in sorted(by_n.items()):
        adj = np.stack([adjacency_array(graphs[i]) for i in idx])
        lap = -adj.copy()
        d = np.arange(n)
        lap[:, d, d] = adj.sum(axis=2)
        av, ar = symmetric_eigenvalues(adj)
        lv, lr = symmetric_eigenvalues(lap)
        for k, i in enumerate(idx):
            sa[i] = Spectrum(av[k], float(ar[k]))
            sl[i] = Spectrum(lv[k], float(lr[k]))
    return sa, sl


def bounds_vs_chi_graphs(cfg: FuzzConfig, exhaustive_max_n: int = 6):
    """(label, trial, graph) triples: every labeled graph with an edge up to
    ``exhaustive_max_n`` vertices, then ``cfg.trials`` G(n, p) samples."""
    out = []
    t = 0
    for n in range(2, exhaustive_max_n + 1):
        for g in all_labeled_graphs(n):
            if g.m:
                out.append(("exhaustive", t, g))
            t += 1
    for trial in range(cfg.trials):
        out.append(("gnp", trial, bounds_vs_chi_sample(cfg, trial)))
    return out


def bounds_vs_chi_sample(cfg: FuzzConfig, trial: int) -> Graph:
    rng = trial_rng(cfg.seed, trial, _BVC)
    n = int(rng.integers(cfg.n_range[0], cfg.n_range[1] + 1))
    p = float(rng.uniform(0.1, 0.9))
    return gnp(n, p, int(rng.integers(0, 2**63)))


def fuzz_bounds_vs_chi(cfg: FuzzConfig, exhaustive_max_n: int = 6, budget: int = DEFAULT_BUDGET) -> FuzzSummary:
    """Both chromatic bounds, rounded up, must not exceed the exact chromatic number.

    Near-equality records (|nikiforov - chi| <= 1e-6) carry the regularity
    witness for the solver's optimal coloring.
    """
    summary = FuzzSummary("bounds-vs-chi", cfg)
    items = [it for it in bounds_vs_chi_graphs(cfg, exhaustive_max_n) if it[2].m]
    graphs = [g for _, _, g in items]
    for start in range(0, len(graphs), 5000):
        block = graphs[start:start + 5000]
        sa, sl = _graph_spectra(block)
        for (label, t, g), a, l in zip(items[start:start + 5000], sa, sl):
            summary.trials_run += 1
            summary.bump(f"{label}_graphs")
            denom = l.mu - a.mu
            if denom <= 1e-9:
                summary.violations.append(FuzzRecord(t, "denominator", denom, 1.0, emit_graph6(g), {"source": label}))
                continue
            hoff = hoffman_value(a.mu, a.mu_min)
            nik = nikiforov_value(a.mu, l.mu)
            res = chromatic_number_exact(g, budget)
            if not res.exact:
                summary.bump("chi_unknown")
                continue
            chi = res.chi
            gap = chi - max(ceil_bound(hoff), ceil_bound(nik))
            summary._observe(float(gap))
            tags = {"source": label, "n": g.n, "graph6": emit_graph6(g), "chi": chi,
                    "hoffman": hoff, "nikiforov": nik}
            if gap < 0:
                summary.violations.append(FuzzRecord(t, "bound-exceeds-chi", float(gap), 1.0, emit_graph6(g), tags))
            if abs(nik - chi) <= EQUALITY_TOL:
                w = equality_witness(g, res.coloring, a, TAU_TOL)
                regular, _ = is_regular(g)
                tags.update(connected=is_connected(g), regular=regular,
                            characterization_holds=w.characterization_holds)
                summary.near_equality.append(FuzzRecord(t, label, nik - chi, 1.0, emit_graph6(g), tags))
                summary.bump("near_equality_characterized" if w.characterization_holds else "near_equality_uncharacterized")
    return summary.finish()


# signless-Laplacian equivalence


def signless_sample(cfg: FuzzConfig, trial: int) -> Graph:
    """Even trials: connected bipartite; odd trials: connected random graph."""
    rng = trial_rng(cfg.seed, trial, _SGN)
    n = int(rng.integers(max(2, cfg.n_range[0]), max(2, cfg.n_range[1]) + 1))
    p = float(rng.uniform(0.05, 0.6))
    if trial % 2 == 0:
        return random_connected_bipartite(n, p, rng)
    return random_connected_graph(n, p, rng)


def fuzz_signless(cfg: FuzzConfig, exhaustive_max_n: int = 6, tol: float = SIGNLESS_TOL) -> FuzzSummary:
    """mu(D + A) - mu(D - A) <= tol * (1 + mu(D + A)) exactly for the bipartite connected graphs."""
    summary = FuzzSummary("signless", cfg)
    items = []
    t = 0
    for n in range(2, exhaustive_max_n + 1):
        for g in all_labeled_graphs(n):
            if is_connected(g):
                items.append(("exhaustive", t, g))
            t += 1
    items += [("random", trial, signless_sample(cfg, trial)) for trial in range(cfg.trials)]
    for start in range(0, len(items), 5000):
        block = items[start:start + 5000]
        by_n: dict[int, list[int]] = {}
        for i, (_, _, g) in enumerate(block):
            by_n.setdefault(g.n, []).append(i)
        for n, idx in sorted(by_n.items()):
            adj = np.stack([adjacency_array(block[i][2]) for i in idx])
            deg = adj.sum(axis=2)
            d = np.arange(n)
            q = adj.copy()
            q[:, d, d] = deg
            lap = -adj
            lap[:, d, d] = deg
            qv, _ = symmetric_eigenvalues(q)
            lv, _ = symmetric_eigenvalues(lap)
            for k, i in enumerate(idx):
                label, trial, g = block[i]
                gap = float(qv[k, 0] - lv[k, 0])
                scale = 1.0 + float(qv[k, 0])
                bip = bool(is_bipartite(g))
                zero = gap <= tol * scale
                summary.trials_run += 1
                summary.bump(f"{label}_{'bipartite' if bip else 'nonbipartite'}")
                summary._observe(gap)
                if zero != bip:
                    summary.violations.append(FuzzRecord(trial, label, gap, scale, emit_graph6(g),
                                                         {"bipartite": bip, "graph6": emit_graph6(g)}))
    return summary.finish()


# equality explorer

FAMILIES = (
    "random",
    "bipartite, r=2, B=0",
    "bipartite, r=2, B=D",
    "coloring, r=chi, B=D",
    "complete, singleton parts, B=0",
)


def explore_instance(cfg: FuzzConfig, family: str, trial: int):
    """(A, partition, B) for one member of a targeted family."""
    fam = FAMILIES.index(family)
    if fam == 0:
        return theorem1_instance(cfg, trial)
    rng = trial_rng(cfg.seed, trial, _EXP * 16 + fam)
    lo = max(2, cfg.n_range[0])
    hi = max(lo, cfg.n_range[1])
    n = int(rng.integers(lo, hi + 1))
    if fam == 4:
        n = lo + trial % (hi - lo + 1)
        g = complete(n)
        part = BlockPartition(tuple(range(n)), n)
        return HermitianMatrix.from_real(adjacency_array(g)), part, SymmetricMatrix.diagonal(np.zeros(n))
    if fam in (1, 2):
        g = random_connected_bipartite(n, float(rng.uniform(0.1, 0.7)), rng)
        side = is_bipartite(g).side
        part = BlockPartition(side, 2)
    else:
        g = random_connected_graph(n, float(rng.uniform(0.1, 0.7)), rng)
        col = chromatic_number_exact(g).coloring
        part = BlockPartition(col.color_of, col.k)
    a = adjacency_array(g)
    b = np.diag(a.sum(axis=1)) if fam in (2, 3) else np.zeros((n, n))
    return HermitianMatrix.from_real(a), part, SymmetricMatrix(b)


@dataclass
class ExploreResult:
    config: FuzzConfig
    top: list[FuzzRecord]
    per_family: dict

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "per_family": self.per_family,
            "top": [r.to_dict() for r in self.top],
        }


def explore_equality(cfg: FuzzConfig, top_k: int = 10) -> ExploreResult:
    """Rank instances of the block inequality by how close they come to equality.

    Gaps within tolerance count as zero; ties are broken by trial index, then
    family, so the families interleave.  Exploratory output only.
    """
    records = []
    per_family = {}
    for fam, family in enumerate(FAMILIES):
        trials = cfg.trials
        if fam == 4:
            lo = max(2, cfg.n_range[0])
            trials = min(cfg.trials, max(lo, cfg.n_range[1]) - lo + 1)
        instances = [explore_instance(cfg, family, t) for t in range(trials)]
        gaps = _theorem1_gaps(instances)
        near = 0
        for t, (a, part, b), gap in zip(range(trials), instances, gaps):
            scale = _scale(a.entries, b.entries)
            effective = 0.0 if abs(gap) <= cfg.tolerance * scale else gap
            near += effective == 0.0
            records.append(((effective, t, fam), t, family, a, part, b, gap, scale))
        per_family[family] = {"instances": trials, "near_equality": near}
    records.sort(key=lambda rec: rec[0])
    top = []
    for _, t, family, a, part, b, gap, scale in records[:top_k]:
        top.append(FuzzRecord(t, family, gap, scale, digest(a.entries, b.entries, np.asarray(part.part_of)),
                              _theorem1_tags(family, a.entries, part, b.entries)))
    return ExploreResult(cfg, top, per_family)
