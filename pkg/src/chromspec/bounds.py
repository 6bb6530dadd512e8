"""Spectral chromatic bounds, the ratio bound, and the matrix-inequality gaps."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coloring import (
    DEFAULT_BUDGET,
    TAU_TOL,
    ChromaticResult,
    EqualityReport,
    IndependenceResult,
    chromatic_number_exact,
    equality_witness,
    independence_number_exact,
)
from .graph import (
    Graph,
    adjacency_matrix,
    components,
    is_connected,
    is_regular,
    laplacian,
    signless_laplacian,
)
from .linalg import (
    BlockPartition,
    HermitianMatrix,
    Spectrum,
    SymmetricMatrix,
    eigen_symmetric,
    hermitian_eigenvalues,
    symmetric_eigenvalues,
    validate_block_zero,
)

CEIL_SLACK = 1e-9
DENOM_TOL = 1e-9


class UndefinedBoundError(ValueError):
    """The bound is not defined for this input (e.g. a graph without edges)."""


def ceil_bound(value: float) -> int:
    """Integer lower bound that floating noise cannot push past the true value."""
    return math.ceil(value - CEIL_SLACK)


def _require_edges(g: Graph) -> None:
    if g.m == 0:
        raise UndefinedBoundError("spectral chromatic bounds need a graph with at least one edge")


def hoffman_value(mu_a: float, mu_min_a: float) -> float:
    return 1.0 + mu_a / (-mu_min_a)


def nikiforov_value(mu_a: float, mu_l: float) -> float:
    denom = mu_l - mu_a
    if denom <= DENOM_TOL:
        raise ArithmeticError(f"mu(L) - mu(A) = {denom!r} is not positive")
    return 1.0 + mu_a / denom


def hoffman_bound(g: Graph) -> float:
    """1 + mu(A) / (-mu_min(A))."""
    _require_edges(g)
    s = eigen_symmetric(adjacency_matrix(g))
    return hoffman_value(s.mu, s.mu_min)


def nikiforov_bound(g: Graph) -> float:
    """1 + mu(A) / (mu(L) - mu(A)), the Laplacian bound."""
    _require_edges(g)
    mu_a = eigen_symmetric(adjacency_matrix(g)).mu
    mu_l = eigen_symmetric(laplacian(g)).mu
    return nikiforov_value(mu_a, mu_l)


def ratio_bound_alpha(g: Graph) -> float:
    """n * tau / (k + tau) for a k-regular graph, tau = |mu_min(A)|."""
    regular, k = is_regular(g)
    if not regular:
        raise ValueError("the ratio bound needs a regular graph")
    if k < 1:
        raise ValueError("the ratio bound needs degree k >= 1")
    tau = abs(eigen_symmetric(adjacency_matrix(g)).mu_min)
    return g.n * tau / (k + tau)


def theorem1_gap(a: HermitianMatrix | SymmetricMatrix, partition: BlockPartition, b: SymmetricMatrix) -> float:
    """mu(B - A) - mu(B + A/(r-1)); nonnegative whenever A has zero diagonal blocks."""
    if isinstance(a, SymmetricMatrix):
        a = HermitianMatrix.from_real(a)
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: A is {a.n}, B is {b.n}")
    if not b.is_diagonal():
        raise ValueError("B must be a real diagonal matrix")
    if partition.r < 2:
        raise ValueError("need r >= 2 blocks")
    if not validate_block_zero(a, partition):
        raise ValueError("A has a nonzero entry inside a diagonal block")
    pair = np.stack([b.entries - a.entries, b.entries + a.entries / (partition.r - 1)])
    values, _ = hermitian_eigenvalues(pair)
    return float(values[0, 0] - values[1, 0])


def _support_connected(a: np.ndarray) -> bool:
    n = a.shape[0]
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in np.flatnonzero(a[u]):
            if v not in seen:
                seen.add(int(v))
                stack.append(int(v))
    return len(seen) == n


def lemma1_gap(a: SymmetricMatrix, r: int) -> float:
    """mu(R + A/(r-1)) - r/(r-1) * mu(A) with R the diagonal of row sums."""
    if r < 2:
        raise ValueError("need r >= 2")
    x = a.entries
    if np.any(x < 0):
        raise ValueError("A must be entrywise nonnegative")
    if not _support_connected(x):
        raise ValueError("A must be irreducible (connected support)")
    return _lemma1_gaps(x[None], np.array([r]))[0]


def _lemma1_gaps(stack: np.ndarray, r: np.ndarray) -> np.ndarray:
    rowsum = stack.sum(axis=2)
    n = stack.shape[1]
    idx = np.arange(n)
    left = stack / (r - 1.0)[:, None, None]
    left[:, idx, idx] += rowsum
    lv, _ = symmetric_eigenvalues(left)
    av, _ = symmetric_eigenvalues(stack)
    return lv[:, 0] - r / (r - 1.0) * av[:, 0]


def signless_gap(g: Graph) -> float:
    """mu(D + A) - mu(D - A) for a connected graph; zero exactly for bipartite graphs."""
    if not is_connected(g):
        raise ValueError("signless_gap needs a connected graph")
    values, _ = symmetric_eigenvalues(np.stack([signless_laplacian(g).entries, laplacian(g).entries]))
    return float(values[0, 0] - values[1, 0])


@dataclass(frozen=True)
class GraphSpectra:
    adjacency: Spectrum
    laplacian: Spectrum

    @classmethod
    def of(cls, g: Graph) -> "GraphSpectra":
        return cls(eigen_symmetric(adjacency_matrix(g)), eigen_symmetric(laplacian(g)))


@dataclass(frozen=True)
class BoundReport:
    n: int
    m: int
    connected: bool
    mu_A: float
    mu_min_A: float
    mu_L: float
    hoffman: float | None
    hoffman_ceil: int | None
    nikiforov: float | None
    nikiforov_ceil: int | None
    chi: ChromaticResult | None = None
    alpha: IndependenceResult | None = None
    ratio_bound: float | None = None
    equality: EqualityReport | None = None

    @property
    def chi_exact(self) -> int | None:
        return self.chi.chi if self.chi is not None else None

    @property
    def alpha_exact(self) -> int | None:
        return self.alpha.alpha if self.alpha is not None else None

    @property
    def defined(self) -> bool:
        return self.hoffman is not None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "connected": self.connected,
            "mu_A": self.mu_A,
            "mu_min_A": self.mu_min_A,
            "mu_L": self.mu_L,
            "hoffman": self.hoffman,
            "hoffman_ceil": self.hoffman_ceil,
            "nikiforov": self.nikiforov,
            "nikiforov_ceil": self.nikiforov_ceil,
            "chi": self.chi.to_dict() if self.chi is not None else None,
            "alpha": self.alpha.to_dict() if self.alpha is not None else None,
            "ratio_bound": self.ratio_bound,
            "equality": self.equality.to_dict() if self.equality is not None else None,
        }


def bound_report(
    g: Graph,
    *,
    compute_chi: bool = True,
    compute_alpha: bool = False,
    compute_equality: bool = False,
    budget: int = DEFAULT_BUDGET,
    tau_tol: float = TAU_TOL,
    spectra: GraphSpectra | None = None,
) -> BoundReport:
    """Every bound for ``g`` from one pair of spectra, plus the requested exact values.

    Edgeless graphs get ``None`` for both chromatic bounds.  An exhausted
    solver budget shows up as an "unknown" chi/alpha, never as an error.
    """
    spectra = spectra or GraphSpectra.of(g)
    sa, sl = spectra.adjacency, spectra.laplacian
    hoff = nik = None
    if g.m:
        hoff = hoffman_value(sa.mu, sa.mu_min)
        nik = nikiforov_value(sa.mu, sl.mu)
    chi = chromatic_number_exact(g, budget) if (compute_chi or compute_equality) else None
    alpha = independence_number_exact(g, budget) if compute_alpha else None
    ratio = None
    regular, k = is_regular(g)
    if regular and k:
        tau = abs(sa.mu_min)
        ratio = g.n * tau / (k + tau)
    equality = None
    if compute_equality and chi is not None and chi.exact:
        equality = equality_witness(g, chi.coloring, sa, tau_tol)
    return BoundReport(
        n=g.n,
        m=g.m,
        connected=len(components(g)) == 1,
        mu_A=sa.mu,
        mu_min_A=sa.mu_min,
        mu_L=sl.mu,
        hoffman=hoff,
        hoffman_ceil=ceil_bound(hoff) if hoff is not None else None,
        nikiforov=nik,
        nikiforov_ceil=ceil_bound(nik) if nik is not None else None,
        chi=chi if compute_chi or compute_equality else None,
        alpha=alpha,
        ratio_bound=ratio,
        equality=equality,
    )
