"""Spectral lower bounds on the chromatic number and checks of the inequalities behind them."""

from .bounds import (
    BoundReport,
    UndefinedBoundError,
    bound_report,
    hoffman_bound,
    lemma1_gap,
    nikiforov_bound,
    ratio_bound_alpha,
    signless_gap,
    theorem1_gap,
)
from .coloring import (
    EqualityReport,
    chromatic_number_exact,
    equality_witness,
    greedy_upper,
    independence_number_exact,
)
from .graph import Coloring, Graph, adjacency_matrix, coloring_partition, laplacian, signless_laplacian
from .linalg import (
    BlockPartition,
    ConvergenceError,
    HermitianMatrix,
    Spectrum,
    SymmetricMatrix,
    eigen_hermitian,
    eigen_symmetric,
)

__version__ = "0.1.0"

__all__ = [
    "BlockPartition",
    "BoundReport",
    "Coloring",
    "ConvergenceError",
    "EqualityReport",
    "Graph",
    "HermitianMatrix",
    "Spectrum",
    "SymmetricMatrix",
    "UndefinedBoundError",
    "adjacency_matrix",
    "bound_report",
    "chromatic_number_exact",
    "coloring_partition",
    "eigen_hermitian",
    "eigen_symmetric",
    "equality_witness",
    "greedy_upper",
    "hoffman_bound",
    "independence_number_exact",
    "laplacian",
    "lemma1_gap",
    "nikiforov_bound",
    "ratio_bound_alpha",
    "signless_gap",
    "signless_laplacian",
    "theorem1_gap",
]
