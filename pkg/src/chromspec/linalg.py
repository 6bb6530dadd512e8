"""Dense symmetric/Hermitian matrices and a Jacobi eigensolver.

The solver takes stacks of equally sized matrices so that fuzz campaigns can
push thousands of small instances through one compiled call.
"""

from __future__ import annotations

from dataclasses import dataclass
import numpy as np
from numba import njit

MAX_DIM = 1024
MAX_SWEEPS = 100
CONVERGENCE_TOL = 1e-12


class ConvergenceError(RuntimeError):
    """Raised when Jacobi sweeps do not reduce the off-diagonal part in time."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


def _check_square(a: np.ndarray, what: str) -> int:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{what} must be square, got shape {a.shape}")
    n = a.shape[0]
    if n < 1:
        raise ValueError(f"{what} must have dimension >= 1")
    if n > MAX_DIM:
        raise ValueError(f"{what} dimension {n} exceeds limit {MAX_DIM}")
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{what} has non-finite entries")
    return n


@dataclass(frozen=True, eq=False)
class SymmetricMatrix:
    """Real symmetric matrix; symmetry is checked exactly on construction."""

    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=np.float64)
        _check_square(a, "SymmetricMatrix")
        if not np.array_equal(a, a.T):
            raise ValueError("SymmetricMatrix entries are not symmetric")
        object.__setattr__(self, "entries", _readonly(a))

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def diagonal(cls, values) -> "SymmetricMatrix":
        return cls(np.diag(np.asarray(values, dtype=np.float64)))

    def is_diagonal(self) -> bool:
        off = self.entries - np.diag(np.diag(self.entries))
        return not np.any(off)

    def trace(self) -> float:
        return float(np.trace(self.entries))

    def __eq__(self, other):
        if not isinstance(other, SymmetricMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash(self.entries.tobytes())


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """Complex Hermitian matrix (real diagonal, conjugate-symmetric)."""

    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=np.complex128)
        _check_square(a, "HermitianMatrix")
        if not np.array_equal(a, a.conj().T):
            raise ValueError("HermitianMatrix entries are not Hermitian")
        object.__setattr__(self, "entries", _readonly(a))

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def from_real(cls, m: SymmetricMatrix | np.ndarray) -> "HermitianMatrix":
        a = m.entries if isinstance(m, SymmetricMatrix) else np.asarray(m)
        return cls(a.astype(np.complex128))

    @property
    def is_real(self) -> bool:
        return not np.any(self.entries.imag)

    def frobenius(self) -> float:
        return float(np.linalg.norm(self.entries))

    def __eq__(self, other):
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash(self.entries.tobytes())


@dataclass(frozen=True)
class BlockPartition:
    """Assignment of indices 0..n-1 to r non-empty parts."""

    part_of: tuple[int, ...]
    r: int

    def __post_init__(self):
        part_of = tuple(int(p) for p in self.part_of)
        object.__setattr__(self, "part_of", part_of)
        if len(part_of) < 1:
            raise ValueError("partition of an empty index set")
        if self.r < 2:
            raise ValueError(f"a block partition needs r >= 2 parts, got {self.r}")
        used = set(part_of)
        if any(p < 0 or p >= self.r for p in used):
            raise ValueError(f"part ids must lie in [0, {self.r})")
        if len(used) != self.r:
            missing = sorted(set(range(self.r)) - used)
            raise ValueError(f"empty parts {missing}; reduce r instead")

    @property
    def n(self) -> int:
        return len(self.part_of)

    @classmethod
    def from_parts(cls, parts, n: int | None = None) -> "BlockPartition":
        if n is None:
            n = sum(len(p) for p in parts)
        part_of = [-1] * n
        for pid, part in enumerate(parts):
            for j in part:
                if part_of[j] != -1:
                    raise ValueError(f"index {j} assigned twice")
                part_of[j] = pid
        if -1 in part_of:
            raise ValueError(f"index {part_of.index(-1)} is not assigned")
        return cls(tuple(part_of), len(parts))

    def parts(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.r)]
        for j, p in enumerate(self.part_of):
            out[p].append(j)
        return out

    def sizes(self) -> list[int]:
        return [len(p) for p in self.parts()]


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues sorted in descending order plus the solver residual."""

    values: np.ndarray
    residual: float = 0.0

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        if v.ndim != 1 or v.size == 0:
            raise ValueError("a spectrum needs a non-empty 1-d value array")
        if np.any(v[:-1] < v[1:]):
            raise ValueError("spectrum values must be sorted descending")
        object.__setattr__(self, "values", _readonly(v))

    def __len__(self):
        return self.values.size

    @property
    def mu(self) -> float:
        return float(self.values[0])

    @property
    def mu_min(self) -> float:
        return float(self.values[-1])


@njit(cache=True)
def _jacobi_kernel(stack, tol, max_sweeps):
    batch, n, _ = stack.shape
    values = np.empty((batch, n))
    residual = np.empty(batch)
    converged = np.ones(batch, dtype=np.bool_)
    for b in range(batch):
        a = stack[b].copy()
        threshold = tol * (1.0 + np.sqrt(np.sum(a * a)))
        sweeps = 0
        while True:
            off = 0.0
            for i in range(n):
                for j in range(n):
                    if i != j:
                        off += a[i, j] * a[i, j]
            if np.sqrt(off) < threshold:
                break
            if sweeps == max_sweeps:
                converged[b] = False
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if apq == 0.0:
                        continue
                    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                    c = 1.0 / np.sqrt(t * t + 1.0)
                    s = t * c
                    for k in range(n):
                        akp = a[k, p]
                        akq = a[k, q]
                        a[k, p] = c * akp - s * akq
                        a[k, q] = s * akp + c * akq
                    for k in range(n):
                        apk = a[p, k]
                        aqk = a[q, k]
                        a[p, k] = c * apk - s * aqk
                        a[q, k] = s * apk + c * aqk
                    a[p, q] = 0.0
                    a[q, p] = 0.0
            sweeps += 1
        worst = 0.0
        for i in range(n):
            values[b, i] = a[i, i]
            for j in range(n):
                if i != j and abs(a[i, j]) > worst:
                    worst = abs(a[i, j])
        residual[b] = worst
    return values, residual, converged


def symmetric_eigenvalues(stack, max_sweeps: int = MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues of every matrix in a (batch, n, n) stack of real symmetric matrices.

    Cyclic Jacobi, row by row, until the off-diagonal Frobenius norm falls
    below 1e-12 * (1 + ||M||_F).  Returns ``(values, residuals)`` with values
    of shape (batch, n) sorted descending per row; residuals are the largest
    off-diagonal magnitudes left at convergence.  Each matrix is processed
    independently, so a result never depends on its batch neighbours.
    """
    a = np.array(stack, dtype=np.float64, copy=True)
    if a.ndim == 2:
        a = a[None]
    if a.ndim != 3 or a.shape[1] != a.shape[2]:
        raise ValueError(f"expected a (batch, n, n) stack, got shape {a.shape}")
    n = a.shape[1]
    if a.shape[0] == 0:
        return np.zeros((0, n)), np.zeros(0)
    if n > MAX_DIM:
        raise ValueError(f"dimension {n} exceeds limit {MAX_DIM}")
    values, residual, converged = _jacobi_kernel(np.ascontiguousarray(a), CONVERGENCE_TOL, max_sweeps)
    if not converged.all():
        bad = np.flatnonzero(~converged)
        raise ConvergenceError(
            f"Jacobi did not converge in {max_sweeps} sweeps for {bad.size} of {a.shape[0]} matrices",
            residual=float(residual[bad].max()),
        )
    return -np.sort(-values, axis=1), residual


def _embed(stack: np.ndarray) -> np.ndarray:
    x = stack.real
    y = stack.imag
    top = np.concatenate([x, -y], axis=2)
    bottom = np.concatenate([y, x], axis=2)
    return np.concatenate([top, bottom], axis=1)


def hermitian_eigenvalues(stack, max_sweeps: int = MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray]:
    """Batched eigenvalues of complex Hermitian matrices.

    ``X + iY`` is embedded as the real symmetric ``[[X, -Y], [Y, X]]`` whose
    spectrum is that of the original with every value doubled; consecutive
    pairs of the sorted doubled spectrum are averaged.
    """
    h = np.asarray(stack, dtype=np.complex128)
    if h.ndim == 2:
        h = h[None]
    batch, n = h.shape[0], h.shape[1]
    if not np.any(h.imag):
        return symmetric_eigenvalues(h.real, max_sweeps)
    values, residual = symmetric_eigenvalues(_embed(h), max_sweeps)
    paired = 0.5 * (values[:, 0::2] + values[:, 1::2])
    return paired.reshape(batch, n), residual


def eigen_symmetric(m: SymmetricMatrix) -> Spectrum:
    values, residual = symmetric_eigenvalues(m.entries[None])
    return Spectrum(values[0], float(residual[0]))


def eigen_hermitian(m: HermitianMatrix) -> Spectrum:
    values, residual = hermitian_eigenvalues(m.entries[None])
    return Spectrum(values[0], float(residual[0]))


def validate_block_zero(a: HermitianMatrix | SymmetricMatrix, partition: BlockPartition) -> bool:
    """True iff every entry whose row and column share a part is zero."""
    if a.n != partition.n:
        raise ValueError(f"dimension mismatch: matrix {a.n}, partition {partition.n}")
    part = np.asarray(partition.part_of)
    same = part[:, None] == part[None, :]
    return not np.any(a.entries[same])


def scaled_combination(b: SymmetricMatrix, a: HermitianMatrix | SymmetricMatrix, c: float) -> HermitianMatrix:
    """Entrywise ``B + c*A`` for diagonal ``B``."""
    if b.n != a.n:
        raise ValueError(f"dimension mismatch: B is {b.n}, A is {a.n}")
    if not b.is_diagonal():
        raise ValueError("B must be diagonal")
    out = b.entries.astype(np.complex128) + c * np.asarray(a.entries, dtype=np.complex128)
    # c*conj(z) and conj(c*z) agree bitwise, so symmetry survives; the diagonal of A may be nonzero
    return HermitianMatrix(out)
