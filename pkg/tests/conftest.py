from itertools import combinations, product

import numpy as np
import pytest
import sympy

ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, name: str, passed: bool, detail: str = "") -> None:
    status = "PASS" if passed else "FAIL"
    ACCEPTANCE_LINES.append(f"[{status}] criterion {number:>2}: {name}" + (f" ({detail})" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# independent oracles: none of these touch the package's solvers


def charpoly_spectrum(matrix) -> np.ndarray:
    """Eigenvalues from the exact integer characteristic polynomial (sympy), descending."""
    m = sympy.Matrix(np.asarray(matrix, dtype=int).tolist())
    lam = sympy.Symbol("lam")
    _, factors = sympy.factor_list(m.charpoly(lam).as_expr(), lam)
    roots = []
    for factor, mult in factors:
        # irreducible factors have simple roots, which nroots handles reliably
        roots += [complex(r).real for r in sympy.Poly(factor, lam).nroots(n=30)] * mult
    return np.array(sorted(roots, reverse=True))


def brute_chromatic(n: int, edges) -> int:
    edges = list(edges)
    if not edges:
        return 1
    for k in range(1, n + 1):
        for colors in product(range(k), repeat=n):
            if all(colors[u] != colors[v] for u, v in edges):
                return k
    return n


def brute_max_clique(n: int, edges) -> int:
    es = {tuple(sorted(e)) for e in edges}
    for size in range(n, 0, -1):
        for sub in combinations(range(n), size):
            if all((a, b) in es for a, b in combinations(sub, 2)):
                return size
    return 0


def reference_graph6(n: int, edges) -> str:
    """Straight-from-the-format encoder: bit string over (0,1),(0,2),(1,2),(0,3),..."""
    es = {tuple(sorted(e)) for e in edges}
    bits = "".join("1" if (i, j) in es else "0" for j in range(1, n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    return chr(n + 63) + "".join(chr(int(bits[k:k + 6], 2) + 63) for k in range(0, len(bits), 6))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
