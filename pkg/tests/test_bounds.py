import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from chromspec import graph as gr
from chromspec.bounds import (
    UndefinedBoundError,
    bound_report,
    ceil_bound,
    hoffman_bound,
    lemma1_gap,
    nikiforov_bound,
    nikiforov_value,
    ratio_bound_alpha,
    signless_gap,
    theorem1_gap,
)
from chromspec.coloring import chromatic_number_exact
from chromspec.linalg import BlockPartition, HermitianMatrix, SymmetricMatrix, eigen_symmetric


def adj(g):
    return SymmetricMatrix(gr.adjacency_array(g))


def zeros(n):
    return SymmetricMatrix.diagonal([0.0] * n)


def test_hoffman_examples():
    assert hoffman_bound(gr.complete(2)) == pytest.approx(2.0, abs=1e-12)
    assert hoffman_bound(gr.petersen()) == pytest.approx(2.5, abs=1e-9)
    # K_10 - e is K_{1x8,2}; quotient matrix gives mu = (7 + sqrt 113)/2
    mu = (7 + math.sqrt(113)) / 2
    mu_min = (7 - math.sqrt(113)) / 2
    assert hoffman_bound(gr.complete_minus_edge(10)) == pytest.approx(1 + mu / -mu_min, abs=1e-9)
    assert hoffman_bound(gr.complete_minus_edge(10)) == pytest.approx(5.857, abs=1e-3)


def test_nikiforov_examples():
    for n in range(2, 10):
        assert nikiforov_bound(gr.complete(n)) == pytest.approx(n, abs=1e-9)
    mu = (1 + math.sqrt(17)) / 2
    d = nikiforov_bound(gr.complete_minus_edge(4))
    assert d == pytest.approx(1 + mu / (4 - mu), abs=1e-9)
    assert d == pytest.approx(2.7808, abs=1e-4) and ceil_bound(d) == 3
    w = gr.wheel(100)
    mu_w = 1 + math.sqrt(101)
    assert eigen_symmetric(gr.adjacency_matrix(w)).mu == pytest.approx(mu_w, abs=1e-9)
    value = nikiforov_bound(w)
    assert value == pytest.approx(1 + mu_w / (101 - mu_w), abs=1e-9)
    assert 1 < value <= 2 and ceil_bound(value) == 2 and ceil_bound(hoffman_bound(w)) == 3


def test_edgeless_is_undefined():
    for f in (hoffman_bound, nikiforov_bound):
        with pytest.raises(UndefinedBoundError):
            f(gr.empty(3))
    with pytest.raises(ArithmeticError):
        nikiforov_value(2.0, 2.0)


def test_ceiling_slack():
    assert ceil_bound(3.0 + 1e-12) == 3
    assert ceil_bound(3.0 - 1e-12) == 3
    assert ceil_bound(3.001) == 4


def test_ratio_bound_examples():
    assert ratio_bound_alpha(gr.petersen()) == pytest.approx(4.0, abs=1e-9)
    c5 = ratio_bound_alpha(gr.cycle(5))
    assert c5 == pytest.approx(math.sqrt(5), abs=1e-9) and math.floor(c5) == 2
    for n in range(2, 9):
        assert ratio_bound_alpha(gr.complete(n)) == pytest.approx(1.0, abs=1e-9)
    with pytest.raises(ValueError):
        ratio_bound_alpha(gr.path(3))
    with pytest.raises(ValueError):
        ratio_bound_alpha(gr.empty(3))


def test_theorem1_examples(rng):
    b = SymmetricMatrix.diagonal(rng.normal(size=5))
    zero = SymmetricMatrix(np.zeros((5, 5)))
    assert theorem1_gap(zero, BlockPartition((0, 1, 2, 0, 1), 3), b) == pytest.approx(0, abs=1e-12)
    c6 = gr.cycle(6)
    assert theorem1_gap(adj(c6), BlockPartition((0, 1) * 3, 2), zeros(6)) == pytest.approx(0, abs=1e-9)
    k3 = adj(gr.complete(3))
    assert theorem1_gap(k3, BlockPartition((0, 1, 2), 3), zeros(3)) == pytest.approx(0, abs=1e-9)
    with pytest.raises(ValueError):
        theorem1_gap(k3, BlockPartition((0, 0, 1), 2), zeros(3))
    with pytest.raises(ValueError):
        theorem1_gap(k3, BlockPartition((0, 1, 2), 3), SymmetricMatrix([[0, 1], [1, 0]]))
    # complex entries go through the Hermitian path
    h = HermitianMatrix([[0, 1j, 0], [-1j, 0, 2], [0, 2, 0]])
    assert theorem1_gap(h, BlockPartition((0, 1, 0), 2), SymmetricMatrix.diagonal([1, 0, -1])) >= -1e-9


def test_lemma1_examples():
    assert lemma1_gap(adj(gr.complete(2)), 2) == pytest.approx(0, abs=1e-12)
    for g in (gr.petersen(), gr.cycle(7), gr.complete(5)):
        for r in range(2, 7):
            assert abs(lemma1_gap(adj(g), r)) <= 1e-9
    # P_3, r = 2: mu([[1,1,0],[1,2,1],[0,1,1]]) = 3, mu(A) = sqrt 2
    p3 = lemma1_gap(adj(gr.path(3)), 2)
    assert p3 == pytest.approx(3 - 2 * math.sqrt(2), abs=1e-9) and p3 > 1e-6
    with pytest.raises(ValueError):
        lemma1_gap(SymmetricMatrix([[0, -1], [-1, 0]]), 2)
    with pytest.raises(ValueError):
        lemma1_gap(adj(gr.disjoint_union(gr.complete(2), gr.complete(2))), 2)
    with pytest.raises(ValueError):
        lemma1_gap(adj(gr.complete(2)), 1)


def test_signless_examples():
    assert signless_gap(gr.complete(2)) == pytest.approx(0, abs=1e-12)
    assert abs(signless_gap(gr.cycle(4))) <= 1e-9
    assert signless_gap(gr.complete(3)) == pytest.approx(1.0, abs=1e-9)
    with pytest.raises(ValueError):
        signless_gap(gr.empty(2))


def test_regular_coincidence():
    for g in (gr.petersen(), gr.cycle(5), gr.cycle(8), gr.complete(6),
              gr.complete_multipartite([2, 2, 2]), gr.complete_bipartite(3, 3)):
        assert abs(hoffman_bound(g) - nikiforov_bound(g)) <= 1e-8


@given(st.integers(2, 9), st.integers(0, 2**36 - 1))
@settings(max_examples=150, deadline=None)
def test_report_invariants_and_derivation(n, mask):
    g = gr.from_edge_mask(n, mask % (1 << (n * (n - 1) // 2)))
    if not g.m:
        return
    rep = bound_report(g)
    assert rep.hoffman == pytest.approx(1 + rep.mu_A / -rep.mu_min_A, rel=1e-12)
    assert rep.mu_L - rep.mu_A > 1e-9
    assert rep.nikiforov == pytest.approx(1 + rep.mu_A / (rep.mu_L - rep.mu_A), rel=1e-12)
    assert rep.hoffman_ceil == math.ceil(rep.hoffman - 1e-9)
    assert rep.chi_exact >= rep.hoffman_ceil and rep.chi_exact >= rep.nikiforov_ceil
    chi = rep.chi_exact
    if chi < 2:
        return
    # retrace the Laplacian bound: theorem gap with B = D, then the lemma on each component
    part = gr.coloring_partition(g, rep.chi.coloring)
    a = gr.adjacency_array(g)
    d = SymmetricMatrix.diagonal(a.sum(axis=1))
    scale = 1 + np.linalg.norm(a) + np.linalg.norm(d.entries)
    assert theorem1_gap(SymmetricMatrix(a), part, d) >= -1e-8 * scale
    for comp in gr.components(g):
        if len(comp) > 1:
            sub = a[np.ix_(comp, comp)]
            assert lemma1_gap(SymmetricMatrix(sub), chi) >= -1e-8 * (1 + np.linalg.norm(sub))


def test_bound_report_examples():
    p = bound_report(gr.petersen(), compute_alpha=True, compute_equality=True)
    assert p.hoffman == pytest.approx(2.5, abs=1e-9) and p.nikiforov == pytest.approx(2.5, abs=1e-9)
    assert (p.hoffman_ceil, p.nikiforov_ceil, p.chi_exact, p.alpha_exact) == (3, 3, 3, 4)
    assert p.ratio_bound == pytest.approx(4.0, abs=1e-9)
    k4 = bound_report(gr.complete(4), compute_alpha=True, compute_equality=True)
    assert k4.nikiforov == pytest.approx(4.0, abs=1e-9) and k4.chi_exact == 4
    assert k4.equality.characterization_holds
    diamond = bound_report(gr.complete_minus_edge(4))
    assert diamond.hoffman == pytest.approx(2.6403, abs=1e-4)
    assert diamond.nikiforov == pytest.approx(2.7808, abs=1e-4)
    assert diamond.nikiforov > diamond.hoffman


def test_bound_report_edgeless_and_disconnected():
    e = bound_report(gr.empty(5))
    assert not e.defined and e.hoffman_ceil is None and e.chi_exact == 1
    two = bound_report(gr.disjoint_union(gr.complete(3), gr.path(2)))
    assert not two.connected and two.nikiforov_ceil <= two.chi_exact == 3
    d = two.to_dict()
    assert d["chi"]["status"] == "exact" and d["alpha"] is None


def test_equality_implies_tight_on_curated_suite():
    graphs = [gr.complete(n) for n in range(2, 8)] + [gr.cycle(4), gr.complete_bipartite(3, 3),
                                                      gr.complete_multipartite([2, 2, 2])]
    for g in graphs:
        rep = bound_report(g, compute_equality=True)
        assert rep.equality.characterization_holds
        assert abs(rep.nikiforov - rep.chi_exact) <= 1e-6
    c5 = bound_report(gr.cycle(5), compute_equality=True)
    assert not c5.equality.characterization_holds and c5.nikiforov < c5.chi_exact - 1e-6
    assert chromatic_number_exact(gr.petersen().remove_edge(0, 1)).chi == 3
